"""Binomial coefficient combinatorics for the circled-star correction terms.

phi(l, k) is the signed binomial weighting the Whitehead-product correction
of the coordinate-wise group law; phi_delta combines the two cross terms of
a two-coordinate square.  All arithmetic is exact big-integer arithmetic.
"""

from functools import lru_cache
from math import comb

from .abelian import require_prime


@lru_cache(maxsize=None)
def phi(l, k):
    """The four-parity-case signed binomial coefficient, for 1 <= l <= k."""
    if not (1 <= l <= k):
        raise ValueError(f"phi requires 1 <= l <= k, got l={l}, k={k}")
    if l % 2 == 0 and k % 2 == 0:
        return -comb(k // 2, l // 2)
    if l % 2 == 1 and k % 2 == 0:
        return 0
    if l % 2 == 1 and k % 2 == 1:
        return comb((k - 1) // 2, (l - 1) // 2)
    return -comb((k - 1) // 2, l // 2)


def phi_delta(n, m, r=1):
    """Cross-term coefficient for coordinates at positions n and m.

    The sign is the graded-commutation sign of the underlying dimensions
    n*r + 1 and m*r + 1; for r = 1 it reduces to (-1)**((n+1)*(m+1)).
    """
    if n < 1 or m < 1 or r < 1:
        raise ValueError("positions and suspension parameter must be >= 1")
    sign = -1 if ((n * r + 1) * (m * r + 1)) % 2 else 1
    return phi(n, n + m - 1) + sign * phi(m, n + m - 1)


def binom_mod_p(m, n, p):
    """C(m, n) mod p via the base-p digit product, with C(m, n) = 0 for m < n."""
    require_prime(p)
    if m < 0 or n < 0:
        raise ValueError("binom_mod_p requires non-negative arguments")
    result = 1
    while n > 0 or m > 0:
        mi, ni = m % p, n % p
        if mi < ni:
            return 0
        result = (result * comb(mi, ni)) % p
        m //= p
        n //= p
    return result % p


def sum_binom2(M):
    """Sum of C(l, 2) for l = 2 .. M-1; equals C(M, 3)."""
    if M < 2:
        raise ValueError("sum_binom2 requires M >= 2")
    return sum(comb(l, 2) for l in range(2, M))
