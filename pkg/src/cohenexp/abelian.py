"""Finitely generated abelian groups in cyclic-factor form.

A group is an ordered direct sum of cyclic factors; the factor 0 encodes an
infinite cyclic summand and d >= 2 encodes Z_d.  No Smith-form normalization
is performed: two groups are equal only if they are the same descriptor
object.  All arithmetic is exact.
"""

import itertools
import math
from math import gcd

from sympy import isprime

#: Sentinel for infinite element orders / infinite cyclic factors' exponents.
INFINITE = math.inf


class GroupMismatchError(ValueError):
    """Raised when elements of distinct group descriptors are combined."""


def require_prime(p):
    if not isprime(p):
        raise ValueError(f"{p} is not prime")


class FgAbGroup:
    """Direct sum of cyclic groups; immutable after construction."""

    __slots__ = ("factors",)

    def __init__(self, factors):
        factors = tuple(int(d) for d in factors)
        for d in factors:
            if d == 1 or d < 0:
                raise ValueError(f"invalid cyclic factor {d} (need 0 for Z, or d >= 2)")
        object.__setattr__(self, "factors", factors)

    def __setattr__(self, name, value):
        raise AttributeError("FgAbGroup is immutable")

    def __repr__(self):
        if not self.factors:
            return "FgAbGroup(trivial)"
        parts = ["Z" if d == 0 else f"Z_{d}" for d in self.factors]
        return "FgAbGroup(" + " + ".join(parts) + ")"

    @property
    def rank(self):
        return len(self.factors)

    def element(self, coeffs):
        return GroupElement(self, coeffs)

    def zero(self):
        return GroupElement(self, (0,) * self.rank)

    def is_finite(self):
        return all(d != 0 for d in self.factors)

    def elements(self):
        """Iterate over all elements; only valid for finite groups."""
        if not self.is_finite():
            raise ValueError("cannot enumerate an infinite group")
        for coeffs in itertools.product(*(range(d) for d in self.factors)):
            yield GroupElement(self, coeffs)

    def p_exponent(self, p):
        """Largest power of p dividing any finite factor; 1 if no p-torsion."""
        require_prime(p)
        best = 1
        for d in self.factors:
            if d == 0:
                continue
            q = 1
            while d % p == 0:
                d //= p
                q *= p
            best = max(best, q)
        return best


class GroupElement:
    """An element of an FgAbGroup, coefficients reduced modulo finite factors."""

    __slots__ = ("group", "coeffs")

    def __init__(self, group, coeffs):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != group.rank:
            raise ValueError(
                f"coefficient vector of length {len(coeffs)} for a group of rank {group.rank}"
            )
        coeffs = tuple(c if d == 0 else c % d for c, d in zip(coeffs, group.factors))
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("GroupElement is immutable")

    def __repr__(self):
        return f"GroupElement{self.coeffs!r}"

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.group is other.group and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.group), self.coeffs))

    def _check_same_group(self, other):
        if self.group is not other.group:
            raise GroupMismatchError("elements belong to different groups")

    def __add__(self, other):
        self._check_same_group(other)
        return GroupElement(self.group, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return GroupElement(self.group, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, n):
        return GroupElement(self.group, tuple(n * c for c in self.coeffs))

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def order(self):
        """Least M >= 1 with M * self = 0, or INFINITE."""
        result = 1
        for c, d in zip(self.coeffs, self.group.factors):
            if d == 0:
                if c != 0:
                    return INFINITE
                continue
            result = math.lcm(result, d // gcd(d, c))
        return result
