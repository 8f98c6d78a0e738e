"""The circled-star group law on tuples of homotopy coordinates.

Elements are tuples (a_1, ..., a_N) of formal classes, one per coordinate
slot of a target model.  Multiplication is coordinatewise addition plus the
binomially weighted Whitehead corrections

    (a * b)_j = a_j + b_j + sum_{i+s=j} phi(i, j-1) [a_i, b_s],

and everything downstream (inverses, powers, orders, exponent certificates)
is exact integer arithmetic over that law.
"""

import math
from math import comb, gcd

from .abelian import INFINITE, require_prime
from .exponents import ExponentValue
from .phi import phi, phi_delta
from .whitehead import FormalClass, Generator, ModelMismatchError, TargetModel


class CohenElement:
    """A tuple of formal classes indexed by the model's coordinate slots."""

    __slots__ = ("model", "coords")

    def __init__(self, model, coords):
        coords = tuple(coords)
        if len(coords) != model.truncation:
            raise ValueError(
                f"expected {model.truncation} coordinates, got {len(coords)}"
            )
        for j, cls in enumerate(coords, start=1):
            if cls.dimension != model.slot_dimension(j):
                raise ValueError(
                    f"slot {j}: class dimension {cls.dimension} != {model.slot_dimension(j)}"
                )
            model.validate_class(cls)
        object.__setattr__(self, "model", model)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("CohenElement is immutable")

    def coord(self, j):
        """1-based coordinate access."""
        if not (1 <= j <= self.model.truncation):
            raise IndexError(f"slot {j} out of range 1..{self.model.truncation}")
        return self.coords[j - 1]

    def __eq__(self, other):
        if not isinstance(other, CohenElement):
            return NotImplemented
        return self.model is other.model and self.coords == other.coords

    def __hash__(self):
        return hash((id(self.model), self.coords))

    def __repr__(self):
        if self.is_identity():
            return "identity"
        parts = [f"slot {j} : {cls!r}" for j, cls in enumerate(self.coords, 1) if not cls.is_zero]
        return " ; ".join(parts)

    def is_identity(self):
        return all(cls.is_zero for cls in self.coords)

    def with_coord(self, j, cls):
        """Copy of self with slot j replaced."""
        coords = list(self.coords)
        coords[j - 1] = cls
        return CohenElement(self.model, coords)


def _check_same_model(a, b):
    if a.model is not b.model:
        raise ModelMismatchError("elements belong to different target models")


def identity(model):
    return CohenElement(
        model, [model.zero_class(model.slot_dimension(j)) for j in range(1, model.truncation + 1)]
    )


def mul(a, b):
    """Circled-star product of two elements of the same model."""
    _check_same_model(a, b)
    model = a.model
    out = []
    for j in range(1, model.truncation + 1):
        acc = a.coord(j) + b.coord(j)
        for i in range(1, j):
            s = j - i
            c = phi(i, j - 1)
            if c == 0:
                continue
            ai, bs = a.coord(i), b.coord(s)
            if ai.is_zero or bs.is_zero:
                continue
            acc = acc + c * model.bracket(ai, bs)
        out.append(acc)
    return CohenElement(model, out)


def inverse(a):
    """The two-sided circled-star inverse, solved slot by slot."""
    model = a.model
    out = []
    for j in range(1, model.truncation + 1):
        acc = -a.coord(j)
        for i in range(1, j):
            s = j - i
            c = phi(i, j - 1)
            if c == 0:
                continue
            ai, bs = a.coord(i), out[s - 1]
            if ai.is_zero or bs.is_zero:
                continue
            acc = acc + (-c) * model.bracket(ai, bs)
        out.append(acc)
    return CohenElement(model, out)


def power(a, M):
    """M-th circled-star power by left iteration; M may be negative."""
    if M < 0:
        return power(inverse(a), -M)
    result = identity(a.model)
    for _ in range(M):
        result = mul(result, a)
    return result


def project(a, n):
    """Image under the truncation homomorphism onto the first n slots."""
    sub = a.model.truncate(n)
    if sub is a.model:
        return a
    return CohenElement(sub, a.coords[:n])


def element_order(a):
    """Circled-star order of a, with a witness.

    Returns (order, witness_slot).  The order is INFINITE as soon as some
    coordinate class has infinite order (witness: the first such slot);
    otherwise it is found by an incremental sweep, which is guaranteed to
    terminate within 4 * lcm of the coordinate class orders.
    """
    bound = 1
    for j, cls in enumerate(a.coords, 1):
        o = cls.order()
        if o is INFINITE:
            return INFINITE, j
        bound = math.lcm(bound, o)
    bound *= 4
    acc = identity(a.model)
    for M in range(1, bound + 1):
        acc = mul(acc, a)
        if acc.is_identity():
            return M, None
    raise RuntimeError(f"order search exceeded bound {bound}")


def closed_two_coordinate_power(model, n, alpha, m, beta, M):
    """Closed form for the M-th power of an element supported in slots n, m.

    Valid when n, m, 2n, 2m, n+m and the three weight-3 slots are pairwise
    distinct, i.e. n != m, m != 2n and n != 2m; otherwise contributions
    collide in a slot and the expansion changes shape.
    """
    if n == m or m == 2 * n or n == 2 * m:
        raise ValueError("closed form requires n != m, m != 2n and n != 2m")
    if M < 0:
        raise ValueError("closed form is stated for M >= 0")
    for j, cls in ((n, alpha), (m, beta)):
        if cls.dimension != model.slot_dimension(j):
            raise ValueError(f"class at slot {j} has the wrong dimension")
    r = model.r
    slots = {}

    def add(j, cls):
        if j > model.truncation or cls.is_zero:
            return
        slots[j] = slots.get(j, cls) if j not in slots else slots[j] + cls

    aa = model.bracket(alpha, alpha)
    bb = model.bracket(beta, beta)
    ab = model.bracket(alpha, beta)
    m2 = comb(M, 2)
    m3 = comb(M, 3)
    add(n, M * alpha)
    add(m, M * beta)
    add(2 * n, (m2 * phi(n, 2 * n - 1)) * aa)
    add(2 * m, (m2 * phi(m, 2 * m - 1)) * bb)
    add(n + m, (m2 * phi_delta(n, m, r)) * ab)
    add(3 * n, (m3 * phi(n, 2 * n - 1) * phi(2 * n, 3 * n - 1)) * model.bracket(aa, alpha))
    add(3 * m, (m3 * phi(m, 2 * m - 1) * phi(2 * m, 3 * m - 1)) * model.bracket(bb, beta))
    add(
        2 * n + m,
        (m3 * phi(n, 2 * n - 1) * phi(2 * n, 2 * n + m - 1)) * model.bracket(aa, beta)
        + (m3 * phi_delta(n, m, r) * phi(n + m, 2 * n + m - 1)) * model.bracket(ab, alpha),
    )
    add(
        n + 2 * m,
        (m3 * phi(m, 2 * m - 1) * phi(2 * m, n + 2 * m - 1)) * model.bracket(bb, alpha)
        + (m3 * phi_delta(n, m, r) * phi(n + m, n + 2 * m - 1)) * model.bracket(ab, beta),
    )
    out = identity(model)
    for j, cls in slots.items():
        out = out.with_coord(j, cls)
    return out


def torsion_coordinates_check(a, p):
    """Order of a, asserting closure of p-primary torsion.

    Requires every coordinate class of a to have order a power of p, and
    checks that the circled-star order of a is again a power of p.  Returns
    the order.
    """
    require_prime(p)
    for j, cls in enumerate(a.coords, 1):
        o = cls.order()
        if o is INFINITE or _prime_power_exponent(o, p) is None:
            raise ValueError(f"slot {j}: coordinate order {o} is not a power of {p}")
    order, _ = element_order(a)
    if _prime_power_exponent(order, p) is None:
        raise RuntimeError(f"p-torsion closure failed: order {order} is not a power of {p}")
    return order


def _prime_power_exponent(n, p):
    """t with n == p**t, or None."""
    if n is INFINITE or n < 1:
        return None
    t = 0
    while n % p == 0:
        n //= p
        t += 1
    return t if n == 1 else None


def odd_position_power_check(a, t):
    """Whether the 2**t power of an odd-position 2-torsion element vanishes.

    Requires t > 1, all even-slot coordinates zero, and every coordinate
    class killed by 2**t.  Returns True when power(a, 2**t) is the identity.
    """
    if t <= 1:
        raise ValueError("the odd-position statement needs t > 1")
    q = 2**t
    for j, cls in enumerate(a.coords, 1):
        if j % 2 == 0 and not cls.is_zero:
            raise ValueError(f"slot {j} is even but nonzero")
        o = cls.order()
        if o is INFINITE or q % o != 0:
            raise ValueError(f"slot {j}: coordinate order {o} does not divide 2**{t}")
    return power(a, q).is_identity()


def _slot_p_exponents(model, p):
    """Per-slot exponent t_j: max power of p dividing a generator order there."""
    out = {}
    for j in range(1, model.truncation + 1):
        t = 0
        for g in model.generators_at(j):
            if g.order is INFINITE:
                continue
            e = 0
            o = g.order
            while o % p == 0:
                o //= p
                e += 1
            t = max(t, e)
        if t > 0:
            out[j] = t
    return out


def generic_torsion_tuple(model, p):
    """A fresh free model carrying one generic p-torsion generator per slot.

    Slot j receives one generator of order p**t_j, where t_j is the largest
    p-exponent among the model's own generator orders at slot j; slots with
    no p-torsion are left empty.  Returns (fresh_model, generic_element) or
    (None, None) when the model has no p-torsion at all.
    """
    slot_t = _slot_p_exponents(model, p)
    if not slot_t:
        return None, None
    gens = [
        Generator(gid=j, position=j, dimension=model.slot_dimension(j), order=p**t)
        for j, t in sorted(slot_t.items())
    ]
    fresh = TargetModel(
        model.r, model.truncation, model.profile, gens, name=f"{model.name}|generic p={p}"
    )
    elem = identity(fresh)
    for g in gens:
        elem = elem.with_coord(g.position, fresh.weight1(g))
    return fresh, elem


def group_p_exponent(model, p):
    """Certified p-primary exponent of the truncated total Cohen group.

    The upper bound comes from killing a generic torsion tuple in a free
    model with the same relation profile: if the p**s power of the generic
    tuple vanishes there, it vanishes for every element of every genuine
    target with this profile.  The lower bound p**t_max is witnessed by a
    single-coordinate element, whose M-th power has exactly M times the
    class in its lowest nonzero slot.
    """
    require_prime(p)
    slot_t = _slot_p_exponents(model, p)
    if not slot_t:
        return ExponentValue.no_torsion(p, provenance=("no p-torsion among generator orders",))
    t_max = max(slot_t.values())
    fresh, generic = generic_torsion_tuple(model, p)
    upper_t = None
    for s in range(t_max, t_max + 5):
        if power(generic, p**s).is_identity():
            upper_t = s
            break
    if upper_t is None:
        raise RuntimeError(
            f"generic certificate did not close within p**{t_max + 4} (p={p})"
        )
    prov = (
        f"upper bound: generic tuple certificate at p**{upper_t}",
        f"lower bound: single-coordinate witness of order p**{t_max}",
    )
    if upper_t == t_max:
        return ExponentValue.exact(p, t_max, provenance=prov)
    return ExponentValue.interval(p, t_max, upper_t, provenance=prov)
