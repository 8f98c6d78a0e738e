"""Formal Whitehead bracket algebra truncated at weight 3.

A target model fixes the suspension parameter r, a truncation bound, a
relation profile (universal annihilators for weight-2 and weight-3 brackets,
with everything of weight >= 4 vanishing) and a set of generators, one or
more per coordinate slot.  Formal classes are integer-linear combinations of
canonical bracket symbols; every symbol carries the *largest* order
compatible with the profile, so the algebra is a free upper model: any
identity of the form "expression = 0" proved here holds in every genuine
target satisfying the profile.
"""

import math
from dataclasses import dataclass
from math import gcd

from .abelian import INFINITE


class ModelMismatchError(ValueError):
    """Raised when classes or elements from different target models meet."""


def swap_sign(dim_x, dim_y):
    """Graded-commutation sign (-1)**(dim_x * dim_y)."""
    if dim_x < 1 or dim_y < 1:
        raise ValueError("dimensions must be >= 1")
    return -1 if (dim_x % 2 and dim_y % 2) else 1


@dataclass(frozen=True)
class RelationProfile:
    """Universal bracket annihilators of a target space.

    u2 kills every weight-2 bracket (0 = no universal relation, 1 = all
    weight-2 brackets vanish); u3 likewise for weight-3 brackets.  Weight
    >= 4 brackets always vanish for the supported targets.
    """

    u2: int
    u3: int
    w4_vanish: bool = True

    def __post_init__(self):
        if self.u2 < 0:
            raise ValueError("u2 must be non-negative")
        if self.u3 not in (0, 1, 3):
            raise ValueError("u3 must be one of 0, 1, 3")
        if not self.w4_vanish:
            raise ValueError("only weight-4-vanishing targets are supported")


@dataclass(frozen=True)
class Generator:
    """A formal generator sitting in one coordinate slot.

    order is a positive int or INFINITE.
    """

    gid: int
    position: int
    dimension: int
    order: object

    def __post_init__(self):
        if self.position < 1:
            raise ValueError("position must be >= 1")
        if self.order is not INFINITE and (not isinstance(self.order, int) or self.order < 1):
            raise ValueError("order must be a positive integer or INFINITE")


@dataclass(frozen=True)
class BracketSymbol:
    """Canonical bracket symbol of weight 1, 2 or 3.

    Weight-2 leaves (a, b) satisfy a <= b; weight-3 symbols are left-normed
    [[a, b], c] with a <= b.  The order is the gcd bound imposed by the
    generator orders and the model's relation profile.
    """

    weight: int
    leaves: tuple
    dimension: int
    order: object

    def sort_key(self):
        return (self.weight, self.leaves)

    def __repr__(self):
        names = [f"g{g}" for g in self.leaves]
        if self.weight == 1:
            body = names[0]
        elif self.weight == 2:
            body = f"[{names[0]},{names[1]}]"
        else:
            body = f"[[{names[0]},{names[1]}],{names[2]}]"
        return body


def _gcd_or_infinite(values):
    finite = [v for v in values if v is not INFINITE]
    if not finite:
        return INFINITE
    d = 0
    for v in finite:
        d = gcd(d, v)
    return d


class FormalClass:
    """Homogeneous integer-linear combination of bracket symbols.

    Coefficients are reduced modulo each symbol's finite order; zero
    coefficients and order-1 symbols are never stored.  Immutable.
    """

    __slots__ = ("dimension", "terms")

    def __init__(self, dimension, terms):
        acc = {}
        for sym, c in (terms.items() if isinstance(terms, dict) else terms):
            if sym.dimension != dimension:
                raise ValueError(
                    f"symbol of dimension {sym.dimension} in a class of dimension {dimension}"
                )
            acc[sym] = acc.get(sym, 0) + c
        reduced = []
        for sym, c in acc.items():
            if sym.order == 1:
                continue
            if sym.order is not INFINITE:
                c %= sym.order
            if c != 0:
                reduced.append((sym, c))
        reduced.sort(key=lambda item: item[0].sort_key())
        object.__setattr__(self, "dimension", dimension)
        object.__setattr__(self, "terms", tuple(reduced))

    def __setattr__(self, name, value):
        raise AttributeError("FormalClass is immutable")

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{sym!r}" for sym, c in self.terms)

    def __eq__(self, other):
        if not isinstance(other, FormalClass):
            return NotImplemented
        return self.dimension == other.dimension and self.terms == other.terms

    def __hash__(self):
        return hash((self.dimension, self.terms))

    @property
    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if self.dimension != other.dimension:
            raise ValueError("cannot add classes of different dimensions")
        return FormalClass(self.dimension, list(self.terms) + list(other.terms))

    def __neg__(self):
        return FormalClass(self.dimension, [(s, -c) for s, c in self.terms])

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, n):
        return FormalClass(self.dimension, [(s, n * c) for s, c in self.terms])

    def order(self):
        """Least M >= 1 with M * self = 0, or INFINITE."""
        result = 1
        for sym, c in self.terms:
            if sym.order is INFINITE:
                return INFINITE
            result = math.lcm(result, sym.order // gcd(sym.order, c))
        return result


class TargetModel:
    """A truncated loop-space target: profile, generators and bracket rules."""

    def __init__(self, r, truncation, profile, generators, name=""):
        if r < 1:
            raise ValueError("suspension parameter r must be >= 1")
        if truncation < 1:
            raise ValueError("truncation must be >= 1")
        generators = tuple(generators)
        by_id = {}
        by_slot = {}
        for g in generators:
            if g.gid in by_id:
                raise ValueError(f"duplicate generator id {g.gid}")
            if g.dimension != g.position * r + 1:
                raise ValueError(
                    f"generator g{g.gid}: dimension {g.dimension} != position*r+1 = {g.position * r + 1}"
                )
            if g.position > truncation:
                raise ValueError(f"generator g{g.gid} sits above the truncation bound")
            by_id[g.gid] = g
            by_slot.setdefault(g.position, []).append(g)
        self.r = r
        self.truncation = truncation
        self.profile = profile
        self.generators = generators
        self.name = name or f"model(r={r}, trunc={truncation}, u2={profile.u2}, u3={profile.u3})"
        self._by_id = by_id
        self._by_slot = by_slot
        self._trunc_cache = {}

    def __repr__(self):
        return f"TargetModel({self.name})"

    def slot_dimension(self, j):
        return j * self.r + 1

    def generator(self, gid):
        try:
            return self._by_id[gid]
        except KeyError:
            raise ModelMismatchError(f"generator g{gid} is not part of this model") from None

    def generators_at(self, slot):
        return tuple(self._by_slot.get(slot, ()))

    def zero_class(self, dimension):
        return FormalClass(dimension, [])

    def symbol1(self, g):
        return BracketSymbol(1, (g.gid,), g.dimension, g.order)

    def weight1(self, g, coeff=1):
        return FormalClass(g.dimension, [(self.symbol1(g), coeff)])

    def pair_order(self, gid_a, gid_b):
        """Order bound for the weight-2 symbol [a, b] (a, b generator ids)."""
        ga, gb = self.generator(gid_a), self.generator(gid_b)
        bounds = [ga.order, gb.order]
        if self.profile.u2 > 0:
            bounds.append(self.profile.u2)
        if gid_a == gid_b and ga.dimension % 2 == 1:
            # self-pairing in odd dimension: the commutation sign forces 2[g,g]=0
            bounds.append(2)
        return _gcd_or_infinite(bounds)

    def triple_order(self, gid_a, gid_b, gid_c):
        """Order bound for the left-normed weight-3 symbol [[a, b], c].

        Bilinearity passes any annihilator of the inner bracket through:
        n [[a, b], c] = [n [a, b], c], so the inner pair's order (which
        already accounts for the universal weight-2 relation and the
        odd-dimension self-pair bound) caps the triple as well.
        """
        if self.profile.u3 == 1:
            return 1
        bounds = [self.generator(gid_c).order, self.pair_order(gid_a, gid_b)]
        if self.profile.u3 > 0:
            bounds.append(self.profile.u3)
        return _gcd_or_infinite(bounds)

    def self_bracket_order(self, g):
        return self.pair_order(g.gid, g.gid)

    def bracket(self, x, y):
        """Bilinear Whitehead bracket of two formal classes.

        Pairings of combined weight > 3 vanish; swapped pairs canonicalize
        with the graded-commutation sign; the result is reduced by symbol
        orders.
        """
        dim = x.dimension + y.dimension - 1
        acc = {}
        for s1, c1 in x.terms:
            for s2, c2 in y.terms:
                w = s1.weight + s2.weight
                if w > 3:
                    continue
                sign = 1
                if w == 2:
                    a, b = s1.leaves[0], s2.leaves[0]
                    if a <= b:
                        leaves = (a, b)
                    else:
                        leaves = (b, a)
                        sign = swap_sign(s1.dimension, s2.dimension)
                    order = self.pair_order(*leaves)
                elif s1.weight == 2:
                    leaves = s1.leaves + s2.leaves
                    order = self.triple_order(*leaves)
                else:
                    # [x, [a,b]] = sign * [[a,b], x]
                    sign = swap_sign(s1.dimension, s2.dimension)
                    leaves = s2.leaves + s1.leaves
                    order = self.triple_order(*leaves)
                if order == 1:
                    continue
                sym = BracketSymbol(w, leaves, dim, order)
                acc[sym] = acc.get(sym, 0) + sign * c1 * c2
        return FormalClass(dim, acc)

    def validate_class(self, cls):
        """Check that every symbol of cls refers to this model's generators."""
        for sym, _ in cls.terms:
            for gid in sym.leaves:
                self.generator(gid)

    def truncate(self, n):
        """Model with the same data truncated at n <= truncation (cached)."""
        if not (1 <= n <= self.truncation):
            raise ValueError(f"truncation {n} out of range 1..{self.truncation}")
        if n == self.truncation:
            return self
        if n not in self._trunc_cache:
            gens = tuple(g for g in self.generators if g.position <= n)
            sub = TargetModel(self.r, n, self.profile, gens, name=f"{self.name}|trunc={n}")
            self._trunc_cache[n] = sub
        return self._trunc_cache[n]
