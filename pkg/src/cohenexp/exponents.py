"""Exponent values and the exponent calculator for classical targets.

An ExponentValue is a certified statement about the p-primary exponent of a
group: exact (p**t kills everything and something has that order), an
interval [p**lo, p**hi], or no p-torsion at all.  The calculator routes a
space descriptor (sphere, space form, projective space, product, cover)
through the applicable classical exponent theorems and records which one it
used in the provenance trail.
"""

import re
from dataclasses import dataclass

from .abelian import require_prime


class CalculatorError(ValueError):
    """Raised when no applicable exponent theorem covers the request."""


@dataclass(frozen=True)
class ExponentValue:
    """A certified p-primary exponent: exact, interval, or no torsion."""

    p: int
    kind: str
    lower_t: int
    upper_t: int
    provenance: tuple = ()

    @classmethod
    def exact(cls, p, t, provenance=()):
        return cls(p, "exact", t, t, tuple(provenance))

    @classmethod
    def interval(cls, p, lower_t, upper_t, provenance=()):
        if lower_t > upper_t:
            raise ValueError("interval with lower_t > upper_t")
        if lower_t == upper_t:
            return cls.exact(p, lower_t, provenance)
        return cls(p, "interval", lower_t, upper_t, tuple(provenance))

    @classmethod
    def no_torsion(cls, p, provenance=()):
        return cls(p, "no-torsion", 0, 0, tuple(provenance))

    @property
    def lower(self):
        return self.p**self.lower_t

    @property
    def upper(self):
        return self.p**self.upper_t

    @property
    def value(self):
        if self.kind != "exact":
            raise ValueError(f"{self.kind} exponent has no single value")
        return self.p**self.lower_t

    def with_provenance(self, *lines):
        return ExponentValue(self.p, self.kind, self.lower_t, self.upper_t,
                             self.provenance + tuple(lines))

    def __str__(self):
        if self.kind == "no-torsion":
            return "no-torsion"
        if self.kind == "exact":
            return f"exact {self.p}^{self.lower_t}"
        return f"interval [{self.p}^{self.lower_t}, {self.p}^{self.upper_t}]"


_FAMILIES = ("S", "RP", "CP", "HP", "SF")


@dataclass(frozen=True)
class SpaceDescriptor:
    """A space the calculator knows how to handle.

    family: "S", "RP", "CP", "HP", "SF" (spherical space form), "product"
    or "cover".  n is the family parameter (None for HP:inf and compound
    descriptors); children holds the factors of a product or the single
    base of a cover.
    """

    family: str
    n: object = None
    children: tuple = ()

    def __str__(self):
        if self.family == "product":
            return "product(" + ",".join(str(c) for c in self.children) + ")"
        if self.family == "cover":
            return f"cover({self.children[0]})"
        if self.family == "HP" and self.n is None:
            return "HP:inf"
        return f"{self.family}:{self.n}"

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text.startswith("product(") and text.endswith(")"):
            inner = text[len("product(") : -1]
            parts = _split_top_level(inner)
            if not parts:
                raise CalculatorError("empty product descriptor")
            return cls("product", children=tuple(cls.parse(p) for p in parts))
        if text.startswith("cover(") and text.endswith(")"):
            inner = text[len("cover(") : -1]
            return cls("cover", children=(cls.parse(inner),))
        m = re.fullmatch(r"([A-Z]+):(inf|\d+)", text)
        if not m or m.group(1) not in _FAMILIES:
            raise CalculatorError(f"cannot parse space descriptor {text!r}")
        fam, param = m.group(1), m.group(2)
        if param == "inf":
            if fam != "HP":
                raise CalculatorError(f"only HP supports the inf parameter, not {fam}")
            return cls("HP", n=None)
        n = int(param)
        if n < 1:
            raise CalculatorError(f"{fam}:{n} needs a positive parameter")
        return cls(fam, n=n)


def _split_top_level(text):
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
            continue
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise CalculatorError("unbalanced parentheses in descriptor")
        cur.append(ch)
    if depth != 0:
        raise CalculatorError("unbalanced parentheses in descriptor")
    if cur or parts:
        parts.append("".join(cur))
    return [p for p in (s.strip() for s in parts) if p]


def _two_adic_lower(N, table):
    """Largest 2-exponent seen among the table's low stems over S^N."""
    if table is None:
        from .targets import bundled_table

        table = bundled_table()
    best = 1
    for k in range(0, 11):
        factors = table.get(N, k)
        if factors is None:
            continue
        for d in factors:
            if d == 0:
                continue
            v = 0
            while d % 2 == 0:
                d //= 2
                v += 1
            best = max(best, v)
    return best


def sphere_exponent(N, p, table=None):
    """p-primary homotopy exponent of S^N, with theorem provenance.

    Odd primes are exact (James; Cohen-Moore-Neisendorfer; the even-sphere
    case via the odd-primary EHP splitting).  At p = 2 the value is an
    interval: the lower bound is mined from the bundled low-stem table and
    the upper bound is the classical 2-primary estimate, upgraded to exact
    when the two meet (Selick's S^3).
    """
    require_prime(p)
    if N < 1:
        raise CalculatorError(f"S^{N} is not a sphere the calculator handles")
    if N == 1:
        return ExponentValue.no_torsion(p, provenance=("S^1 has no higher homotopy",))
    if p != 2:
        if N % 2 == 1:
            n = (N - 1) // 2
            return ExponentValue.exact(
                p, n,
                provenance=(f"Cohen-Moore-Neisendorfer: exp_{p}(S^{N}) = {p}^{n}",),
            )
        n = N // 2
        return ExponentValue.exact(
            p, 2 * n - 1,
            provenance=(
                f"odd-primary EHP splitting of S^{N} as S^{N - 1} x Omega S^{2 * N - 1}",
                f"Cohen-Moore-Neisendorfer on the factors: exp_{p}(S^{N}) = {p}^{2 * n - 1}",
            ),
        )
    lower = _two_adic_lower(N, table)
    if N % 2 == 1:
        n = (N - 1) // 2
        upper = min(2 * n, -(-3 * n // 2))
        prov = (f"James: 2-primary exponent of S^{N} at most 2^{upper}",)
    else:
        n = N // 2
        upper = 4 * n
        prov = (f"James estimate through the EHP sequence: at most 2^{upper}",)
    prov = prov + (f"lower bound 2^{lower} from the bundled homotopy table",)
    if lower == upper:
        if N == 3:
            prov = prov + ("Selick: exp_2(S^3) = 4",)
        return ExponentValue.exact(2, lower, provenance=prov)
    return ExponentValue.interval(2, lower, upper, provenance=prov)


def ses_combine(sub, quot):
    """Exponent bound through a short exact sequence sub -> total -> quot.

    The total group is killed by the product of any annihilators of the two
    ends, and contains the subgroup, so [sub.lower, sub.upper * quot.upper]
    always holds.  Collapses to exact or no-torsion when the data allows.
    """
    if sub.p != quot.p:
        raise ValueError("ses_combine needs matching primes")
    p = sub.p
    if sub.kind == "no-torsion" and quot.kind == "no-torsion":
        return ExponentValue.no_torsion(p, provenance=sub.provenance + quot.provenance)
    lower_t = sub.lower_t
    upper_t = sub.upper_t + quot.upper_t
    prov = sub.provenance + quot.provenance + (
        f"short exact sequence bound: [{p}^{lower_t}, {p}^{upper_t}]",
    )
    return ExponentValue.interval(p, lower_t, upper_t, provenance=prov)


def _max_combine(values):
    """Exponent of a finite direct product: the max of the factors."""
    p = values[0].p
    live = [v for v in values if v.kind != "no-torsion"]
    prov = tuple(line for v in values for line in v.provenance)
    if not live:
        return ExponentValue.no_torsion(p, provenance=prov)
    lower_t = max(v.lower_t for v in live)
    upper_t = max(v.upper_t for v in live)
    prov = prov + ("direct product: exponent is the max over factors",)
    if all(v.kind == "exact" for v in live) or lower_t == upper_t:
        return ExponentValue.interval(p, upper_t if all(v.kind == "exact" for v in live) else lower_t,
                                      upper_t, provenance=prov)
    return ExponentValue.interval(p, lower_t, upper_t, provenance=prov)


def cohen_exponent(space, p, r=1, table=None):
    """p-primary exponent of the total Cohen group over the given target.

    space may be a SpaceDescriptor or a descriptor string such as "S:5",
    "RP:7", "CP:2", "HP:inf", "product(S:3,CP:2)" or "cover(SF:7)".
    """
    require_prime(p)
    if isinstance(space, str):
        space = SpaceDescriptor.parse(space)
    if r < 1:
        raise CalculatorError("suspension parameter r must be >= 1")

    if space.family == "product":
        vals = [cohen_exponent(c, p, r=r, table=table) for c in space.children]
        return _max_combine(vals)
    if space.family == "cover":
        base = space.children[0]
        v = cohen_exponent(base, p, r=r, table=table)
        return v.with_provenance("covering space: higher homotopy agrees with the base")
    if space.family == "S":
        return _cohen_sphere(space.n, p, table)
    if space.family in ("RP", "SF"):
        N = space.n
        v = _cohen_sphere(N, p, table)
        return v.with_provenance(
            f"spherical space form: universal cover S^{N} carries all higher homotopy"
        )
    if space.family == "CP":
        N = 2 * space.n + 1
        v = _cohen_sphere(N, p, table)
        return v.with_provenance(
            f"complex projective space: fibration S^1 -> S^{N} -> CP^{space.n}"
        )
    if space.family == "HP":
        if space.n is None:
            return _cohen_hp_infty(p, table)
        return _cohen_hp_finite(space.n, p, table)
    raise CalculatorError(f"no applicable theorem for descriptor {space}")


def _cohen_sphere(N, p, table):
    v = sphere_exponent(N, p, table)
    if v.kind == "no-torsion":
        return v
    if p != 2:
        return v.with_provenance(
            "total Cohen group over an odd-primary sphere: exponent matches the homotopy exponent"
        )
    if N % 2 == 1:
        return v.with_provenance(
            "total Cohen group over an odd sphere at p = 2: same bounds as the homotopy exponent"
        )
    return ExponentValue.interval(
        2, v.lower_t, v.upper_t + 1,
        provenance=v.provenance + (
            "even sphere at p = 2: cross terms may double the exponent",
        ),
    )


def _cohen_hp_infty(p, table):
    if p != 2:
        return ExponentValue.exact(
            p, 3,
            provenance=(
                f"quaternionic projective space: exp_{p} of the total Cohen group over HP^inf is {p}^3",
            ),
        )
    v = sphere_exponent(4, 2, table)
    return ExponentValue.interval(
        2, v.lower_t, v.upper_t + 1,
        provenance=v.provenance + (
            "HP^inf at p = 2: bounds inherited from S^4 with a cross-term factor of 2",
        ),
    )


def _cohen_hp_finite(n, p, table):
    sub = _cohen_sphere(4 * n + 3, p, table)
    quot = _cohen_hp_infty(p, table)
    v = ses_combine(sub, quot)
    return v.with_provenance(
        f"HP^{n}: combined through the sphere S^{4 * n + 3} over HP^{n} and the limit space"
    )
