"""Seeded verification suites for the circled-star group law and exponents.

Each suite returns a list of CheckResult records; the CLI formats them.
Randomness is driven by an explicit seed, so runs are reproducible.
"""

import random
from dataclasses import dataclass

from .cohen import (
    group_p_exponent,
    identity,
    inverse,
    mul,
    odd_position_power_check,
    torsion_coordinates_check,
)
from .targets import concrete_h_space, even_sphere, hp_infty_model, odd_sphere

SUITES = ("group-axioms", "main", "remark", "hp-infty", "tor")


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""


def random_class(model, rng, slot):
    """A random class in the given slot: generator multiples plus brackets."""
    dim = model.slot_dimension(slot)
    cls = model.zero_class(dim)
    for g in model.generators_at(slot):
        if rng.random() < 0.8:
            cls = cls + model.weight1(g, rng.randrange(-6, 7))
    if slot >= 2 and rng.random() < 0.4:
        i = rng.randrange(1, slot)
        s = slot - i
        gi, gs = model.generators_at(i), model.generators_at(s)
        if gi and gs:
            x = model.weight1(rng.choice(gi), rng.randrange(-3, 4))
            y = model.weight1(rng.choice(gs), rng.randrange(-3, 4))
            cls = cls + model.bracket(x, y)
    return cls


def random_element(model, rng, max_slots=3, odd_only=False):
    slots = [j for j in range(1, model.truncation + 1) if not (odd_only and j % 2 == 0)]
    chosen = rng.sample(slots, min(max_slots, len(slots)))
    elem = identity(model)
    for j in chosen:
        elem = elem.with_coord(j, random_class(model, rng, j))
    return elem


def _axiom_models():
    """Shipped models on which the truncated law is provably associative.

    Weight-3 symbols must be dead (killed by the relation profile or by a
    coprime generator order); with live weight-3 torsion the quadratic law
    is only a loop, not a group, and powers are taken as left-iterated
    products.
    """
    return [
        odd_sphere(3, 2, 2),
        odd_sphere(5, 3, 2),
        odd_sphere(5, 2, 2),
        odd_sphere(7, 5, 1),
        even_sphere(2, 3, 1),
        even_sphere(4, 2, 2),
        even_sphere(4, 5, 1),
        hp_infty_model(2, 2),
        hp_infty_model(5, 3),
        concrete_h_space(1, 12),
    ]


def suite_group_axioms(seed=0, cases=1000):
    results = []
    for model in _axiom_models():
        rng = random.Random(f"{seed}|{model.name}")
        bad = 0
        detail = ""
        for _ in range(cases):
            a = random_element(model, rng)
            b = random_element(model, rng)
            c = random_element(model, rng)
            e = identity(model)
            ok = (
                mul(mul(a, b), c) == mul(a, mul(b, c))
                and mul(a, e) == a
                and mul(e, a) == a
                and mul(a, inverse(a)) == e
                and mul(inverse(a), a) == e
            )
            if not ok:
                bad += 1
                if not detail:
                    detail = f"first failure: {a!r} | {b!r} | {c!r}"
        results.append(
            CheckResult("group-axioms", f"axioms[{model.name}]", bad == 0,
                        detail or f"{cases} triples, 0 failures")
        )
    return results


def _expect_exact(suite, name, value, p, t):
    ok = value.kind == "exact" and value.lower_t == t
    return CheckResult(suite, name, ok, f"got {value}, expected exact {p}^{t}")


def _expect_interval(suite, name, value, p, lo, hi):
    ok = value.kind == "interval" and value.lower_t == lo and value.upper_t == hi
    return CheckResult(suite, name, ok, f"got {value}, expected interval [{p}^{lo}, {p}^{hi}]")


def suite_main(seed=0, cases=1000):
    """Generic-tuple exponent certificates for odd and even sphere models."""
    results = []
    for p, t in [(3, 1), (3, 2), (5, 1), (7, 1)]:
        v = group_p_exponent(odd_sphere(5, p, t), p)
        results.append(_expect_exact("main", f"odd-N S5 p={p} t={t}", v, p, t))
        te = 2 if p == 3 else t
        v = group_p_exponent(even_sphere(4, p, te), p)
        results.append(_expect_exact("main", f"even-N S4 p={p} t={te}", v, p, te))
    for t in (2, 3):
        v = group_p_exponent(odd_sphere(5, 2, t), 2)
        results.append(_expect_exact("main", f"odd-N S5 p=2 t={t}", v, 2, t))
    for t in (1, 2):
        v = group_p_exponent(even_sphere(4, 2, t), 2)
        results.append(_expect_interval("main", f"even-N S4 p=2 t={t}", v, 2, t, t + 1))
    return results


def suite_remark(seed=0, cases=100):
    """Odd-position 2-torsion tuples die at 2**t in even-sphere models.

    Uses an even suspension parameter so that every slot has odd dimension
    and the self-bracket sign argument applies to slot 1 as well.
    """
    results = []
    for t in (2, 3):
        model = even_sphere(4, 2, t, r=2)
        rng = random.Random(f"{seed}|remark|{t}")
        bad = 0
        for _ in range(cases):
            a = random_element(model, rng, odd_only=True)
            if not odd_position_power_check(a, t):
                bad += 1
        results.append(
            CheckResult("remark", f"odd-positions t={t}", bad == 0,
                        f"{cases} instances, {bad} failures")
        )
    return results


def suite_hp_infty(seed=0, cases=1000):
    results = []
    for p in (5, 7):
        v = group_p_exponent(hp_infty_model(p, 3), p)
        results.append(_expect_exact("hp-infty", f"p={p} t=3", v, p, 3))
    v = group_p_exponent(hp_infty_model(3, 3), 3)
    results.append(_expect_exact("hp-infty", "p=3 t=3", v, 3, 3))
    v = group_p_exponent(hp_infty_model(2, 2), 2)
    results.append(_expect_interval("hp-infty", "p=2 t=2", v, 2, 2, 3))
    return results


def _tor_models():
    return [
        (odd_sphere(5, 3, 1, truncation=8), 3),
        (odd_sphere(3, 2, 2, truncation=8), 2),
        (even_sphere(4, 2, 1, truncation=8), 2),
        (even_sphere(4, 5, 1, truncation=8), 5),
        (hp_infty_model(3, 2, truncation=8), 3),
        (hp_infty_model(2, 2, truncation=8), 2),
    ]


def suite_tor(seed=0, cases=1000):
    """Closure of p-primary torsion under the circled-star law."""
    results = []
    models = _tor_models()
    per_model = -(-cases // len(models))
    for model, p in models:
        rng = random.Random(f"{seed}|tor|{model.name}")
        bad = 0
        detail = ""
        for _ in range(per_model):
            a = random_element(model, rng)
            try:
                torsion_coordinates_check(a, p)
            except RuntimeError as exc:
                bad += 1
                if not detail:
                    detail = str(exc)
        results.append(
            CheckResult("tor", f"tor[{model.name}]", bad == 0,
                        detail or f"{per_model} elements, 0 failures")
        )
    return results


def run_suite(name, seed=0, cases=None):
    if name == "group-axioms":
        return suite_group_axioms(seed, cases or 1000)
    if name == "main":
        return suite_main(seed, cases or 1000)
    if name == "remark":
        return suite_remark(seed, cases or 100)
    if name == "hp-infty":
        return suite_hp_infty(seed, cases or 1000)
    if name == "tor":
        return suite_tor(seed, cases or 1000)
    raise ValueError(f"unknown suite {name!r}; pick one of {', '.join(SUITES)}")
