"""Acceptance gate: ten criteria, one printed pass/fail line each.

Run with `pytest -v` (test names identify the criteria) or `pytest -s` to
see the printed summary lines directly.
"""

import random
import sys
from math import comb

from cohenexp import (
    INFINITE,
    Generator,
    RelationProfile,
    TargetModel,
    binom_mod_p,
    closed_two_coordinate_power,
    cohen_exponent,
    concrete_h_space,
    even_sphere,
    group_p_exponent,
    hp_infty_model,
    identity,
    odd_sphere,
    phi,
    power,
    sphere_exponent,
    sum_binom2,
)
from cohenexp.verify import (
    random_class,
    suite_group_axioms,
    suite_hp_infty,
    suite_main,
    suite_remark,
    suite_tor,
)


def report(n, title):
    def wrap(fn):
        def run():
            try:
                fn()
            except BaseException:
                print(f"CRITERION {n:2d}: FAIL - {title}", file=sys.stderr)
                raise
            print(f"CRITERION {n:2d}: PASS - {title}", file=sys.stderr)

        run.__name__ = fn.__name__
        return run

    return wrap


@report(1, "group axioms on >= 1000 seeded triples per shipped model")
def test_criterion_01_group_axioms():
    results = suite_group_axioms(seed=0, cases=1000)
    assert len(results) >= 5
    for cr in results:
        assert cr.passed, cr


@report(2, "closed-form power matches iterated mul, M <= 32, >= 200 cases")
def test_criterion_02_power_oracle():
    rng = random.Random("acceptance-2")
    free = TargetModel(
        1, 12, RelationProfile(0, 0),
        [Generator(gid=j, position=j, dimension=j + 1, order=INFINITE) for j in range(1, 13)],
    )
    models = [
        odd_sphere(3, 2, 2), odd_sphere(5, 3, 2), odd_sphere(5, 2, 3),
        even_sphere(2, 3, 1), even_sphere(4, 2, 2), even_sphere(4, 3, 2),
        hp_infty_model(2, 2), hp_infty_model(3, 2), hp_infty_model(5, 3),
        free,
    ]
    cases = 0
    for model in models:
        for _ in range(25):
            while True:
                n, m = rng.sample(range(1, model.truncation + 1), 2)
                if m != 2 * n and n != 2 * m:
                    break
            alpha = random_class(model, rng, n)
            beta = random_class(model, rng, m)
            M = rng.randrange(0, 33)
            elem = identity(model).with_coord(n, alpha).with_coord(m, beta)
            assert closed_two_coordinate_power(model, n, alpha, m, beta, M) == power(elem, M), (
                model.name, n, m, M)
            cases += 1
    assert cases >= 200


@report(3, "odd-p exponent certificates for odd and even sphere models")
def test_criterion_03_main_theorem_odd_p():
    for cr in suite_main():
        if "p=2" not in cr.name:
            assert cr.passed, cr


@report(4, "p=2 exponent certificates: odd-N exact, even-N interval")
def test_criterion_04_main_theorem_p2():
    checked = 0
    for cr in suite_main():
        if "p=2" in cr.name:
            assert cr.passed, cr
            checked += 1
    assert checked == 4


@report(5, "odd-position 2-torsion tuples die at 2^t, >= 100 instances")
def test_criterion_05_remark_odd_positions():
    for cr in suite_remark(seed=0, cases=100):
        assert cr.passed, cr


@report(6, "HP-infinity profile: exact p^3 at 5 and 7, exact 27 at 3, 2-interval")
def test_criterion_06_hp_infty():
    for cr in suite_hp_infty():
        assert cr.passed, cr
    assert group_p_exponent(hp_infty_model(3, 3), 3).value == 27


@report(7, "phi four-case table, Lucas, sum of C(l,2), parity facts")
def test_criterion_07_combinatorics():
    for k in range(1, 201):
        for l in range(1, k + 1):
            if l % 2 == 0 and k % 2 == 0:
                expected = -comb(k // 2, l // 2)
            elif l % 2 == 1 and k % 2 == 0:
                expected = 0
            elif l % 2 == 1 and k % 2 == 1:
                expected = comb((k - 1) // 2, (l - 1) // 2)
            else:
                expected = -comb((k - 1) // 2, l // 2)
            assert phi(l, k) == expected
    for p in (2, 3, 5, 7):
        for m in range(0, 301):
            for n in range(0, 301):
                assert binom_mod_p(m, n, p) == comb(m, n) % p
    running = 0
    for M in range(2, 10001):
        if M > 2:
            running += comb(M - 1, 2)
        assert running == comb(M, 3)
    for M in (2, 17, 256, 9999, 10000):
        assert sum_binom2(M) == comb(M, 3)
    # parity facts behind the odd-position argument
    for n in range(2, 4097, 2):
        is_pow2 = n & (n - 1) == 0
        assert comb(n - 1, n // 2) % 2 == (1 if is_pow2 else 0)
        assert comb(n, n // 2) % 2 == 0  # central binomial of odd n+1 >= 3


@report(8, "p-torsion closure of the circled-star law, >= 1000 cases")
def test_criterion_08_torsion_closure():
    for cr in suite_tor(seed=0, cases=1000):
        assert cr.passed, cr


@report(9, "concrete S^3 backend exponents at r=2, truncation 5")
def test_criterion_09_concrete_backend():
    model = concrete_h_space(2, 5)
    expected = {2: 2, 3: 3, 5: 5}
    for p, want in expected.items():
        v = group_p_exponent(model, p)
        assert v.kind == "exact" and v.value == want, (p, v)
        # independent recomputation: max p-part over the coordinate orders
        best = 1
        for g in model.generators:
            if g.order is INFINITE:
                continue
            o, q = g.order, 1
            while o % p == 0:
                o //= p
                q *= p
            best = max(best, q)
        assert best == want


@report(10, "exponent calculator regression with theorem provenance")
def test_criterion_10_calculator_regression():
    v = cohen_exponent("CP:2", 3)
    assert v.value == 9
    v = cohen_exponent("RP:7", 7)
    assert v.value == 343
    v = cohen_exponent("HP:inf", 5)
    assert v.value == 125
    v = cohen_exponent("S:4", 3)
    assert v.value == 27
    assert sphere_exponent(4, 3).value == 27
    for space, p, name in [("CP:2", 3, "Cohen-Moore-Neisendorfer"),
                           ("RP:7", 7, "Cohen-Moore-Neisendorfer"),
                           ("HP:inf", 5, "quaternionic"),
                           ("S:4", 3, "Cohen-Moore-Neisendorfer")]:
        prov = " ".join(cohen_exponent(space, p).provenance)
        assert name in prov, (space, p, prov)
