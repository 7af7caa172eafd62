"""End-to-end acceptance gate: one test per shipped guarantee.

Each test is self-contained, states its runtime bound, and checks exact
values (no tolerances anywhere; everything here is integer/symbolic).
"""

import math
import random
import time
from contextlib import contextmanager

from param_atlas import gf
from param_atlas.census import (
    census,
    component_group,
    cyclic_group,
    direct_product,
    quaternion_group,
    symmetric_group_3,
    twisted_class_count,
)
from param_atlas.coverage import coverage_report
from param_atlas.invariant_rings import (
    bg_presentation,
    dickson_polynomial,
    fundamental_invariants,
)
from param_atlas.laurent import LaurentPolynomial
from param_atlas.oracle import (
    all_automorphisms,
    centralizer_order,
    classify_twist,
    eval_identity_trials,
    int_matrix,
    is_commutant_solution,
    jacobian_probe,
    random_regular_element,
    solve_commutant,
    twisted_orbits_bruteforce,
)
from param_atlas.root_datum import ArithmeticContext, build_group


@contextmanager
def deadline(seconds: float):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"exceeded {seconds}s budget: {elapsed:.2f}s"


def test_criterion_01_gsp4_census_labels_and_coverage():
    with deadline(1.0):
        datum = build_group("GSp", 4)
        for ell in (5, 7, 11):
            ctx = ArithmeticContext(q=3, ell=ell)
            labels = [e.label for e in census(datum, ctx)]
            assert labels == ["C0", "C1", "C2A", "C2B", "C3"]
            uncovered = [v.entry.label for v in coverage_report(datum, ctx)
                         if not v.covered]
            assert uncovered == ["C2B"]


def test_criterion_02_sl2_census_ell_sensitivity():
    with deadline(1.0):
        datum = build_group("SL", 2)

        def per_class(ell):
            counts = {}
            for e in census(datum, ArithmeticContext(q=3, ell=ell)):
                key = e.unipotent.partition
                counts[key] = counts.get(key, 0) + 1
            return counts

        assert per_class(5) == {(1, 1): 1, (2,): 2}
        assert per_class(7) == {(1, 1): 1, (2,): 2}
        assert per_class(2) == {(1, 1): 1, (2,): 1}


def test_criterion_03_sl2_fixed_ring_is_dickson_for_all_q_to_50():
    with deadline(10.0):
        datum = build_group("SL", 2)
        c_var = LaurentPolynomial.variable(1, 0)  # generator coordinate
        x = LaurentPolynomial.variable(1, 0)  # torus coordinate
        orbit_sum = fundamental_invariants(datum).polys[0]  # x + x^-1
        for q in range(2, 51):
            dq = dickson_polynomial(q)
            # the functional identity that defines the polynomial family
            assert dq.substitute([orbit_sum]) == x ** q + x ** -q
            pres = bg_presentation(datum, q)
            assert len(pres.relations) == 1
            assert pres.relations[0] == dq - c_var


def test_criterion_04_gl_census_is_partition_count_and_fully_covered():
    # frozen partition numbers p(1)..p(8)
    partition_numbers = [1, 2, 3, 5, 7, 11, 15, 22]
    with deadline(5.0):
        ctx = ArithmeticContext(q=3, ell=5)
        for n in range(1, 9):
            datum = build_group("GL", n)
            entries = census(datum, ctx)
            assert len(entries) == partition_numbers[n - 1]
            for verdict in coverage_report(datum, ctx):
                assert verdict.covered
                blocks = tuple(sorted(verdict.witness.jordan_contribution(),
                                      reverse=True))
                assert blocks == verdict.entry.unipotent.partition


def test_criterion_05_unitary_coverage_parity_rule():
    with deadline(5.0):
        ctx = ArithmeticContext(q=3, ell=5)
        report = coverage_report(build_group("U", 3), ctx)
        covered3 = {v.entry.unipotent.partition for v in report if v.covered}
        assert covered3 == {(1, 1, 1), (3,)}
        missing = [v.entry.unipotent.partition for v in report if not v.covered]
        assert missing == [(2, 1)]
        # independent recomputation: covered iff <= 1 part has odd multiplicity
        for n in range(2, 9):
            for v in coverage_report(build_group("U", n), ctx):
                part = v.entry.unipotent.partition
                odd = sum(1 for d in set(part) if part.count(d) % 2 == 1)
                assert v.covered == (odd <= 1), (n, part)


def test_criterion_06_gsp6_4_2_distinguished_not_regular_uncovered():
    with deadline(1.0):
        ctx = ArithmeticContext(q=3, ell=5)
        report = coverage_report(build_group("GSp", 6), ctx)
        v = next(v for v in report if v.entry.unipotent.partition == (4, 2))
        assert v.entry.unipotent.distinguished is True
        assert v.entry.unipotent.regular is False
        assert not v.covered


def test_criterion_07_commutant_solution_sets_are_torsors():
    with deadline(60.0):
        fields = [(5, 1), (7, 1), (3, 2), (11, 1), (13, 1), (5, 2), (7, 2), (11, 2)]
        rng = random.Random(20260814)
        configs = 0
        nonempty = 0
        for p, k in fields:
            field = gf.FiniteField(p, k)
            assert field.order <= 121
            for kind in ("SL", "GL"):
                for _ in range(7):
                    sigma = random_regular_element(field, kind, rng)
                    q = rng.choice((2, 3, 4, 5, 7, 8, 9))
                    sols = solve_commutant(field, kind, sigma, q, budget=10 ** 6)
                    cent = centralizer_order(field, kind, sigma, budget=10 ** 6)
                    assert len(sols) in (0, cent), (p, k, kind, sigma, q)
                    configs += 1
                    nonempty += bool(sols)
        assert configs >= 100
        assert nonempty > 0  # the property was exercised, not vacuous


def test_criterion_08_component_detector_separates_canned_gsp4_solutions():
    with deadline(1.0):
        field = gf.FiniteField(7)
        lam, q = 2, 3
        u = int_matrix(field, [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, -1], [0, 0, 0, 1]])
        split = int_matrix(
            field, [[lam * q, 0, 0, 0], [0, lam, 0, 0], [0, 0, q, 0], [0, 0, 0, 1]]
        )
        swapping = int_matrix(
            field, [[0, 0, -lam * q, 0], [0, 0, 0, lam], [-q, 0, 0, 0], [0, 1, 0, 0]]
        )
        assert is_commutant_solution(field, "GSp", u, q, split)
        assert is_commutant_solution(field, "GSp", u, q, swapping)
        report = classify_twist(field, "GSp", u, q, [split, swapping])
        assert report.assignments[0] != report.assignments[1]
        assert set(report.labels) == {"+1", "-1"}


def _abelian_groups_up_to(order_cap):
    """One group per isomorphism type, as invariant-factor chains d1 | d2 | ..."""
    chains = []

    def extend(chain, product):
        if chain:
            chains.append(tuple(chain))
        lo = chain[-1] if chain else 2
        d = lo
        while product * d <= order_cap:
            if d % lo == 0:
                extend(chain + [d], product * d)
            d += 1

    extend([], 1)
    groups = []
    for chain in chains:
        g = cyclic_group(chain[0])
        for d in chain[1:]:
            g = direct_product(g, cyclic_group(d))
        groups.append(g)
    return groups


def test_criterion_09_twisted_counts_match_bruteforce_under_all_automorphisms():
    with deadline(10.0):
        pairs = 0
        for g in _abelian_groups_up_to(16):
            for twist in all_automorphisms(g):
                fast = twisted_class_count(g, twist)
                assert fast.method == "cokernel"
                assert fast.count == twisted_orbits_bruteforce(g, twist)
                pairs += 1
        for g in (symmetric_group_3(), quaternion_group()):
            fast = twisted_class_count(g)
            assert fast.method == "orbit"
            assert fast.count == twisted_orbits_bruteforce(g)
            pairs += 1
        assert pairs > 20000  # includes the 20160 automorphisms of (Z/2)^4


def test_criterion_10_rewrite_identities_hold_pointwise():
    with deadline(60.0):
        presets = [("GL", 1), ("GL", 2), ("GL", 3), ("SL", 2), ("SL", 3), ("SL", 4),
                   ("U", 2), ("U", 3), ("GSp", 4)]
        field_cycle = [(11, 1), (13, 1), (3, 2), (13, 2)]
        total = 0
        idx = 0
        for family, n in presets:
            datum = build_group(family, n)
            assert datum.torus_rank <= 3
            for q in (2, 3, 4, 5, 7, 8, 9):
                p, k = field_cycle[idx % len(field_cycle)]
                idx += 1
                while math.gcd(q, p) != 1:
                    p, k = field_cycle[idx % len(field_cycle)]
                    idx += 1
                field = gf.FiniteField(p, k)
                assert field.order <= 169
                report = eval_identity_trials(datum, q, field, trials=16, seed=idx)
                assert report.passed, (family, n, q, p, k, report.failure)
                total += report.trials
        assert total >= 1000


def test_criterion_11_jacobian_probe_all_samples_submersive():
    with deadline(30.0):
        samples = 0
        for kind, p, qs in (("SL", 7, (2, 3, 4, 5, 8)), ("GL", 5, (2, 3, 4, 6, 7))):
            field = gf.FiniteField(p)
            rng = random.Random(p)
            for q in qs:
                for _ in range(12):
                    sigma = random_regular_element(field, kind, rng)
                    sols = solve_commutant(field, kind, sigma, q, budget=10 ** 6)
                    for phi in sols[:3]:
                        report = jacobian_probe(field, kind, q, sigma, phi)
                        assert report.submersive, (kind, q, sigma, phi)
                        assert report.rank == report.expected_rank, (kind, q, sigma)
                        samples += 1
        assert samples >= 100
