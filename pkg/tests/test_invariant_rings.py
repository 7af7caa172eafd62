"""Orbit-sum generators, Adams operations, rewriting, and fixed-ring output.

The rewrite direction (torus polynomial -> generator symbols) is checked by
round-tripping through substitution, which is an independent expansion.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from param_atlas.budget import BudgetExceededError
from param_atlas.invariant_rings import (
    NotInvariantError,
    adams,
    bg_presentation,
    count_points,
    dickson_polynomial,
    expand_in_generators,
    frobenius_pullback,
    fundamental_invariants,
    generator_jacobian_rank,
    non_invariance_witness,
    orbit_sum,
    rewrite_in_generators,
)
from param_atlas.laurent import LaurentPolynomial
from param_atlas.root_datum import build_group


def test_orbit_sum_gl2():
    datum = build_group("GL", 2)
    e1 = orbit_sum(datum, (1, 0))
    assert e1 == LaurentPolynomial.variable(2, 0) + LaurentPolynomial.variable(2, 1)
    e2 = orbit_sum(datum, (1, 1))
    assert e2 == LaurentPolynomial.monomial((1, 1), 1)


def test_orbit_sum_gsp4_short_weight_has_four_terms():
    datum = build_group("GSp", 4)
    o1 = orbit_sum(datum, (1, 0, 0))
    assert len(o1.terms) == 4


def test_fundamental_invariant_names():
    assert fundamental_invariants(build_group("GL", 1)).names == ("x",)
    assert fundamental_invariants(build_group("GL", 3)).names == ("e1", "e2", "e3")
    assert fundamental_invariants(build_group("SL", 2)).names == ("c",)
    assert fundamental_invariants(build_group("SL", 3)).names == ("c1", "c2")
    assert fundamental_invariants(build_group("GSp", 4)).names == ("o1", "o2", "nu")
    assert fundamental_invariants(build_group("U", 2)).names == ("e1", "e2")


def test_invertible_flags():
    gens = fundamental_invariants(build_group("GL", 3))
    assert gens.invertible == (False, False, True)
    gens = fundamental_invariants(build_group("GSp", 4))
    assert gens.invertible == (False, False, True)
    gens = fundamental_invariants(build_group("SL", 3))
    assert gens.invertible == (False, False)


def test_generators_are_invariant():
    for family, n in [("GL", 3), ("SL", 3), ("U", 3), ("GSp", 4), ("GSp", 6)]:
        datum = build_group(family, n)
        for g in fundamental_invariants(datum).polys:
            assert non_invariance_witness(datum, g) is None


def test_generator_jacobian_full_rank():
    # full rank at one rational point certifies algebraic independence;
    # the rank can drop on special divisors, so pick a generic-looking point
    primes = [Fraction(p) for p in (2, 3, 5, 7)]
    for family, n in [("GL", 2), ("GL", 3), ("SL", 3), ("GSp", 4), ("GSp", 6), ("U", 2)]:
        datum = build_group(family, n)
        point = primes[:datum.torus_rank]
        assert generator_jacobian_rank(datum, point) == datum.torus_rank


def test_newton_identity_p2_gl2():
    datum = build_group("GL", 2)
    gens = fundamental_invariants(datum)
    p2 = orbit_sum(datum, (2, 0))  # t1^2 + t2^2
    rewritten = rewrite_in_generators(datum, gens, p2)
    # e1^2 - 2 e2
    assert rewritten == (LaurentPolynomial.variable(2, 0) ** 2
                         - LaurentPolynomial.variable(2, 1) * 2)


def test_newton_identity_p3_gl3():
    datum = build_group("GL", 3)
    gens = fundamental_invariants(datum)
    p3 = orbit_sum(datum, (3, 0, 0))
    rewritten = rewrite_in_generators(datum, gens, p3)
    e1 = LaurentPolynomial.variable(3, 0)
    e2 = LaurentPolynomial.variable(3, 1)
    e3 = LaurentPolynomial.variable(3, 2)
    assert rewritten == e1 ** 3 - e1 * e2 * 3 + e3 * 3


def test_rewrite_rejects_non_invariant():
    datum = build_group("GL", 2)
    gens = fundamental_invariants(datum)
    with pytest.raises(NotInvariantError):
        rewrite_in_generators(datum, gens, LaurentPolynomial.variable(2, 0))


@pytest.mark.parametrize("family,n", [("GL", 2), ("GL", 3), ("SL", 2), ("SL", 3),
                                      ("U", 2), ("U", 3), ("GSp", 4)])
def test_rewrite_roundtrip_on_twisted_generators(family, n):
    datum = build_group(family, n)
    gens = fundamental_invariants(datum)
    for q in (2, 3, 5):
        for g in gens.polys:
            moved = adams(frobenius_pullback(datum, g), q)
            sym = rewrite_in_generators(datum, gens, moved)
            assert expand_in_generators(gens, sym) == moved


@given(st.integers(2, 7), st.integers(2, 7))
@settings(max_examples=25, deadline=None)
def test_adams_is_multiplicative_in_q(q1, q2):
    datum = build_group("GL", 2)
    e1 = orbit_sum(datum, (1, 0))
    assert adams(adams(e1, q1), q2) == adams(e1, q1 * q2)


@given(st.integers(2, 6))
@settings(max_examples=10, deadline=None)
def test_adams_ring_homomorphism(q):
    datum = build_group("GL", 2)
    a = orbit_sum(datum, (1, 0))
    b = orbit_sum(datum, (2, 1))
    assert adams(a * b, q) == adams(a, q) * adams(b, q)
    assert adams(a + b, q) == adams(a, q) + adams(b, q)


def test_adams_commutes_with_frobenius_pullback():
    for family, n in [("GL", 2), ("U", 2), ("U", 3), ("GSp", 4)]:
        datum = build_group(family, n)
        for g in fundamental_invariants(datum).polys:
            assert adams(frobenius_pullback(datum, g), 3) == frobenius_pullback(
                datum, adams(g, 3))


# -- fixed-ring presentations ------------------------------------------------


def test_sl2_q3_relation_is_golden():
    pres = bg_presentation(build_group("SL", 2), 3)
    assert pres.relation_strings() == ["c^3 - 4*c"]
    assert pres.names == ("c",)
    assert pres.invertible == (False,)


def test_gl1_relation():
    pres = bg_presentation(build_group("GL", 1), 5)
    assert pres.relation_strings() == ["x^5 - x"]
    assert pres.invertible == (True,)


def test_u2_relations():
    pres = bg_presentation(build_group("U", 2), 3)
    assert pres.relation_strings() == [
        "-e2 + e2^-3",
        "-e1 + e1^3*e2^-3 - 3*e1*e2^-2",
    ]


def test_gsp4_has_similitude_relation():
    pres = bg_presentation(build_group("GSp", 4), 3)
    assert "nu^2 - 1" in pres.relation_strings()
    assert len(pres.relations) == 3


def test_dickson_identity_small():
    # D_q(x + 1/x) = x^q + x^(-q), checked symbolically through the torus
    datum = build_group("SL", 2)
    gens = fundamental_invariants(datum)
    for q in (2, 3, 4, 5, 11):
        c = gens.polys[0]
        lhs = dickson_polynomial(q).substitute([c])
        t = LaurentPolynomial.variable(1, 0)
        assert lhs == t ** q + t ** -q


def test_bg_presentation_accepts_non_prime_power_q():
    pres = bg_presentation(build_group("SL", 2), 6)
    assert pres.relations[0] == dickson_polynomial(6) - LaurentPolynomial.variable(1, 0)
    with pytest.raises(ValueError):
        bg_presentation(build_group("SL", 2), 1)


def test_canonical_text_shape():
    text = bg_presentation(build_group("GL", 2), 2).canonical_text()
    lines = text.splitlines()
    assert lines[0] == "generators: e1, e2"
    assert lines[1] == "invertible: e2"
    assert lines[2] == "relations:"
    assert all(line.startswith("  ") for line in lines[3:])


# -- finite point counts ------------------------------------------------------


def test_count_points_sl2():
    sl2 = build_group("SL", 2)
    assert count_points(bg_presentation(sl2, 3), 5).points == 3
    assert count_points(bg_presentation(sl2, 2), 7).points == 2


def test_count_points_gl1_units_only():
    gl1 = build_group("GL", 1)
    rep = count_points(bg_presentation(gl1, 5), 3)
    # x^5 = x on units of F_3: x^4 = 1, both units qualify
    assert rep.points == 2
    assert rep.assignments == 2


def test_count_points_budget():
    gl2 = build_group("GL", 2)
    with pytest.raises(BudgetExceededError):
        count_points(bg_presentation(gl2, 3), 11, k=2, budget=10)


def test_count_points_multiplicity_detects_ramified_q():
    sl2 = build_group("SL", 2)
    # q = 8 over F_7: derivative of D_8(c) - c vanishes at some points
    rep = count_points(bg_presentation(sl2, 8), 7)
    assert rep.multiplicity_gcd_degree and rep.multiplicity_gcd_degree > 0
    rep = count_points(bg_presentation(sl2, 3), 5)
    assert rep.multiplicity_gcd_degree == 0
