"""Closed-form series: catalogue, expansion, assemblies."""

import pytest
from hypothesis import given, settings, strategies as st

from koszulknots.algebra import Degree, QQ, ZZ, prime_field
from koszulknots.homology import Window, homology_table
from koszulknots.presentations import (reduced_presentation,
                                       stable_presentation)
from koszulknots.series import (Assembly, ExpansionError, LaurentPoly, ONE,
                                RationalFunction, SeriesWindow,
                                assemble_torus2, assemble_torus3,
                                exact_divide, expand, formula, identity_check,
                                list_formulas, mod_N_series, normalize_lowest,
                                one_minus, one_plus, projector_series, qta,
                                rf_factored, stable_series,
                                stable_series_reduced)


# ---------------------------------------------------------------------------
# Laurent polynomials

laurents = st.builds(
    lambda pairs: LaurentPoly({m: c for m, c in pairs if c}),
    st.lists(st.tuples(st.tuples(st.integers(-6, 6), st.integers(-4, 4),
                                 st.just(0)),
                       st.integers(-4, 4)), max_size=5),
)


def test_qta_basics():
    p = qta(4, 2) + qta(0, 0) - qta(4, 2)
    assert p == ONE
    assert (qta(2) * qta(-2)).terms == ONE.terms
    assert qta(2, 1, 2).terms == {(2, 1, 2): 1}


@settings(max_examples=500, deadline=None)
@given(laurents, laurents, laurents)
def test_laurent_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a - a == LaurentPoly.zero()


def test_substitute_a():
    p = qta(2, 1, 2)  # q^2 t a^2
    assert p.substitute_a(q_per_a=3) == qta(8, 1)
    assert p.substitute_a(t_per_a=-1) == qta(2, -1)


def test_min_max_term():
    p = qta(10, 1) + qta(0, 2) + qta(-4, 2)
    assert p.min_term()[0] == (10, 1, 0)
    assert p.max_term()[0] == (0, 2, 0)


# ---------------------------------------------------------------------------
# rational functions

def test_factored_denominator_validated():
    with pytest.raises(ValueError):
        RationalFunction(ONE, one_minus(2), den_factors=((1, (4, 0, 0)),))


def test_rational_sum_and_equality():
    half = rf_factored(ONE, (1, (2, 0)))  # 1/(1-q^2)
    s = half + half
    assert identity_check(s, RationalFunction(ONE + ONE, one_minus(2)))
    assert not identity_check(half, s)


def test_rational_product_keeps_factors():
    a = rf_factored(ONE, (1, (2, 0)))
    b = rf_factored(one_plus(4, 1), (1, (4, 2)))
    prod = a * b
    assert prod.den_factors == ((1, (2, 0, 0)), (1, (4, 2, 0)))


# ---------------------------------------------------------------------------
# expansion

def test_expand_geometric():
    rf = rf_factored(ONE, (1, (4, 2)))
    coeffs = expand(rf, SeriesWindow(0, 4, 0, 10))
    assert coeffs == {(0, 0): 1, (4, 2): 1, (8, 4): 1}


def test_expand_negative_direction_geometric():
    rf = rf_factored(ONE, (1, (-4, -2)))
    coeffs = expand(rf, SeriesWindow(-6, 0, -14, 0))
    assert coeffs == {(0, 0): 1, (-4, -2): 1, (-8, -4): 1, (-12, -6): 1}


def test_expand_t0_slice_of_n2():
    coeffs = expand(formula("P2_dN", N=3), SeriesWindow(0, 0, 0, 40))
    assert coeffs == {(0, 0): 1, (2, 0): 1, (4, 0): 1}


def test_expand_pzn_cell():
    coeffs = expand(formula("P_ZN", n=5, N=3), SeriesWindow(3, 3, 12, 12))
    assert coeffs == {(12, 3): 1}


def test_expand_rejects_mixed_orientation():
    # opposite factors admit no common expansion region
    rf = rf_factored(ONE, (1, (2, 2)), (1, (-2, -2)))
    with pytest.raises(ExpansionError):
        expand(rf, SeriesWindow(-4, 4, -8, 8))


# ---------------------------------------------------------------------------
# exact division

@settings(max_examples=300, deadline=None)
@given(laurents, laurents)
def test_exact_divide_recovers_factor(p, d):
    if d.is_zero():
        return
    q = exact_divide(p * d, d)
    assert q is not None and q == p


def test_exact_divide_rejects_non_multiple():
    num = qta(4, 2) + qta(6, 2)  # q^4 t^2 (1 + q^2)
    den = ONE + qta(2) + qta(4)
    assert exact_divide(num, den) is None
    assert exact_divide(ONE + qta(2), ONE + qta(2) + qta(4)) is None


# ---------------------------------------------------------------------------
# catalogue

def test_formula_parameter_validation():
    with pytest.raises(KeyError):
        formula("P_nonsense")
    with pytest.raises(ValueError):
        formula("P2_dN")
    with pytest.raises(ValueError):
        formula("P2_dN", N=3, n=2)


def test_catalogue_is_complete():
    names = list_formulas()
    assert "P2_dN" in names and "P_ZN" in names
    for shape in ("sym1", "sym2", "antisym2", "sym3", "antisym3",
                  "hook12_3", "hook13_2"):
        assert f"P_{shape}_homfly" in names
        assert f"P_{shape}_dN" in names


def test_p2_transcription():
    # (1 - q^6 - q^8 t^2 + q^10 t^2 + q^10 t^3 - q^14 t^3)
    #   / ((1-q^2)(1-q^4 t^2)) at N = 3
    num = (ONE - qta(6) - qta(8, 2) + qta(10, 2) + qta(10, 3) - qta(14, 3))
    assert identity_check(formula("P2_dN", N=3),
                          RationalFunction(num, one_minus(2) * one_minus(4, 2)))


def test_pzn_n2_simplifies():
    rhs = RationalFunction(one_plus(2) * one_plus(6, 3), one_minus(4, 2))
    assert identity_check(formula("P_ZN", n=2, N=2), rhs)


def test_reduced_special_case_n3_n2():
    # at N = 2 the three-strand reduced numerator degenerates
    rf = stable_series_reduced(3, 2)
    num = one_minus(8, 4) * one_plus(6, 3)
    assert identity_check(rf, RationalFunction(
        num, one_minus(4, 2) * one_minus(6, 4)))


# ---------------------------------------------------------------------------
# series vs homology oracles (small windows; the acceptance suite scales up)

@pytest.mark.parametrize("n,N", [(2, 2), (2, 3)])
def test_stable_series_matches_homology(n, N):
    pres = stable_presentation(n, N)
    tmax, qmax = 10, 36
    table = homology_table(pres, QQ, Window(0, qmax, 0, tmax))
    coeffs = expand(stable_series(n, N), SeriesWindow(0, tmax, 0, qmax))
    model = {(d.q, d.t): g.free_rank for d, g in table.groups.items()
             if g.free_rank}
    assert model == {k: v for k, v in coeffs.items() if v}


def test_reduced_series_matches_homology():
    pres = reduced_presentation(3, 3)
    table = homology_table(pres, QQ, Window(0, 40, 0, 10))
    coeffs = expand(stable_series_reduced(3, 3), SeriesWindow(0, 10, 0, 40))
    model = {(d.q, d.t): g.free_rank for d, g in table.groups.items()
             if g.free_rank}
    assert model == {k: v for k, v in coeffs.items() if v}


def test_mod_n_series_matches_homology():
    pres = stable_presentation(2, 2)
    table = homology_table(pres, prime_field(2), Window(0, 24, 0, 8))
    coeffs = expand(mod_N_series(2, 2), SeriesWindow(0, 8, 0, 24))
    model = {(d.q, d.t): g.free_rank for d, g in table.groups.items()
             if g.free_rank}
    assert model == {k: v for k, v in coeffs.items() if v}


# ---------------------------------------------------------------------------
# assemblies

def test_torus2_unknot():
    for N in (2, 3, 4):
        asm = assemble_torus2(1, N)
        rhs = RationalFunction(one_minus(2 * N), one_minus(2))
        assert identity_check(asm.rational, rhs)
    asm = assemble_torus2(1, 2)
    assert asm.is_polynomial
    assert sum(asm.polynomial.terms.values()) == 2


def test_torus2_reduced_trefoil_dimension():
    asm = assemble_torus2(3, 2, reduced=True)
    assert asm.is_polynomial
    assert sum(asm.polynomial.terms.values()) == 3


def test_torus3_reduced_trefoil():
    asm = assemble_torus3(2, 3, reduced=True)
    assert asm.is_polynomial
    assert normalize_lowest(asm.polynomial, 4) \
        == qta(4) + qta(8, 2) + qta(12, 3)


def test_torus3_d0_trefoil():
    asm = assemble_torus3(2, 0, reduced=True)
    assert asm.is_polynomial and asm.nonnegative()


def test_torus3_reduced_matches_reduced_khovanov():
    # T(3,4) over SL(2), reduced: five-dimensional, thin
    asm = assemble_torus3(4, 2, reduced=True)
    assert asm.is_polynomial
    assert normalize_lowest(asm.polynomial) == (
        ONE + qta(4, 2) + qta(6, 3) + qta(6, 4) + qta(10, 5))


def test_assembly_argument_errors():
    with pytest.raises(ValueError):
        assemble_torus3(6, 2)
    with pytest.raises(ValueError):
        assemble_torus2(4, 2)
    with pytest.raises(ValueError):
        assemble_torus3(2, 0, reduced=False)


def test_homfly_assembly_is_rational():
    asm = assemble_torus3(4, "homfly")
    assert isinstance(asm, Assembly)
    assert asm.rational.num is not None


def test_normalize_lowest():
    p = qta(-6, -2) + qta(-2, 0)
    assert normalize_lowest(p, 0, 0) == ONE + qta(4, 2)


# ---------------------------------------------------------------------------
# projector series identities (HOMFLY); the dN expansions are exercised in
# the acceptance suite against computed homology

def test_column_identities_homfly():
    pairs = [
        (("[12]", "[1,2]"), "[1]"),
        (("[123]", "[12,3]"), "[12]"),
        (("[1,2,3]", "[13,2]"), "[1,2]"),
    ]
    for (a, b), whole in pairs:
        lhs = projector_series(a, None, "homfly") \
            + projector_series(b, None, "homfly")
        assert identity_check(lhs, projector_series(whole, None, "homfly"))


def test_reduced_dN_column_identity_top_row():
    # P_[12]^red = P_[123]^red + P_[12,3]^red holds for the displayed
    # reduced series of the symmetric row
    for N in (2, 3, 4):
        lhs = projector_series("[123]", N, "dN", reduced=True) \
            + projector_series("[12,3]", N, "dN", reduced=True)
        rhs = projector_series("[12]", N, "dN", reduced=True)
        assert identity_check(lhs, rhs)
