from fractions import Fraction

import pytest
import sympy

from arc_ideal_lab import (
    BUILTIN_ORDERS,
    DEFAULT_ORDER,
    LEX_ORDERS,
    ArcPolynomial,
    MonomialOrder,
    arc_equations,
    arc_expressions,
    check_weight_cap,
    compare_with_J,
    derivation,
    derive,
    differential_closure_check,
    differential_power_ideal,
    echelon,
    in_weight_span,
    initial_ideal,
    parse_order,
    sweep,
    weight_piece_basis,
)
from errors import ParameterError, WeightCapError
from identity_series import target_series
from monomial_ideals import Monomial

TARGET = [1, 3, 8, 18, 38, 74, 139]


def poly(weight, terms):
    return ArcPolynomial({Monomial.parse(m): c for m, c in terms.items()}, weight)


def test_plain_equations_r2():
    h2, h3 = arc_equations(2, 3)
    assert h2 == poly(2, {"z1^2": 1, "x1*y1": -1})
    assert h3 == poly(3, {"z1*z2": 2, "x1*y2": -1, "x2*y1": -1})


def test_adapted_equations_r2():
    _, h3 = arc_equations(2, 3, adapted=True)
    assert h3.coefficient(Monomial.parse("z1*z2")) == 1
    assert h3.coefficient(Monomial.parse("x1*y2")) == Fraction(-1, 2)


def test_equations_start_at_weight_two():
    assert arc_equations(3, 1) == []
    assert [h.weight for h in arc_equations(3, 5)] == [2, 3, 4, 5]
    # z^3 only shows up from t^3 on
    assert arc_equations(3, 2)[0] == ArcPolynomial({Monomial.parse("x1*y1"): -1}, 2)


def test_weighted_homogeneity_is_enforced():
    with pytest.raises(ParameterError):
        ArcPolynomial({Monomial.parse("x1"): 1, Monomial.parse("x2"): 1}, 2)
    assert ArcPolynomial({Monomial.parse("x2"): 0}, 2).is_zero()


def test_weight_piece_basis_sizes():
    gens = arc_equations(2, 4)
    assert len(weight_piece_basis(2, 2, gens)) == 1
    assert len(weight_piece_basis(2, 3, gens)) == 4
    assert len(weight_piece_basis(2, 4, gens)) == 13
    assert weight_piece_basis(2, 1, gens) == []


def test_default_order_leading_term():
    h2 = arc_equations(2, 2)[0]
    assert h2.leading(DEFAULT_ORDER) == Monomial.parse("z1^2")
    assert h2.leading(MonomialOrder("xyz")) == Monomial.parse("x1*y1")


def test_order_catalogue():
    assert len(BUILTIN_ORDERS) == 12
    assert len(LEX_ORDERS) == 12
    assert len({o.name for o in BUILTIN_ORDERS + LEX_ORDERS}) == 24
    assert DEFAULT_ORDER in BUILTIN_ORDERS
    assert parse_order("xyz/lower/lex") == MonomialOrder("xyz", "lower", "lex")
    with pytest.raises(ParameterError):
        MonomialOrder("xxz")
    with pytest.raises(ParameterError):
        MonomialOrder("zyx", "sideways")


def test_echelon_pivots():
    pivots = echelon([{0: 1, 1: 1}, {0: 2, 1: 2}, {1: 1, 2: 3}])
    assert sorted(pivots) == [0, 1]
    assert pivots[1] == {1: 1, 2: 3}


@pytest.mark.parametrize("adapted", [False, True])
@pytest.mark.parametrize("r", [2, 3])
def test_quotient_dimensions_match_target(r, adapted):
    report = initial_ideal(r, 6, adapted=adapted)
    assert [w.quotient_dim for w in report.weights] == TARGET
    assert report.hilbert_ok
    for w in report.weights:
        assert w.ideal_dim + w.quotient_dim == w.monomials


def test_weight_two_and_one():
    report = initial_ideal(2, 2)
    assert report.weights[1].quotient_dim == 3
    assert report.weights[2].leading == ("z1^2",)
    assert report.weights[2].quotient_dim == 8


def test_compare_with_J_low_weights():
    report = compare_with_J(2, 2)
    assert report.agrees_with_J is True
    assert report.weights[0].agrees_with_J and report.weights[1].agrees_with_J
    assert report.divergent_weights() == []


@pytest.mark.parametrize("r", [2, 3])
def test_hilbert_function_does_not_depend_on_the_order(r):
    reports = sweep(r, 5, include_lex=True)
    assert len(reports) == 24
    expected = list(target_series(5).coeffs)
    for report in reports:
        assert [w.quotient_dim for w in report.weights] == expected
        assert report.agrees_with_J is not None
        for w in report.weights:
            if w.agrees_with_J is False:
                assert w.only_in_ideal or w.only_in_J


def test_reports_are_deterministic():
    assert compare_with_J(3, 5) == compare_with_J(3, 5)


def test_sympy_derivation():
    x1, x2, y1, y2 = sympy.symbols("x1 x2 y1 y2")
    assert derivation(x1 * y1) == sympy.expand(x2 * y1 + x1 * y2)
    assert derivation(sympy.Integer(7)) == 0


@pytest.mark.parametrize("r", [2, 3])
def test_uncentered_adapted_ideal_is_differential(r):
    assert all(holds for _, holds in differential_closure_check(r, 5))


def test_uncentered_expressions_have_index_zero():
    h0 = arc_expressions(2, 2, centered=False)[0]
    z0, x0, y0 = sympy.symbols("z0 x0 y0")
    assert sympy.expand(h0 - (z0 ** 2 - x0 * y0)) == 0


def test_derivative_of_first_equation():
    h2, h3 = arc_equations(2, 3, adapted=True)
    assert derive(h2) == h3.scale(2)
    assert in_weight_span(derive(h2), 2, adapted=True)
    assert not in_weight_span(ArcPolynomial({Monomial.parse("x1*y2"): 1}, 3), 2, adapted=True)


def test_weight_cap():
    with pytest.raises(WeightCapError):
        check_weight_cap(13)
    check_weight_cap(13, force=True)
    check_weight_cap(4, cap=4)
    with pytest.raises(WeightCapError):
        initial_ideal(2, 5, weight_cap=4)


@pytest.mark.parametrize("r", [2, 3])
def test_differential_power_ideal_matches_fixed_length_counts(r):
    report = differential_power_ideal(r, 8)
    assert report.ok
    cell = next(c for c in report.cells if (c.weight, c.degree) == (4, 2))
    assert cell.monomials == 2


def test_differential_power_ideal_r2_by_hand():
    cells = {(c.weight, c.degree): c for c in differential_power_ideal(2, 4).cells}
    assert cells[(3, 2)].quotient_dim == 0
    assert cells[(4, 2)].quotient_dim == 1
    assert cells[(4, 3)].quotient_dim == 0
    assert cells[(0, 0)].quotient_dim == 1


@pytest.mark.slow
@pytest.mark.parametrize("adapted", [False, True])
@pytest.mark.parametrize("r", [2, 3])
def test_quotient_dimensions_up_to_weight_10(r, adapted):
    expected = list(target_series(10).coeffs)
    for report in sweep(r, 10, adapted=adapted):
        assert [w.quotient_dim for w in report.weights] == expected
