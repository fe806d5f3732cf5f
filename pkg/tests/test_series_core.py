from fractions import Fraction

import pytest

from errors import NonUnitError, ParameterError, SeriesOrderError
from series_core import (
    TruncatedSeries,
    first_divergence,
    invert,
    inverse_pochhammer,
    inverse_pochhammer_product,
    partition_series,
    pochhammer,
    pochhammer_range,
    prod_inv_tail,
    q_binomial,
    sum_series,
)


def test_partition_series_first_terms():
    assert partition_series(10).coeffs == (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42)


def test_pochhammer_small():
    assert pochhammer(3, 8).coeffs == (1, -1, -1, 0, 1, 1, -1, 0, 0)
    assert pochhammer(0, 4) == TruncatedSeries.one(4)


def test_euler_pentagonal_numbers():
    expected = [0] * 16
    for n, sign in [(0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1), (15, -1)]:
        expected[n] = sign
    assert pochhammer(15, 15).coeffs == tuple(expected)


@pytest.mark.parametrize("n", [0, 1, 3, 7])
def test_inverse_pochhammer_is_an_inverse(n):
    assert inverse_pochhammer(n, 20) * pochhammer(n, 20) == TruncatedSeries.one(20)


def test_invert_partition_series_is_euler_product():
    assert invert(partition_series(25)) == pochhammer(25, 25)


def test_prod_inv_tail_counts_parts_at_least_k():
    assert prod_inv_tail(2, 6).coeffs == (1, 0, 1, 1, 2, 2, 4)
    assert prod_inv_tail(1, 12) == partition_series(12)


def test_inverse_pochhammer_product_and_range():
    assert inverse_pochhammer_product([1, 2], 10) == inverse_pochhammer(1, 10) * inverse_pochhammer(2, 10)
    assert inverse_pochhammer_product([], 5) == TruncatedSeries.one(5)
    assert pochhammer_range(3, 4, 12) * pochhammer(2, 12) == pochhammer(4, 12)
    assert pochhammer_range(5, 4, 6) == TruncatedSeries.one(6)


def test_q_binomial():
    assert q_binomial(4, 2, 6).coeffs == (1, 1, 2, 1, 1, 0, 0)
    assert q_binomial(6, 2, 10) == q_binomial(6, 4, 10)
    # the full polynomial of degree 9 survives a small order
    assert q_binomial(6, 3, 3).coeffs == (1, 1, 2, 3)
    assert q_binomial(5, 0, 4) == TruncatedSeries.one(4)


def test_arithmetic_with_integers():
    h = partition_series(5)
    assert (1 + h - 1) == h
    assert (2 * h).coeffs == tuple(2 * c for c in h.coeffs)
    assert (1 - h).coeffs == (0, -1, -2, -3, -5, -7)
    assert h ** 0 == TruncatedSeries.one(5)
    assert h ** 2 == h * h


def test_shift_and_valuation():
    s = TruncatedSeries.monomial(2, 6, 3)
    assert s.valuation() == 2
    assert s.shift(3).coeffs == (0, 0, 0, 0, 0, 3, 0)
    assert s.shift(7).is_zero()
    assert TruncatedSeries.zero(4).valuation() is None


def test_rational_inverse():
    a = TruncatedSeries.from_coefficients([Fraction(2), 1], 3)
    assert invert(a).coeffs == (Fraction(1, 2), Fraction(-1, 4), Fraction(1, 8), Fraction(-1, 16))


def test_invert_rejects_non_units():
    with pytest.raises(NonUnitError):
        invert(TruncatedSeries((2, 1), 1))
    with pytest.raises(NonUnitError):
        invert(TruncatedSeries((0, 1), 1))


def test_order_mismatch():
    with pytest.raises(SeriesOrderError):
        partition_series(3) + partition_series(4)
    with pytest.raises(SeriesOrderError):
        sum_series([partition_series(3)], 4)


def test_rejects_bad_coefficients():
    with pytest.raises(ParameterError):
        TruncatedSeries((1.5, 0), 1)
    with pytest.raises(ParameterError):
        TruncatedSeries((1, 0), 2)


def test_first_divergence():
    a = TruncatedSeries((1, 2, 3), 2)
    b = TruncatedSeries((1, 2, 4), 2)
    assert first_divergence(a, b) == (2, 3, 4)
    assert first_divergence(a, a) is None


def test_unit_series_times_inverse(rng):
    for _ in range(20):
        order = rng.randint(0, 15)
        coeffs = [1] + [rng.randint(-5, 5) for _ in range(order)]
        a = TruncatedSeries(tuple(coeffs), order)
        assert a * invert(a) == TruncatedSeries.one(order)


def _random_series(rng, order):
    return TruncatedSeries(tuple(rng.randint(-9, 9) for _ in range(order + 1)), order)


def test_ring_axioms(rng):
    for _ in range(10):
        order = rng.randint(0, 40)
        f, g, h = (_random_series(rng, order) for _ in range(3))
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f * g == g * f


@pytest.mark.parametrize("order", [0, 1, 12, 30])
def test_pochhammer_cancels_the_head_of_the_product(order):
    h = prod_inv_tail(1, order)
    for n in range(order + 1):
        assert pochhammer(n, order) * h == prod_inv_tail(n + 1, order)


def test_invert_is_two_sided(rng):
    for _ in range(10):
        order = rng.randint(1, 40)
        a = TruncatedSeries((-1,) + _random_series(rng, order - 1).coeffs, order)
        b = invert(a)
        assert a * b == b * a == TruncatedSeries.one(order)
