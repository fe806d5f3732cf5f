import pytest

from colored_partitions import ColoredPartition, count_F, in_F_intro
from errors import ParameterError
from monomial_ideals import (
    Monomial,
    from_colored,
    hilbert_Gl_quotient,
    hilbert_J,
    in_I,
    in_I_family,
    in_J,
    monomials_of_weight,
    standard_monomials,
    to_colored,
)
from partition_enum import count_G, enumerate_partitions, is_gordon, is_in_B


def test_parse_weight_degree():
    m = Monomial.parse("x2^2*y2*z3*z4")
    assert m.weight == 13
    assert m.degree == 5
    assert str(m) == "x2^2*y2*z3*z4"
    assert Monomial.parse("x_2^2*y_2*z_3*z_4") == m
    assert Monomial.parse("1") == Monomial()
    assert Monomial.parse("x1*x1") == Monomial.parse("x1^2")


def test_parse_rejects_unknown_variables():
    with pytest.raises(ParameterError):
        Monomial.parse("w1")
    with pytest.raises(ParameterError):
        Monomial.parse("x0")


def test_multiplication_and_division():
    a, b = Monomial.parse("x1*z2"), Monomial.parse("z2*y3")
    assert a * b == Monomial.parse("x1*y3*z2^2")
    assert a.divides(a * b)
    assert not (a * b).divides(a)


def test_colored_round_trip():
    cp = ColoredPartition.parse("4_g+3_g+2_r+2_b+2_b")
    m = from_colored(cp)
    assert m == Monomial.parse("x2^2*y2*z3*z4")
    assert to_colored(m) == cp


def test_monomials_of_weight_count():
    assert [len(monomials_of_weight(n)) for n in range(5)] == [1, 3, 9, 22, 51]
    assert len(set(monomials_of_weight(4))) == 51


def test_I_membership():
    assert in_I(Monomial.parse("z1^2"), 2)
    assert in_I(Monomial.parse("z1*z2"), 2)
    assert not in_I(Monomial.parse("z1*z3"), 2)
    assert not in_I(Monomial.parse("z1*z2"), 3)
    assert in_I(Monomial.parse("z2^2*z3"), 3)
    assert in_I_family(Monomial.parse("x4^3"), 3, "x")
    assert not in_I_family(Monomial.parse("x4^3"), 3, "z")


def test_J_membership():
    assert in_J(Monomial.parse("z1^2"), 2)
    assert not in_J(Monomial.parse("x1*y1"), 2)
    # k + i_k <= r - 1
    assert in_J(Monomial.parse("x1*y1"), 3)
    # k + i_k - r + 1 green indices >= 2
    assert in_J(Monomial.parse("x1*y1*z2"), 2)
    assert not in_J(Monomial.parse("x1*y1*z1"), 2)


@pytest.mark.parametrize("r", [2, 3, 4])
def test_J_is_the_complement_of_F(r):
    for n in range(8):
        for m in monomials_of_weight(n):
            assert in_J(m, r) == (not in_F_intro(to_colored(m), r))


@pytest.mark.parametrize("r", [2, 3])
def test_hilbert_J_counts_F(r):
    assert hilbert_J(r, 7) == [count_F(r, n) for n in range(8)]
    assert [len(ms) for ms in standard_monomials(r, 3)] == [1, 3, 8, 18]


@pytest.mark.parametrize("r, ell", [(2, 0), (2, 1), (3, 1), (3, 2)])
def test_hilbert_Gl_quotient_counts_G(r, ell):
    assert hilbert_Gl_quotient(r, ell, 12) == [count_G(r, ell, n) for n in range(13)]


def test_random_round_trip(rng):
    for _ in range(40):
        budget = rng.randint(0, 15)
        nb = rng.randint(0, budget)
        nr = rng.randint(0, budget - nb)
        ng = rng.randint(0, budget - nb - nr)
        cp = ColoredPartition(*(rng.choice(enumerate_partitions(k)) for k in (nb, nr, ng)))
        m = from_colored(cp)
        assert m.weight == cp.weight == nb + nr + ng
        assert to_colored(m) == cp
        assert from_colored(to_colored(m)) == m


@pytest.mark.parametrize("r", [2, 3, 4])
def test_green_monomials_avoid_I_exactly_under_the_gordon_condition(r):
    for n in range(15):
        for lam in enumerate_partitions(n):
            m = from_colored(ColoredPartition(green=lam))
            assert in_I(m, r) == (not is_gordon(lam, r))
            assert is_gordon(lam, r) == is_in_B(lam, r, r)


@pytest.mark.slow
@pytest.mark.parametrize("r", [2, 3, 4])
def test_J_is_the_complement_of_F_up_to_weight_14(r):
    for n in range(15):
        for m in monomials_of_weight(n):
            assert in_J(m, r) == (not in_F_intro(to_colored(m), r))
