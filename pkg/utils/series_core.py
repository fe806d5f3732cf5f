"""
This module provides exact truncated formal power series in one variable q,
together with the standard q-objects built from them.

Classes:
- TruncatedSeries: coefficient vector c_0..c_N of a power series cut at order N.

Functions:
- add(a, b), sub(a, b), mul(a, b): ring operations on series of the same order.
- invert(a): inverse of a series whose constant term is a unit.
- pochhammer(n, N): (q)_n = (1-q)(1-q^2)...(1-q^n).
- inverse_pochhammer(n, N): 1/(q)_n, computed without inversion.
- prod_inv_tail(k, N): the product over j >= k of 1/(1-q^j).
- q_binomial(a, b, N): the Gaussian polynomial [a choose b]_q.
- partition_series(N): H, the generating series of all partitions.

Coefficients are Python integers (or fractions.Fraction when a rational series
is built on purpose). Nothing in here ever touches floating point.

Example usage:
    >>> h = partition_series(10)
    >>> h.coeffs
    (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42)
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence

from sympy.polys.domains import QQ
from sympy.polys.ring_series import rs_series_inversion
from sympy.polys.rings import ring

from errors import NonUnitError, ParameterError, SeriesOrderError, require

logger = logging.getLogger(__name__)

_RING, _Q = ring("q", QQ)


@dataclass(frozen=True)
class TruncatedSeries:
    """
    Exact power series sum c_n q^n known up to q^order (inclusive).

    Arguments:
        coeffs (tuple): exactly order + 1 exact coefficients.
        order (int): the truncation order N.
    """
    coeffs: tuple
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ParameterError(f"truncation order must be >= 0, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise ParameterError(
                f"a series of order {self.order} needs {self.order + 1} coefficients, got {len(self.coeffs)}")
        for c in self.coeffs:
            if not isinstance(c, Rational):
                raise ParameterError(f"coefficients must be exact integers or fractions, got {c!r}")

    # constructors

    @classmethod
    def from_coefficients(cls, values: Iterable, order: int) -> "TruncatedSeries":
        """Pads with zeros or drops the tail so the result has exactly order + 1 coefficients."""
        values = list(values)[: order + 1]
        values += [0] * (order + 1 - len(values))
        return cls(tuple(values), order)

    @classmethod
    def from_counts(cls, counts: dict, order: int) -> "TruncatedSeries":
        return cls(tuple(counts.get(n, 0) for n in range(order + 1)), order)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls((0,) * (order + 1), order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.monomial(0, order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coefficient=1) -> "TruncatedSeries":
        """c * q^exponent; exponents above the order give the zero series."""
        require(exponent >= 0, f"exponent must be >= 0, got {exponent}")
        values = [0] * (order + 1)
        if exponent <= order:
            values[exponent] = coefficient
        return cls(tuple(values), order)

    # accessors

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def valuation(self):
        """Smallest exponent with a non-zero coefficient, None for the zero series."""
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return None

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    # order changes

    def truncate(self, order: int) -> "TruncatedSeries":
        require(0 <= order <= self.order, f"cannot truncate a series of order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def extend(self, order: int) -> "TruncatedSeries":
        """
        Re-reads the coefficients as those of a polynomial at a larger order.
        Only meaningful when the series is known to be a polynomial of degree <= self.order.
        """
        require(order >= self.order, f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries.from_coefficients(self.coeffs, order)

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiplication by q^k, keeping the order."""
        require(k >= 0, f"shift must be >= 0, got {k}")
        if k > self.order:
            return TruncatedSeries.zero(self.order)
        return TruncatedSeries((0,) * k + self.coeffs[: self.order + 1 - k], self.order)

    # arithmetic

    def _check(self, other: "TruncatedSeries") -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected a TruncatedSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise SeriesOrderError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        if isinstance(other, int):
            other = TruncatedSeries.monomial(0, self.order, other)
        self._check(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        if isinstance(other, int):
            other = TruncatedSeries.monomial(0, self.order, other)
        self._check(other)
        return TruncatedSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.order)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            return TruncatedSeries(tuple(other * c for c in self.coeffs), self.order)
        self._check(other)
        n = self.order
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs[: n + 1 - i]):
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(tuple(out), n)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        require(exponent >= 0, f"only non-negative powers are supported, got {exponent}")
        result = TruncatedSeries.one(self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def __str__(self):
        terms = []
        for n, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if n == 0 else f"{c}*q^{n}")
        return (" + ".join(terms) or "0") + f" + O(q^{self.order + 1})"


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a - b


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def _to_ring(a: TruncatedSeries):
    return _RING.from_dict({(n,): QQ(c.numerator, c.denominator) for n, c in enumerate(a.coeffs) if c})


def _from_ring(p, order: int) -> TruncatedSeries:
    values = [0] * (order + 1)
    for (n,), c in p.items():
        if n <= order:
            num, den = int(QQ.numer(c)), int(QQ.denom(c))
            values[n] = num if den == 1 else Fraction(num, den)
    return TruncatedSeries(tuple(values), order)


def invert(a: TruncatedSeries) -> TruncatedSeries:
    """
    Computes the inverse of a up to its order (Newton iteration of sympy's ring_series).

    Integer series must start with +1 or -1; rational series with any non-zero constant.

    Arguments:
        a (TruncatedSeries): the series to invert.

    Returns:
        TruncatedSeries: b with a*b = 1 + O(q^(N+1)).
    """
    c0 = a.coeffs[0]
    integral = all(isinstance(c, int) for c in a.coeffs)
    if c0 == 0 or (integral and c0 not in (1, -1)):
        raise NonUnitError(f"constant term {c0} is not a unit")
    inverse = _from_ring(rs_series_inversion(_to_ring(a), _Q, a.order + 1), a.order)
    if not integral:
        inverse = TruncatedSeries(tuple(Fraction(c) for c in inverse.coeffs), a.order)
    return inverse


def sum_series(terms: Iterable[TruncatedSeries], order: int) -> TruncatedSeries:
    total = [0] * (order + 1)
    for t in terms:
        if t.order != order:
            raise SeriesOrderError(f"order mismatch: {order} vs {t.order}")
        for n, c in enumerate(t.coeffs):
            if c:
                total[n] += c
    return TruncatedSeries(tuple(total), order)


def _one_minus_q_power(j: int, order: int) -> TruncatedSeries:
    return TruncatedSeries.one(order) - TruncatedSeries.monomial(j, order)


def one_minus_q_power(j: int, order: int) -> TruncatedSeries:
    """1 - q^j; for j = 0 this is the zero series."""
    return _one_minus_q_power(j, order)


@lru_cache(maxsize=None)
def pochhammer(n: int, order: int) -> TruncatedSeries:
    """(q)_n truncated at the given order; (q)_0 = 1."""
    require(n >= 0, f"pochhammer index must be >= 0, got {n}")
    require(order >= 0, f"order must be >= 0, got {order}")
    values = [0] * (order + 1)
    values[0] = 1
    # multiply in place by (1 - q^j), highest exponent first
    for j in range(1, min(n, order) + 1):
        for s in range(order, j - 1, -1):
            values[s] -= values[s - j]
    return TruncatedSeries(tuple(values), order)


def _coin_product(parts: Sequence[int], order: int) -> TruncatedSeries:
    values = [0] * (order + 1)
    values[0] = 1
    for j in parts:
        if j > order:
            continue
        for s in range(j, order + 1):
            values[s] += values[s - j]
    return TruncatedSeries(tuple(values), order)


@lru_cache(maxsize=None)
def inverse_pochhammer(n: int, order: int) -> TruncatedSeries:
    """1/(q)_n, i.e. partitions into parts <= n (equivalently at most n parts)."""
    require(n >= 0, f"pochhammer index must be >= 0, got {n}")
    return _coin_product(range(1, n + 1), order)


def inverse_pochhammer_product(indices: Iterable[int], order: int) -> TruncatedSeries:
    """1/((q)_{n_1} (q)_{n_2} ...) for the given indices, as one coin-change product."""
    parts = []
    for n in indices:
        require(n >= 0, f"pochhammer index must be >= 0, got {n}")
        parts.extend(range(1, n + 1))
    return _coin_product(parts, order)


def pochhammer_range(lo: int, hi: int, order: int) -> TruncatedSeries:
    """(1-q^lo)(1-q^(lo+1))...(1-q^hi), i.e. (q)_hi/(q)_(lo-1); empty when hi < lo."""
    require(lo >= 1, f"the range must start at lo >= 1, got {lo}")
    values = [0] * (order + 1)
    values[0] = 1
    for j in range(lo, min(hi, order) + 1):
        for s in range(order, j - 1, -1):
            values[s] -= values[s - j]
    return TruncatedSeries(tuple(values), order)


@lru_cache(maxsize=None)
def prod_inv_tail(k: int, order: int) -> TruncatedSeries:
    """
    Product over j >= k of 1/(1-q^j). Only the factors with j <= order matter,
    so the coefficient of q^n counts the partitions of n with all parts >= k.
    """
    require(k >= 1, f"the tail must start at k >= 1, got {k}")
    require(order >= 0, f"order must be >= 0, got {order}")
    return _coin_product(range(k, order + 1), order)


def partition_series(order: int) -> TruncatedSeries:
    """H = sum p(n) q^n = product over j >= 1 of 1/(1-q^j)."""
    return prod_inv_tail(1, order)


@lru_cache(maxsize=None)
def q_binomial(a: int, b: int, order: int) -> TruncatedSeries:
    """
    Gaussian polynomial (q)_a / ((q)_b (q)_{a-b}).

    The quotient is a polynomial of degree b(a-b); it is computed at an order
    large enough to hold it whole and then cut back, so no truncation error leaks in.
    """
    require(a >= 0 and 0 <= b <= a, f"q_binomial needs 0 <= b <= a, got a={a}, b={b}")
    full = max(order, b * (a - b))
    value = pochhammer(a, full) * inverse_pochhammer(b, full) * inverse_pochhammer(a - b, full)
    return TruncatedSeries.from_coefficients(value.coeffs, order)


def first_divergence(lhs: TruncatedSeries, rhs: TruncatedSeries):
    """(exponent, lhs coefficient, rhs coefficient) of the first difference, or None."""
    if lhs.order != rhs.order:
        raise SeriesOrderError(f"order mismatch: {lhs.order} vs {rhs.order}")
    for n, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
        if a != b:
            return n, a, b
    return None
