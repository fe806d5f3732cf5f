"""
Arc equations of the A_{r-1} singularity z^r - xy and their weight-graded initial ideal.

For an arc gamma(t) = (x(t), y(t), z(t)) with x(t) = sum x_j t^j (and the same for
y, z), h_r(gamma(t)) = sum H_i t^i. Centered arcs put x_0 = y_0 = z_0 = 0; the
resulting H_i generate the arc ideal a, weight-homogeneous with H_i of weight i.
Adapted coordinates replace v_j by v_j/j!, which turns D(v_j) = v_{j+1} into d/dt.

Classes:
- ArcPolynomial: sparse Monomial -> Fraction map of one weight.
- MonomialOrder: weighted order on S = K[x_i, y_i, z_i], family precedence x index direction x tie-break.
- WeightReport / InitialIdealReport: per-weight dimensions, leading monomials and J_r agreement.
- JetCell / JetReport: the bi-graded differential power ideal of x_1^r.

Functions:
- arc_expressions / arc_equations: the H_i via sympy, then as ArcPolynomial.
- derivation / derive: D on sympy expressions and on ArcPolynomial.
- weight_piece_basis(r, n, gens): the spanning rows m * H_j of a_n.
- initial_ideal / compare_with_J / sweep: exact elimination per weight.
- differential_power_ideal(r, N, order): the jet-scheme side of the refinement.

Example usage:
    >>> report = compare_with_J(2, 4)
    >>> [w.quotient_dim for w in report.weights]
    [1, 3, 8, 18, 38]
"""

import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Optional

import sympy

from colored_partitions import ColoredPartition
from errors import ParameterError, WeightCapError, require
from identity_series import target_series
from monomial_ideals import FAMILIES, Monomial, from_colored, in_I_family, in_J, monomials_of_weight
from partition_enum import count_b, enumerate_partitions

logger = logging.getLogger(__name__)

DEFAULT_WEIGHT_CAP = 12
INDEX_DIRECTIONS = ("higher", "lower")
TIE_BREAKS = ("revlex", "lex")

_SYMBOL = re.compile(r"^([xyz])(\d+)$")


def _check_r(r: int) -> None:
    require(r >= 2, f"r must be >= 2, got {r}")


def check_weight_cap(weight: int, cap: int = DEFAULT_WEIGHT_CAP, force: bool = False) -> None:
    require(weight >= 0, f"weight must be >= 0, got {weight}")
    if weight > cap and not force:
        raise WeightCapError(f"weight {weight} is above the cap {cap}; raise the cap or force the run")


# polynomials

@dataclass
class ArcPolynomial:
    """
    Weighted homogeneous polynomial in S, stored as {Monomial: Fraction}.
    Zero coefficients are dropped on construction.
    """
    terms: dict
    weight: int

    def __post_init__(self):
        self.terms = {m: Fraction(c) for m, c in self.terms.items() if c}
        for m in self.terms:
            if m.weight != self.weight:
                raise ParameterError(f"monomial {m} has weight {m.weight}, expected {self.weight}")

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(m, Fraction(0))

    def times(self, m: Monomial) -> "ArcPolynomial":
        return ArcPolynomial({t * m: c for t, c in self.terms.items()}, self.weight + m.weight)

    def scale(self, c) -> "ArcPolynomial":
        return ArcPolynomial({m: c * v for m, v in self.terms.items()}, self.weight)

    def __add__(self, other: "ArcPolynomial") -> "ArcPolynomial":
        require(other.weight == self.weight, f"cannot add weights {self.weight} and {other.weight}")
        merged = dict(self.terms)
        for m, c in other.terms.items():
            merged[m] = merged.get(m, 0) + c
        return ArcPolynomial(merged, self.weight)

    def __sub__(self, other: "ArcPolynomial") -> "ArcPolynomial":
        return self + other.scale(-1)

    def leading(self, order: "MonomialOrder") -> Optional[Monomial]:
        if not self.terms:
            return None
        return max(self.terms, key=lambda m: order.key(m, self.weight))

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{m}" for m, c in sorted(self.terms.items(), key=lambda t: str(t[0])))


# monomial orders

@dataclass(frozen=True)
class MonomialOrder:
    """
    Weighted order on S: weight first, then a tie-break over the variables.

    Arguments:
        family_order (str): permutation of "xyz", largest family first ("zyx" is z > y > x).
        index_direction (str): "higher" makes v_{i+1} > v_i inside a family, "lower" the opposite.
        tie_break (str): "revlex" (smaller exponent in the smallest differing variable wins)
            or "lex" (larger exponent in the largest differing variable wins).
    """
    family_order: str = "zyx"
    index_direction: str = "higher"
    tie_break: str = "revlex"

    def __post_init__(self):
        if sorted(self.family_order) != sorted(FAMILIES):
            raise ParameterError(f"family order must be a permutation of xyz, got {self.family_order!r}")
        if self.index_direction not in INDEX_DIRECTIONS:
            raise ParameterError(f"index direction must be one of {INDEX_DIRECTIONS}, got {self.index_direction!r}")
        if self.tie_break not in TIE_BREAKS:
            raise ParameterError(f"tie-break must be one of {TIE_BREAKS}, got {self.tie_break!r}")

    @property
    def name(self) -> str:
        return f"{self.family_order}/{self.index_direction}/{self.tie_break}"

    def variables(self, weight: int) -> tuple:
        return _variables(self.family_order, self.index_direction, weight)

    def key(self, m: Monomial, weight: int) -> tuple:
        """Sort key among monomials of the given weight: larger key, larger monomial."""
        exps = m.as_dict()
        ranked = self.variables(weight)
        if self.tie_break == "lex":
            return tuple(exps.get(v, 0) for v in ranked)
        return tuple(-exps.get(v, 0) for v in reversed(ranked))


@lru_cache(maxsize=None)
def _variables(family_order: str, index_direction: str, weight: int) -> tuple:
    indices = range(weight, 0, -1) if index_direction == "higher" else range(1, weight + 1)
    return tuple((family, i) for family in family_order for i in indices)


DEFAULT_ORDER = MonomialOrder()

BUILTIN_ORDERS = tuple(
    MonomialOrder("".join(p), direction, "revlex")
    for p in permutations("zyx")
    for direction in INDEX_DIRECTIONS
)

LEX_ORDERS = tuple(MonomialOrder(o.family_order, o.index_direction, "lex") for o in BUILTIN_ORDERS)


def parse_order(text: str) -> MonomialOrder:
    """Reads 'zyx/higher/revlex'; missing fields keep their defaults."""
    fields = [f.strip() for f in text.split("/")]
    require(1 <= len(fields) <= 3, f"cannot read monomial order {text!r}")
    return MonomialOrder(*fields)


# arc expressions

def _symbol(family: str, index: int) -> sympy.Symbol:
    return sympy.Symbol(f"{family}{index}")


def _parse_symbol(symbol) -> Optional[tuple]:
    match = _SYMBOL.match(str(symbol))
    if not match:
        return None
    return match.group(1), int(match.group(2))


def _arc(family: str, order: int, adapted: bool, centered: bool) -> list:
    coeffs = [sympy.Integer(0)] * (order + 1)
    for j in range(1 if centered else 0, order + 1):
        scale = sympy.Rational(1, sympy.factorial(j)) if adapted else 1
        coeffs[j] = scale * _symbol(family, j)
    return coeffs


def _truncated_product(a: list, b: list, order: int) -> list:
    return [sympy.expand(sum(a[j] * b[i - j] for j in range(i + 1))) for i in range(order + 1)]


def arc_expressions(r: int, order: int, adapted: bool = False, centered: bool = True) -> list:
    """
    [H_0, ..., H_order] as sympy expressions: the t-coefficients of z(t)^r - x(t)y(t).

    Uncentered expressions carry the index-0 variables x0, y0, z0.
    """
    _check_r(r)
    require(order >= 0, f"order must be >= 0, got {order}")
    x, y, z = (_arc(f, order, adapted, centered) for f in FAMILIES)
    power = z
    for _ in range(r - 1):
        power = _truncated_product(power, z, order)
    xy = _truncated_product(x, y, order)
    return [sympy.expand(power[i] - xy[i]) for i in range(order + 1)]


def to_arc_polynomial(expr, weight: int) -> ArcPolynomial:
    expr = sympy.expand(expr)
    if expr == 0:
        return ArcPolynomial({}, weight)
    gens = sorted(expr.free_symbols, key=str)
    variables = [_parse_symbol(g) for g in gens]
    if any(v is None or v[1] < 1 for v in variables):
        raise ParameterError(f"{expr} is not a polynomial in x_i, y_i, z_i with i >= 1")
    terms = {}
    for exps, coeff in sympy.Poly(expr, *gens).terms():
        m = Monomial.from_dict({v: e for v, e in zip(variables, exps) if e})
        terms[m] = Fraction(int(coeff.p), int(coeff.q))
    return ArcPolynomial(terms, weight)


@lru_cache(maxsize=None)
def _arc_equations(r: int, order: int, adapted: bool) -> tuple:
    exprs = arc_expressions(r, order, adapted=adapted, centered=True)
    return tuple(to_arc_polynomial(exprs[i], i) for i in range(2, order + 1))


def arc_equations(r: int, order: int, adapted: bool = False) -> list:
    """
    The centered equations H_2, ..., H_order; H_0 and H_1 vanish once the
    index-0 variables are set to 0, so nothing is returned below weight 2.
    """
    _check_r(r)
    require(order >= 0, f"order must be >= 0, got {order}")
    return list(_arc_equations(r, order, adapted))


# the derivation D(v_i) = v_{i+1}

def derivation(expr):
    """D on a sympy expression in the arc variables, extended by the Leibniz rule."""
    expr = sympy.sympify(expr)
    out = sympy.Integer(0)
    for s in expr.free_symbols:
        var = _parse_symbol(s)
        if var is None:
            continue
        out += sympy.diff(expr, s) * _symbol(var[0], var[1] + 1)
    return sympy.expand(out)


def derive(poly: ArcPolynomial) -> ArcPolynomial:
    out = {}
    for m, c in poly.terms.items():
        exps = m.as_dict()
        for (family, index), e in exps.items():
            moved = dict(exps)
            moved[(family, index)] -= 1
            moved[(family, index + 1)] = moved.get((family, index + 1), 0) + 1
            target = Monomial.from_dict(moved)
            out[target] = out.get(target, 0) + c * e
    return ArcPolynomial(out, poly.weight + 1)


def differential_closure_check(r: int, order: int) -> list:
    """
    [(i, holds)] for D(H_i) = (i+1) H_{i+1}, i = 0..order-1, in adapted uncentered coordinates.
    """
    exprs = arc_expressions(r, order, adapted=True, centered=False)
    results = []
    for i in range(order):
        residue = sympy.expand(derivation(exprs[i]) - (i + 1) * exprs[i + 1])
        results.append((i, residue == 0))
    return results


# weight pieces and exact elimination

def weight_piece_basis(r: int, n: int, gens: Iterable[ArcPolynomial]) -> list:
    """
    Rows m * H_j for j = 2..n and every monomial m of weight n - j; they span a_n.
    """
    _check_r(r)
    rows = []
    for g in gens:
        if g.weight < 2 or g.weight > n or g.is_zero():
            continue
        for m in monomials_of_weight(n - g.weight):
            rows.append(g.times(m))
    return rows


@lru_cache(maxsize=None)
def _weight_rows(r: int, n: int, adapted: bool) -> tuple:
    rows = tuple(weight_piece_basis(r, n, arc_equations(r, max(n, 0), adapted)))
    logger.debug("weight %d: %d rows over %d monomials", n, len(rows), len(monomials_of_weight(n)))
    return rows


@lru_cache(maxsize=None)
def _columns(n: int, order: MonomialOrder) -> tuple:
    ordered = sorted(monomials_of_weight(n), key=lambda m: order.key(m, n), reverse=True)
    return tuple(ordered), {m: j for j, m in enumerate(ordered)}


def _reduce(row: dict, pivots: dict) -> dict:
    while row:
        lead = min(row)
        pivot = pivots.get(lead)
        if pivot is None:
            return row
        factor = row[lead]
        for col, value in pivot.items():
            updated = row.get(col, 0) - factor * value
            if updated:
                row[col] = updated
            else:
                row.pop(col, None)
    return row


def echelon(rows: Iterable[dict]) -> dict:
    """
    Sparse row echelon over the rationals. Rows map column -> coefficient, column 0
    being the largest monomial.

    Returns:
        {leading column: normalized pivot row}; its keys are the leading monomials of the span.
    """
    pivots = {}
    for row in rows:
        row = _reduce(dict(row), pivots)
        if row:
            lead = min(row)
            inverse = 1 / Fraction(row[lead])
            pivots[lead] = {col: value * inverse for col, value in row.items()}
    return pivots


@lru_cache(maxsize=256)
def _pivots(r: int, n: int, adapted: bool, order: MonomialOrder) -> dict:
    _, index = _columns(n, order)
    rows = ({index[m]: c for m, c in row.terms.items()} for row in _weight_rows(r, n, adapted))
    pivots = echelon(rows)
    logger.debug("weight %d, order %s: rank %d", n, order.name, len(pivots))
    return pivots


def in_weight_span(poly: ArcPolynomial, r: int, adapted: bool = False, order: MonomialOrder = DEFAULT_ORDER) -> bool:
    """Whether a weight-homogeneous poly lies in the weight piece of a of the same weight."""
    n = poly.weight
    _, index = _columns(n, order)
    row = {index[m]: c for m, c in poly.terms.items()}
    return not _reduce(row, _pivots(r, n, adapted, order))


@dataclass
class WeightReport:
    weight: int
    monomials: int
    ideal_dim: int
    quotient_dim: int
    expected: int
    leading: tuple = ()
    agrees_with_J: Optional[bool] = None
    only_in_ideal: tuple = ()
    only_in_J: tuple = ()

    @property
    def hilbert_ok(self) -> bool:
        return self.quotient_dim == self.expected


@dataclass
class InitialIdealReport:
    r: int
    max_weight: int
    order: str
    adapted: bool
    weights: list = field(default_factory=list)

    @property
    def hilbert_ok(self) -> bool:
        return all(w.hilbert_ok for w in self.weights)

    @property
    def agrees_with_J(self) -> Optional[bool]:
        flags = [w.agrees_with_J for w in self.weights]
        if any(f is None for f in flags):
            return None
        return all(flags)

    def divergent_weights(self) -> list:
        return [w.weight for w in self.weights if w.agrees_with_J is False]


def weight_report(r: int, n: int, order: MonomialOrder = DEFAULT_ORDER, adapted: bool = False,
                  compare: bool = False, expected: Optional[int] = None) -> WeightReport:
    """
    Exact elimination of the weight-n piece.

    Arguments:
        expected (int): the Hilbert coefficient to compare against; defaults to the
            coefficient of q^n in H^2/(q)_1.
    """
    _check_r(r)
    ordered, _ = _columns(n, order)
    pivots = _pivots(r, n, adapted, order)
    leading = [ordered[col] for col in sorted(pivots)]
    if expected is None:
        expected = target_series(n)[n]
    report = WeightReport(
        weight=n,
        monomials=len(ordered),
        ideal_dim=len(pivots),
        quotient_dim=len(ordered) - len(pivots),
        expected=expected,
        leading=tuple(str(m) for m in leading),
    )
    if compare:
        in_ideal = set(leading)
        in_j = [m for m in ordered if in_J(m, r)]
        report.only_in_ideal = tuple(str(m) for m in leading if not in_J(m, r))
        report.only_in_J = tuple(str(m) for m in in_j if m not in in_ideal)
        report.agrees_with_J = not report.only_in_ideal and not report.only_in_J
    return report


def initial_ideal(r: int, max_weight: int, order: MonomialOrder = DEFAULT_ORDER, adapted: bool = False,
                  compare: bool = False, weight_cap: int = DEFAULT_WEIGHT_CAP, force: bool = False,
                  progress=None) -> InitialIdealReport:
    """
    Weight-graded initial ideal of a for weights 0..max_weight.

    Arguments:
        progress (callable): optional wrapper around the weight iterator (e.g. tqdm).

    Returns:
        InitialIdealReport; quotient_dim + ideal_dim = monomials at every weight.
    """
    _check_r(r)
    check_weight_cap(max_weight, weight_cap, force)
    target = target_series(max_weight)
    weights = range(max_weight + 1)
    if progress is not None:
        weights = progress(weights)
    report = InitialIdealReport(r, max_weight, order.name, adapted)
    for n in weights:
        report.weights.append(weight_report(r, n, order, adapted, compare, target[n]))
    return report


def compare_with_J(r: int, max_weight: int, order: MonomialOrder = DEFAULT_ORDER, adapted: bool = False,
                   **kwargs) -> InitialIdealReport:
    return initial_ideal(r, max_weight, order, adapted, compare=True, **kwargs)


def sweep(r: int, max_weight: int, adapted: bool = False, include_lex: bool = False, **kwargs) -> list:
    orders = BUILTIN_ORDERS + (LEX_ORDERS if include_lex else ())
    return [compare_with_J(r, max_weight, order, adapted, **kwargs) for order in orders]


# the differential power ideal of x_1^r in K[x_1, x_2, ...]

@dataclass
class JetCell:
    weight: int
    degree: int
    monomials: int
    quotient_dim: int
    expected: int
    leading: tuple = ()
    agrees_with_I: bool = True

    @property
    def ok(self) -> bool:
        return self.quotient_dim == self.expected


@dataclass
class JetReport:
    r: int
    max_weight: int
    order: str
    cells: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cells)


@lru_cache(maxsize=None)
def _x_monomials(n: int, degree: int) -> tuple:
    return tuple(from_colored(ColoredPartition(black=lam)) for lam in enumerate_partitions(n) if lam.length == degree)


@lru_cache(maxsize=None)
def _jet_generators(r: int, max_weight: int) -> tuple:
    g = ArcPolynomial({Monomial.from_dict({("x", 1): r}): 1}, r)
    gens = []
    while g.weight <= max_weight:
        gens.append(g)
        g = derive(g)
    return tuple(gens)


def differential_power_ideal(r: int, max_weight: int, order: MonomialOrder = DEFAULT_ORDER,
                             weight_cap: int = DEFAULT_WEIGHT_CAP, force: bool = False) -> JetReport:
    """
    Bi-graded quotient dimensions of K[x_i]/(D^j(x_1^r) : j >= 0).

    Every generator has degree r, so the ideal splits by (weight n, degree m); the
    quotient dimension of each cell is compared with b_{r,r}(m, n), and its leading
    monomials with the x-family ideal I_r.
    """
    _check_r(r)
    check_weight_cap(max_weight, weight_cap, force)
    gens = _jet_generators(r, max_weight)
    report = JetReport(r, max_weight, order.name)
    for n in range(max_weight + 1):
        for degree in range(0, n + 1):
            columns = sorted(_x_monomials(n, degree), key=lambda m: order.key(m, n), reverse=True)
            index = {m: j for j, m in enumerate(columns)}
            rows = []
            for g in gens:
                if g.weight > n or degree < r:
                    continue
                for m in _x_monomials(n - g.weight, degree - r):
                    rows.append({index[t]: c for t, c in g.times(m).terms.items()})
            pivots = echelon(rows)
            leading = [columns[col] for col in sorted(pivots)]
            expected_in_I = [m for m in columns if in_I_family(m, r, "x")]
            report.cells.append(JetCell(
                weight=n,
                degree=degree,
                monomials=len(columns),
                quotient_dim=len(columns) - len(pivots),
                expected=count_b(r, r, degree, n),
                leading=tuple(str(m) for m in leading),
                agrees_with_I=set(leading) == set(expected_in_I),
            ))
    logger.debug("differential power ideal r=%d up to weight %d: %d cells", r, max_weight, len(report.cells))
    return report
