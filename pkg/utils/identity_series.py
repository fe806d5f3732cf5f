"""
Closed-form q-series of the F_r identities and the catalogue that checks them.

Builders:
- series_D(r, i, N): the Durfee-dissection multi-sum, one term per d_1 >= ... >= d_{r-1} >= 0.
- series_G(r, N): G_r, the generating series of B_{r,r}(n).
- series_fixed_length(r, i, m, N): the same multi-sum restricted to partitions with m parts.
- series_X(m, r, N): X_m, the i = r multi-sum restricted to d_1 + ... + d_{r-1} = m.
- series_Gl(r, l, N): G_{r,l}, partitions of B_{r,r} with at most l parts different from 1.
- series_S(component, r, N): S1, S2, S3a, S3b, S3, S4a, S4b, total and target = H^2/(q)_1.

Verification:
- CATALOGUE: every checkable identity, in report order.
- verify(name, params, N): compares both sides coefficientwise and returns an IdentityReport.

Infinite sums over k are cut where every remaining term has q-valuation above N;
each builder states the valuation of its k-th term next to the loop.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

from colored_partitions import count_F, type_counts
from errors import UnknownIdentityError, require
from monomial_ideals import hilbert_Gl_quotient
from partition_enum import (
    check_ri,
    count_A,
    count_B,
    count_b,
    count_box,
    count_D,
    count_d,
    count_G,
    count_kth_smallest,
    count_max_length,
    count_smallest_part,
)
from series_core import (
    TruncatedSeries,
    first_divergence,
    invert,
    inverse_pochhammer,
    inverse_pochhammer_product,
    one_minus_q_power,
    partition_series,
    pochhammer,
    pochhammer_range,
    prod_inv_tail,
    q_binomial,
    sum_series,
)

logger = logging.getLogger(__name__)

BRUTE_PARTITION_ORDER = 40
BRUTE_COLORED_ORDER = 12

S_COMPONENTS = ("S1", "S2", "S3a", "S3b", "S3", "S4a", "S4b", "total", "target")


# Durfee multi-sums

def _check_r(r: int) -> None:
    require(r >= 2, f"r must be >= 2, got {r}")


@lru_cache(maxsize=None)
def durfee_tuples(r: int, bound: int) -> tuple:
    """
    Non-increasing tuples (d_1, ..., d_{r-1}) of non-negative integers with
    sum(d_j^2 - d_j) <= bound.

    Every exponent used below is at least sum(d_j^2 - d_j), so these are all
    the tuples that can reach q^bound.
    """
    out = []

    def descend(prefix, top, budget):
        if len(prefix) == r - 1:
            out.append(tuple(prefix))
            return
        for d in range(0, top + 1):
            cost = d * d - d
            if cost > budget:
                break
            prefix.append(d)
            descend(prefix, d, budget - cost)
            prefix.pop()

    top = 0
    while (top + 1) * top <= bound:
        top += 1
    descend([], top, bound)
    logger.debug("durfee_tuples(r=%d, bound=%d): %d tuples", r, bound, len(out))
    return tuple(out)


def _denominator_indices(sides: tuple) -> list:
    return [a - b for a, b in zip(sides, sides[1:])] + [sides[-1]]


def _accumulate(total: list, sides: tuple, exponent: int, order: int, sign: int = 1) -> None:
    if exponent > order:
        return
    base = inverse_pochhammer_product(_denominator_indices(sides), order - exponent)
    for n, c in enumerate(base.coeffs):
        if c:
            total[exponent + n] += sign * c


def _durfee_exponent(sides: tuple, r: int, i: int) -> int:
    return sum(d * d for d in sides) - sum(sides[: r - i])


def _durfee_sum(r: int, i: int, order: int, keep: Callable[[tuple], bool]) -> TruncatedSeries:
    total = [0] * (order + 1)
    for sides in durfee_tuples(r, order):
        if not keep(sides):
            continue
        e = _durfee_exponent(sides, r, i)
        if i == r:
            _accumulate(total, sides, e, order)
            continue
        last_rect = sides[r - i - 1]
        if last_rect == 0:
            continue  # factor 1 - q^0 vanishes
        _accumulate(total, sides, e, order)
        _accumulate(total, sides, e + last_rect, order, -1)
    return TruncatedSeries(tuple(total), order)


@lru_cache(maxsize=None)
def series_D(r: int, i: int, order: int) -> TruncatedSeries:
    check_ri(r, i)
    return _durfee_sum(r, i, order, lambda sides: True)


def series_G(r: int, order: int) -> TruncatedSeries:
    _check_r(r)
    return series_D(r, r, order)


@lru_cache(maxsize=None)
def series_fixed_length(r: int, i: int, m: int, order: int) -> TruncatedSeries:
    """Members of D_{r,i} with m parts: tuples with d_1 + ... + d_{r-1} = m + r - i."""
    check_ri(r, i)
    require(m >= 0, f"m must be >= 0, got {m}")
    return _durfee_sum(r, i, order, lambda sides: sum(sides) == m + r - i)


@dataclass
class DurfeeTable:
    """
    X[m] = sum over sum(d) = m of q^{sum d^2}/den and
    Y[m] = sum over sum(d) = m of q^{sum d^2 - m}/den, for one (r, N).
    """
    r: int
    order: int
    X: dict = field(default_factory=dict)
    Y: dict = field(default_factory=dict)

    def x(self, m: int) -> TruncatedSeries:
        return self.X.get(m, TruncatedSeries.zero(self.order))

    def y(self, m: int) -> TruncatedSeries:
        return self.Y.get(m, TruncatedSeries.zero(self.order))

    def x_prefix(self, m: int) -> TruncatedSeries:
        return sum_series((self.x(j) for j in range(m + 1)), self.order)


@lru_cache(maxsize=None)
def durfee_table(r: int, order: int) -> DurfeeTable:
    _check_r(r)
    xs, ys = {}, {}
    for sides in durfee_tuples(r, order):
        m = sum(sides)
        square = sum(d * d for d in sides)
        xs.setdefault(m, [0] * (order + 1))
        ys.setdefault(m, [0] * (order + 1))
        _accumulate(xs[m], sides, square, order)
        _accumulate(ys[m], sides, square - m, order)
    return DurfeeTable(
        r,
        order,
        X={m: TruncatedSeries(tuple(v), order) for m, v in xs.items()},
        Y={m: TruncatedSeries(tuple(v), order) for m, v in ys.items()},
    )


def series_X(m: int, r: int, order: int) -> TruncatedSeries:
    require(m >= 0, f"m must be >= 0, got {m}")
    return durfee_table(r, order).x(m)


def series_X_shifted(m: int, r: int, order: int) -> TruncatedSeries:
    """Sum over d_1 + ... + d_{r-1} = m of q^{sum d_j^2 - m}/den; the (l+r)-term of G_{r,l} at m = l + r."""
    require(m >= 0, f"m must be >= 0, got {m}")
    return durfee_table(r, order).y(m)


@lru_cache(maxsize=None)
def series_Gl(r: int, ell: int, order: int) -> TruncatedSeries:
    """
    G_{r,l} = (X_0 + ... + X_{l+r-1}) - (1 - q^{l+r}) * sum over sum(d) = l+r of q^{sum d^2 - (l+r)}/den.
    """
    _check_r(r)
    require(ell >= 0, f"l must be >= 0, got {ell}")
    table = durfee_table(r, order)
    m = ell + r
    return table.x_prefix(m - 1) - one_minus_q_power(m, order) * table.y(m)


# the S-series

@lru_cache(maxsize=None)
def s_components(r: int, order: int) -> dict:
    _check_r(r)
    h = partition_series(order)
    g = series_G(r, order)
    inv_q1 = invert(pochhammer(1, order))
    q = TruncatedSeries.monomial(1, order)
    s1 = 1 + 2 * (h - 1) + (g - 1)
    s2 = 2 * (h - 1) * (g - 1)
    s3a = h * (2 * q - 1) * inv_q1 + 1
    s3b = h * h * pochhammer(r - 1, order) * inv_q1 - h * inv_q1
    s4a = (g - 1) * s3a
    s4b = (h * h - h * g) * inv_q1 - s3b
    components = {
        "S1": s1,
        "S2": s2,
        "S3a": s3a,
        "S3b": s3b,
        "S3": s3a + s3b,
        "S4a": s4a,
        "S4b": s4b,
        "target": h * h * inv_q1,
    }
    components["total"] = s1 + s2 + components["S3"] + s4a + s4b
    return components


def series_S(component: str, r: int, order: int) -> TruncatedSeries:
    require(component in S_COMPONENTS, f"unknown S component {component!r}, expected one of {S_COMPONENTS}")
    return s_components(r, order)[component]


def target_series(order: int) -> TruncatedSeries:
    """H^2/(q)_1: part 1 in three colors, every other part in two."""
    h = partition_series(order)
    return h * h * invert(pochhammer(1, order))


def printed_rdp_series(order: int) -> TruncatedSeries:
    """1/(1-q^3) times the product over i >= 2 of 1/(1-q^i), as printed for the arc HP-series."""
    return invert(one_minus_q_power(3, order)) * prod_inv_tail(2, order)


# the same series written as the sums they come from

def s3a_sum(order: int, red_shift: int = 0) -> TruncatedSeries:
    """
    Sum over k >= 2 of q^k / prod_{j>=k}(1-q^j) * (1/(q)_{k-1+red_shift} - 1).

    red_shift = 0 is length(red) <= k-1; red_shift = 1 is the 1/(q)_k - 1 factor
    displayed in the proof for three colors. The k-th term has valuation k + 1.
    """
    terms = []
    for k in range(2, order + 1):
        reds = inverse_pochhammer(k - 1 + red_shift, order) - 1
        terms.append(prod_inv_tail(k, order).shift(k) * reds)
    return sum_series(terms, order)


def _red_kth_sums(r: int, order: int, with_pochhammer_of: Callable[[int, int], TruncatedSeries]):
    # only (k, i_k) with 2k + i_k - 1 <= order
    for k in range(1, order + 1):
        for i_k in range(max(1, r - k), order + 1):
            exponent = 2 * k + i_k - 1
            if exponent > order:
                break
            yield k, i_k, with_pochhammer_of(k, i_k).shift(exponent)


def s3b_sum(r: int, order: int) -> TruncatedSeries:
    """
    Sum over k >= 1, i_k >= max(1, r-k) of
    q^k/prod_{j>=k}(1-q^j) * H q^{k+i_k-1} (q)_{k+i_k-2}/(q)_{k-1}.
    """
    h = partition_series(order)
    per_k = {}
    for k, i_k, term in _red_kth_sums(r, order, lambda k, i: pochhammer_range(k, k + i - 2, order)):
        per_k.setdefault(k, []).append(term)
    total = TruncatedSeries.zero(order)
    for k, terms in per_k.items():
        # q^{2k+i-1} already holds the black q^k
        total = total + prod_inv_tail(k, order) * sum_series(terms, order)
    return h * total


def s4b_sum(r: int, order: int) -> TruncatedSeries:
    """
    H^2 * sum over k >= 1, i_k >= max(1, r-k) of q^{2k+i_k-1} (q)_{k+i_k-2} G_{r, k+i_k-r}, minus S3b.
    """
    h = partition_series(order)
    per_ell = {}
    for k, i_k, term in _red_kth_sums(r, order, lambda k, i: pochhammer(k + i - 2, order)):
        per_ell.setdefault(k + i_k - r, []).append(term)
    total = TruncatedSeries.zero(order)
    for ell in sorted(per_ell):
        total = total + sum_series(per_ell[ell], order) * series_Gl(r, ell, order)
    return h * h * total - series_S("S3b", r, order)


def lemma_h_sum(m: int, order: int) -> TruncatedSeries:
    """Sum over k >= m of q^k (q)_{k-1}; the k-th term has valuation exactly k."""
    require(m >= 1, f"m must be >= 1, got {m}")
    return sum_series((pochhammer(k - 1, order).shift(k) for k in range(m, order + 1)), order)


def lemma_x_sum(r: int, order: int) -> TruncatedSeries:
    """Sum over l >= 0 of q^{r+l} (q)_{r+l-1} (X_0 + ... + X_{l+r-1}); term l has valuation >= r + l."""
    table = durfee_table(r, order)
    terms = []
    for ell in range(0, order - r + 1):
        terms.append(pochhammer(r + ell - 1, order).shift(r + ell) * table.x_prefix(ell + r - 1))
    return sum_series(terms, order)


def lemma_x_closed(r: int, order: int) -> TruncatedSeries:
    """1 - G_r/H + sum over m >= r of X_m (q)_m."""
    table = durfee_table(r, order)
    tail = sum_series(
        (table.x(m) * pochhammer(m, order) for m in sorted(table.X) if m >= r), order)
    return 1 - series_G(r, order) * invert(partition_series(order)) + tail


# verification catalogue

@dataclass(frozen=True)
class IdentityReport:
    name: str
    params: dict
    order: int
    equal: bool
    first_divergence: Optional[tuple]
    informational: bool = False
    description: str = ""
    lhs: tuple = ()
    rhs: tuple = ()

    @property
    def status(self) -> str:
        if self.informational:
            return "info"
        return "pass" if self.equal else "fail"


@dataclass(frozen=True)
class Identity:
    """
    One checkable identity: `build(params, order)` returns (lhs, rhs) at the given order.
    `brute` names the oracle that caps the order ("partition", "colored" or None).
    """
    name: str
    description: str
    params: tuple
    build: Callable[[dict, int], tuple]
    brute: Optional[str] = None
    informational: bool = False


DEFAULT_PARAMS = {"r": 2, "i": None, "m": 1, "l": 1, "k": 2, "a": 4, "b": 2}


def _counts(fn: Callable[[int], int], order: int) -> TruncatedSeries:
    return TruncatedSeries(tuple(fn(n) for n in range(order + 1)), order)


def _type_series(r: int, order: int, *labels: str) -> TruncatedSeries:
    counts = _type_counts_cached(r, order)
    return TruncatedSeries(tuple(sum(counts[lab][n] for lab in labels) for n in range(order + 1)), order)


@lru_cache(maxsize=None)
def _type_counts_cached(r: int, order: int) -> dict:
    return type_counts(r, order)


def _red1(p, N):
    k = p["k"]
    return (_counts(lambda n: count_max_length(k, n) if n else 0, N), inverse_pochhammer(k, N) - 1)


def _smallest(p, N):
    k = p["k"]
    return _counts(lambda n: count_smallest_part(k, n), N), prod_inv_tail(k, N).shift(k)


def _lemma_h(p, N):
    m = p["m"]
    return lemma_h_sum(m, N), pochhammer(m - 1, N) - invert(partition_series(N))


def _kth(p, N):
    k, i = p["k"], p["i"]
    rhs = partition_series(N) * pochhammer(k + i - 2, N).shift(k + i - 1) * inverse_pochhammer(k - 1, N)
    return _counts(lambda n: count_kth_smallest(k, i, n), N), rhs


def _box(p, N):
    a, b = p["a"], p["b"]
    return _counts(lambda n: count_box(a, b, n), N), q_binomial(a, b, N)


def _gordon(p, N):
    r, i = p["r"], p["i"]
    return _counts(lambda n: count_A(r, i, n), N), _counts(lambda n: count_B(r, i, n), N)


def _eq_d(p, N):
    r, i = p["r"], p["i"]
    return series_D(r, i, N), _counts(lambda n: count_B(r, i, n), N)


def _eq_d_durfee(p, N):
    r, i = p["r"], p["i"]
    return series_D(r, i, N), _counts(lambda n: count_D(r, i, n), N)


def _series_g(p, N):
    r = p["r"]
    return series_G(r, N), _counts(lambda n: count_B(r, r, n), N)


def _series_x(p, N):
    r, m = p["r"], p["m"]
    return series_X(m, r, N), _counts(lambda n: count_d(r, r, m, n), N)


def _fixed_length(p, N):
    r, i, m = p["r"], p["i"], p["m"]
    return _counts(lambda n: count_b(r, i, m, n), N), series_fixed_length(r, i, m, N)


def _refinement(p, N):
    r, m = p["r"], p["m"]
    return _counts(lambda n: count_b(r, r, m, n), N), _counts(lambda n: count_d(r, r, m, n), N)


def _prop_gl(p, N):
    r, ell = p["r"], p["l"]
    return series_Gl(r, ell, N), _counts(lambda n: count_G(r, ell, n), N)


def _remark_gl(p, N):
    r, ell = p["r"], p["l"]
    return TruncatedSeries(tuple(hilbert_Gl_quotient(r, ell, N)), N), series_Gl(r, ell, N)


def _x_low(p, N):
    r = p["r"]
    return durfee_table(r, N).x_prefix(r - 1), inverse_pochhammer(r - 1, N)


def _lemma_x(p, N):
    r = p["r"]
    return lemma_x_sum(r, N), lemma_x_closed(r, N)


def _eq_3i(p, N):
    return s3a_sum(N), series_S("S3a", p["r"], N)


def _eq_3b(p, N):
    r = p["r"]
    return s3b_sum(r, N), series_S("S3b", r, N)


def _lemma_s3(p, N):
    r = p["r"]
    h = partition_series(N)
    closed = 1 - 2 * h + h * h * pochhammer(r - 1, N) * invert(pochhammer(1, N))
    return s3a_sum(N) + s3b_sum(r, N), closed


def _type_brute(labels, component):
    def build(p, N):
        r = p["r"]
        return _type_series(r, N, *labels), series_S(component, r, N)
    return build


def _s4a_printed(p, N):
    r = p["r"]
    return _type_series(r, N, "4a"), (series_G(r, N) - 1) * s3a_sum(N, red_shift=1)


def _prop_s4b(p, N):
    r = p["r"]
    return s4b_sum(r, N), series_S("S4b", r, N)


def _theorem_main(p, N):
    r = p["r"]
    return series_S("total", r, N), series_S("target", r, N)


def _theorem_b(p, N):
    r = p["r"]
    return _counts(lambda n: count_F(r, n), N), target_series(N)


def _rdp(p, N):
    return printed_rdp_series(N), target_series(N)


CATALOGUE = (
    Identity("red1", "partitions with 1..k parts = 1/(q)_k - 1", ("k",), _red1),
    Identity("smallest_part", "smallest part exactly k = q^k / prod_{j>=k}(1-q^j)", ("k",), _smallest),
    Identity("lemma_H", "sum_{k>=m} q^k (q)_{k-1} = (q)_{m-1} - 1/H", ("m",), _lemma_h),
    Identity("kth_smallest", "k-th smallest part i = H q^{k+i-1} (q)_{k+i-2}/(q)_{k-1}", ("k", "i"), _kth),
    Identity("q_binomial_box", "partitions in a b x (a-b) box = [a choose b]_q", ("a", "b"), _box),
    Identity("gordon", "A_{r,i}(n) = B_{r,i}(n)", ("r", "i"), _gordon, brute="partition"),
    Identity("eq_D", "Durfee multi-sum = sum B_{r,i}(n) q^n", ("r", "i"), _eq_d, brute="partition"),
    Identity("eq_D_durfee", "Durfee multi-sum = sum D_{r,i}(n) q^n (greedy dissection)", ("r", "i"), _eq_d_durfee,
             brute="partition"),
    Identity("series_G", "G_r = sum B_{r,r}(n) q^n", ("r",), _series_g, brute="partition"),
    Identity("series_X", "X_m = sum d_{r,r}(m,n) q^n", ("r", "m"), _series_x, brute="partition"),
    Identity("prop_fixed_length", "sum_n b_{r,i}(m,n) q^n = fixed-length multi-sum", ("r", "i", "m"), _fixed_length,
             brute="partition"),
    Identity("refinement_b_d", "b_{r,r}(m,n) = d_{r,r}(m,n)", ("r", "m"), _refinement, brute="partition"),
    Identity("prop_Gl", "G_{r,l} closed form = sum G_{r,l}(n) q^n", ("r", "l"), _prop_gl, brute="partition"),
    Identity("remark_Gl_hilbert", "Hilbert function of K[z]/(I_r, z_j1..z_j(l+1)) = G_{r,l}", ("r", "l"),
             _remark_gl, brute="partition"),
    Identity("lemma_X_low", "X_0 + ... + X_{r-1} = 1/(q)_{r-1}", ("r",), _x_low),
    Identity("lemma_X", "sum_l q^{r+l}(q)_{r+l-1} sum_{m<l+r} X_m = 1 - G_r/H + sum_{m>=r} X_m (q)_m", ("r",),
             _lemma_x),
    Identity("eq_3i", "S3a as a sum over k = H (2q-1)/(q)_1 + 1", ("r",), _eq_3i),
    Identity("eq_3b", "S3b as a double sum = H^2 (q)_{r-1}/(q)_1 - H/(q)_1", ("r",), _eq_3b),
    Identity("lemma_S3", "S3a + S3b sums = 1 - 2H + H^2 (q)_{r-1}/(q)_1", ("r",), _lemma_s3),
    Identity("type1_brute", "type 1 members of F_r = S1", ("r",), _type_brute(("1",), "S1"), brute="colored"),
    Identity("type2_brute", "type 2 members of F_r = S2", ("r",), _type_brute(("2",), "S2"), brute="colored"),
    Identity("type3_brute", "type 3 members of F_r = S3 = S3a + S3b", ("r",), _type_brute(("3a", "3b"), "S3"),
             brute="colored"),
    Identity("type3a_brute", "type 3.a members of F_r = S3a", ("r",), _type_brute(("3a",), "S3a"), brute="colored"),
    Identity("type3b_brute", "type 3.b members of F_r = S3b", ("r",), _type_brute(("3b",), "S3b"), brute="colored"),
    Identity("lemma_S4a", "type 4.a members of F_r = (G_r - 1) S3a", ("r",), _type_brute(("4a",), "S4a"),
             brute="colored"),
    Identity("lemma_S4a_printed", "type 4.a members vs the 1/(q)_k - 1 red factor", ("r",), _s4a_printed,
             brute="colored", informational=True),
    Identity("type4b_brute", "type 4.b members of F_r = S4b", ("r",), _type_brute(("4b",), "S4b"), brute="colored"),
    Identity("prop_S4b", "S4b as a double sum over G_{r,l} = (H^2 - H G_r)/(q)_1 - S3b", ("r",), _prop_s4b),
    Identity("theorem_main", "S1 + S2 + S3 + S4a + S4b = H^2/(q)_1", ("r",), _theorem_main),
    Identity("theorem_B_brute", "F_r(n) by enumeration = coefficients of H^2/(q)_1", ("r",), _theorem_b,
             brute="colored"),
    Identity("rdp_printed_form", "printed arc HP-series 1/(1-q^3) prod_{i>=2} 1/(1-q^i) vs H^2/(q)_1", ("r",), _rdp,
             informational=True),
)

_BY_NAME = {identity.name: identity for identity in CATALOGUE}


def identity_names() -> tuple:
    return tuple(_BY_NAME)


def get_identity(name: str) -> Identity:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise UnknownIdentityError(f"unknown identity {name!r}; known: {', '.join(_BY_NAME)}") from None


def resolve_params(identity: Identity, params: Optional[dict] = None) -> dict:
    given = {key: value for key, value in (params or {}).items() if value is not None}
    resolved = {}
    for key in identity.params:
        resolved[key] = given.get(key, DEFAULT_PARAMS[key])
    if "i" in resolved and resolved["i"] is None:
        # i defaults to r for the families indexed by (r, i), and to 1 for kth_smallest
        resolved["i"] = given.get("r", DEFAULT_PARAMS["r"]) if "r" in identity.params else 1
    if "r" in resolved:
        _check_r(resolved["r"])
    if "r" in resolved and "i" in resolved:
        check_ri(resolved["r"], resolved["i"])
    for key in ("k", "i"):
        if key in resolved:
            require(resolved[key] >= 1, f"{key} must be >= 1 for {identity.name}, got {resolved[key]}")
    if "m" in resolved:
        require(resolved["m"] >= 0, f"m must be >= 0, got {resolved['m']}")
    if "l" in resolved:
        require(resolved["l"] >= 0, f"l must be >= 0, got {resolved['l']}")
    if "a" in resolved:
        require(0 <= resolved["b"] <= resolved["a"], f"need 0 <= b <= a, got a={resolved['a']}, b={resolved['b']}")
    return resolved


def effective_order(identity: Identity, order: int, brute_partition_order: int = BRUTE_PARTITION_ORDER,
                    brute_colored_order: int = BRUTE_COLORED_ORDER) -> int:
    if identity.brute == "partition":
        return min(order, brute_partition_order)
    if identity.brute == "colored":
        return min(order, brute_colored_order)
    return order


def verify(name: str, params: Optional[dict], order: int, brute_partition_order: int = BRUTE_PARTITION_ORDER,
           brute_colored_order: int = BRUTE_COLORED_ORDER) -> IdentityReport:
    """
    Checks one catalogue identity.

    Arguments:
        name (str): catalogue name.
        params (dict): values for r, i, m, l, k, a, b; missing ones take DEFAULT_PARAMS.
        order (int): truncation order N. Identities backed by enumeration are
            compared at min(N, brute order) instead.

    Returns:
        IdentityReport, with `order` the order actually compared.
    """
    require(order >= 0, f"order must be >= 0, got {order}")
    identity = get_identity(name)
    resolved = resolve_params(identity, params)
    n = effective_order(identity, order, brute_partition_order, brute_colored_order)
    logger.debug("verify %s %s at order %d", name, resolved, n)
    lhs, rhs = identity.build(resolved, n)
    divergence = first_divergence(lhs, rhs)
    return IdentityReport(
        name=name,
        params=resolved,
        order=n,
        equal=divergence is None,
        first_divergence=divergence,
        informational=identity.informational,
        description=identity.description,
        lhs=lhs.coeffs,
        rhs=rhs.coeffs,
    )
