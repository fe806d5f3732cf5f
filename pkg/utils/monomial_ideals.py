"""
Monomials of S = K[x_i, y_i, z_i : i >= 1] (variable v_i has weight i), the
monomial ideals I_r and J_r, and the quotient Hilbert functions.

A monomial corresponds to a 3-colored partition: x_i is a black part i, y_i a
red part i, z_i a green part i, each repeated as often as its exponent.
"""

import logging
import re
from dataclasses import dataclass
from functools import lru_cache

from colored_partitions import ColoredPartition, iter_colored
from errors import ParameterError, require
from partition_enum import Partition, enumerate_partitions

logger = logging.getLogger(__name__)

FAMILIES = ("x", "y", "z")
_FACTOR = re.compile(r"^([xyz])_?(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True)
class Monomial:
    # sorted ((family, index), exponent) pairs, exponents > 0
    exponents: tuple = ()

    def __post_init__(self):
        for (family, index), e in self.exponents:
            if family not in FAMILIES or index < 1 or e <= 0:
                raise ParameterError(f"invalid factor {family}_{index}^{e}")

    @classmethod
    def from_dict(cls, exponents: dict) -> "Monomial":
        return cls(tuple(sorted((var, e) for var, e in exponents.items() if e)))

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        """Reads 'x2^2*y2*z3*z4' (or 'x_2^2*...'); '1' is the empty monomial."""
        text = text.strip()
        exponents = {}
        if text in ("", "1"):
            return cls()
        for factor in text.split("*"):
            match = _FACTOR.match(factor.strip())
            if not match:
                raise ParameterError(f"cannot read monomial factor {factor!r}")
            var = (match.group(1), int(match.group(2)))
            exponents[var] = exponents.get(var, 0) + int(match.group(3) or 1)
        return cls.from_dict(exponents)

    def as_dict(self) -> dict:
        return dict(self.exponents)

    def exponent(self, family: str, index: int) -> int:
        for var, e in self.exponents:
            if var == (family, index):
                return e
        return 0

    def family_exponents(self, family: str) -> dict:
        return {index: e for (f, index), e in self.exponents if f == family}

    def family_indices(self, family: str) -> list:
        out = []
        for (f, index), e in self.exponents:
            if f == family:
                out.extend([index] * e)
        return sorted(out)

    @property
    def weight(self) -> int:
        return sum(index * e for (_, index), e in self.exponents)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        merged = self.as_dict()
        for var, e in other.exponents:
            merged[var] = merged.get(var, 0) + e
        return Monomial.from_dict(merged)

    def divides(self, other: "Monomial") -> bool:
        mine = other.as_dict()
        return all(mine.get(var, 0) >= e for var, e in self.exponents)

    def __str__(self):
        if not self.exponents:
            return "1"
        return "*".join(f"{f}{i}" + (f"^{e}" if e > 1 else "") for (f, i), e in self.exponents)


def to_colored(m: Monomial) -> ColoredPartition:
    subs = []
    for family in FAMILIES:
        subs.append(Partition(tuple(sorted(m.family_indices(family), reverse=True))))
    return ColoredPartition(*subs)


def from_colored(cp: ColoredPartition) -> Monomial:
    exponents = {}
    for family, sub in zip(FAMILIES, cp.subpartitions()):
        for part in sub:
            exponents[(family, part)] = exponents.get((family, part), 0) + 1
    return Monomial.from_dict(exponents)


def _check_r(r: int) -> None:
    require(r >= 2, f"r must be >= 2, got {r}")


def in_I_family(m: Monomial, r: int, family: str) -> bool:
    """
    Divisibility by some v_i^a v_{i+1}^(r-a), 1 <= a <= r, in the given family.
    v_{i+1}^r itself is the case a = r at index i + 1.
    """
    _check_r(r)
    e = m.family_exponents(family)
    return any(e[i] + e.get(i + 1, 0) >= r for i in e)


def in_I(m: Monomial, r: int) -> bool:
    return in_I_family(m, r, "z")


def in_J(m: Monomial, r: int) -> bool:
    # the k smallest reds give the smallest i_k, which decides both generator classes
    if in_I(m, r):
        return True
    reds = m.family_indices("y")
    if not reds:
        return False
    greens_from_two = sum(1 for j in m.family_indices("z") if j >= 2)
    for k in m.family_exponents("x"):
        if len(reds) < k:
            continue
        i_k = reds[k - 1]
        if k + i_k <= r - 1:
            return True
        if greens_from_two >= k + i_k - r + 1:
            return True
    return False


@lru_cache(maxsize=None)
def monomials_of_weight(n: int) -> tuple:
    return tuple(from_colored(cp) for cp in iter_colored(n))


def standard_monomials(r: int, order: int) -> list:
    _check_r(r)
    require(order >= 0, f"order must be >= 0, got {order}")
    return [[m for m in monomials_of_weight(n) if not in_J(m, r)] for n in range(order + 1)]


def hilbert_J(r: int, order: int) -> list:
    return [len(ms) for ms in standard_monomials(r, order)]


def hilbert_Gl_quotient(r: int, ell: int, order: int) -> list:
    """
    Hilbert function of K[z_1, z_2, ...]/(I_r, z_j1...z_j(l+1) : 2 <= j1 <= ... <= j(l+1)).
    """
    _check_r(r)
    require(ell >= 0, f"l must be >= 0, got {ell}")
    counts = []
    for n in range(order + 1):
        count = 0
        for lam in enumerate_partitions(n):
            m = from_colored(ColoredPartition(green=lam))
            if in_I(m, r):
                continue
            if sum(1 for j in m.family_indices("z") if j >= 2) <= ell:
                count += 1
        counts.append(count)
    return counts
