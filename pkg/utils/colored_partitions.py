"""
3-colored partitions (black, red, green), their statistics and the family F_r.

Functions:
- stats(cp): lengths, smallest black part k, k-th smallest red part i_k, #{1_g}.
- in_F_intro(cp, r): membership following the conditions 1 / 2 / 3 of the introduction.
- classify(cp, r) / in_F_sec2(cp, r): the four-type formulation (types 1, 2, 3a, 3b, 4a, 4b).
- iter_colored(n) / enumerate_colored(n): all 3-colored partitions of n.
- count_F(r, n), type_counts(r, N): brute-force counts.
- target_count(n): partitions with part 1 in 3 colors and every other part in 2
  colors, counted directly and read off H^2/(q)_1.

Example usage:
    >>> cp = ColoredPartition.parse("7_b+6_r+3_b+3_r+1_r")
    >>> stats(cp).i_k
    6
"""

import logging
import re
from dataclasses import dataclass
from math import comb
from typing import Iterator, Optional

from errors import CountMismatchError, ParameterError, require
from partition_enum import Partition, enumerate_partitions, is_in_B
from series_core import invert, partition_series, pochhammer

logger = logging.getLogger(__name__)

COLORS = ("b", "r", "g")
TYPE_LABELS = ("1", "2", "3a", "3b", "4a", "4b")

_TERM = re.compile(r"^\s*(\d+)_([brg])\s*$")


@dataclass(frozen=True)
class ColoredPartition:
    black: Partition = Partition()
    red: Partition = Partition()
    green: Partition = Partition()

    @property
    def weight(self) -> int:
        return self.black.weight + self.red.weight + self.green.weight

    @property
    def colors(self) -> frozenset:
        return frozenset(c for c, sub in zip(COLORS, self.subpartitions()) if sub)

    def subpartitions(self) -> tuple:
        return self.black, self.red, self.green

    @classmethod
    def parse(cls, text: str) -> "ColoredPartition":
        """Reads the written form '4_g+3_g+2_r+2_b+2_b'; the empty string is the empty partition."""
        parts = {c: [] for c in COLORS}
        for term in filter(None, (t.strip() for t in text.split("+"))):
            match = _TERM.match(term)
            if not match or int(match.group(1)) <= 0:
                raise ParameterError(f"cannot read colored part {term!r}")
            parts[match.group(2)].append(int(match.group(1)))
        return cls(*(Partition(tuple(sorted(parts[c], reverse=True))) for c in COLORS))

    def __str__(self):
        terms = [(p, c) for c, sub in zip(COLORS, self.subpartitions()) for p in sub]
        terms.sort(key=lambda t: (-t[0], COLORS.index(t[1])))
        return "+".join(f"{p}_{c}" for p, c in terms) or "()"


@dataclass(frozen=True)
class ColorStats:
    ell_b: int
    ell_r: int
    ell_g: int
    k: Optional[int]
    i_k: Optional[int]
    green_ones: int


def stats(cp: ColoredPartition) -> ColorStats:
    k = cp.black.parts[-1] if cp.black else None
    i_k = None
    # k-th smallest with multiplicity
    if k is not None and cp.red.length >= k:
        i_k = cp.red.ascending()[k - 1]
    return ColorStats(
        ell_b=cp.black.length,
        ell_r=cp.red.length,
        ell_g=cp.green.length,
        k=k,
        i_k=i_k,
        green_ones=cp.green.ones,
    )


def _check_r(r: int) -> None:
    require(r >= 2, f"r must be >= 2, got {r}")


def _green_ok(cp: ColoredPartition, r: int) -> bool:
    return not cp.green or is_in_B(cp.green, r, r)


def in_F_intro(cp: ColoredPartition, r: int) -> bool:
    """Conditions 1, 2(a,b) and 3(a,b) of the introduction, read literally."""
    _check_r(r)
    if not _green_ok(cp, r):
        return False
    colors = cp.colors
    if len(colors) <= 1 or (len(colors) == 2 and "g" in colors):
        return True
    s = stats(cp)
    if s.ell_r <= s.k - 1:
        return True
    if s.k + s.i_k < r:
        return False
    if len(colors) == 2:
        return True
    return s.ell_g - s.green_ones < s.k + s.i_k - r + 1


def classify(cp: ColoredPartition, r: int) -> Optional[str]:
    """
    Type of cp in the four-type formulation of F_r, split by sub-case.

    Returns:
        one of "1", "2", "3a", "3b", "4a", "4b", or None when cp is not in F_r.
    """
    _check_r(r)
    colors = cp.colors
    if not colors:
        return "1"
    if len(colors) == 1:
        return "1" if _green_ok(cp, r) else None
    if len(colors) == 2 and "g" in colors:
        return "2" if _green_ok(cp, r) else None
    s = stats(cp)
    if len(colors) == 2:
        if s.ell_r <= s.k - 1:
            return "3a"
        if s.k + s.i_k >= r:
            return "3b"
        return None
    if not _green_ok(cp, r):
        return None
    if s.ell_r <= s.k - 1:
        return "4a"
    if s.k + s.i_k >= r and s.ell_g - s.green_ones < s.k + s.i_k - r + 1:
        return "4b"
    return None


def in_F_sec2(cp: ColoredPartition, r: int) -> bool:
    return classify(cp, r) is not None


def iter_colored(n: int) -> Iterator[ColoredPartition]:
    """
    Every 3-colored partition of n, ordered by (|black|, |red|, |green|) and then by
    the canonical order of each sub-partition.
    """
    require(n >= 0, f"n must be >= 0, got {n}")
    for nb in range(n + 1):
        for nr in range(n - nb + 1):
            ng = n - nb - nr
            for black in enumerate_partitions(nb):
                for red in enumerate_partitions(nr):
                    for green in enumerate_partitions(ng):
                        yield ColoredPartition(black, red, green)


def enumerate_colored(n: int) -> list:
    return list(iter_colored(n))


def count_F(r: int, n: int) -> int:
    _check_r(r)
    return sum(1 for cp in iter_colored(n) if in_F_intro(cp, r))


def type_counts(r: int, order: int) -> dict:
    _check_r(r)
    counts = {label: [0] * (order + 1) for label in TYPE_LABELS}
    for n in range(order + 1):
        for cp in iter_colored(n):
            label = classify(cp, r)
            if label is not None:
                counts[label][n] += 1
    return counts


def _colorings(multiplicity: int, colors: int) -> int:
    # multisets of size `multiplicity` drawn from `colors` colors
    return comb(multiplicity + colors - 1, colors - 1)


def target_count(n: int) -> tuple:
    """
    Partitions of n where part 1 may take 3 colors and every other part 2 colors.

    Returns:
        (count by direct enumeration, coefficient of q^n in H^2/(q)_1).

    Raises:
        CountMismatchError: when the two counts differ.
    """
    require(n >= 0, f"n must be >= 0, got {n}")
    enumerated = 0
    for lam in enumerate_partitions(n):
        ways = 1
        for part in set(lam.parts):
            ways *= _colorings(lam.multiplicity(part), 3 if part == 1 else 2)
        enumerated += ways
    h = partition_series(n)
    from_series = (h * h * invert(pochhammer(1, n)))[n]
    if enumerated != from_series:
        raise CountMismatchError(
            f"target_count({n}): enumeration gives {enumerated}, series gives {from_series}", enumerated, from_series)
    logger.debug("target_count(%d) = %d", n, enumerated)
    return enumerated, from_series
