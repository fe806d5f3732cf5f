"""
Brute-force oracles for ordinary partitions and for the constrained families
used by the identities: Gordon's B_{r,i}, the residue family A_{r,i}, the
fixed-length counts b_{r,i}(m, n), the Durfee family D_{r,i} and G_{r,l}.

Functions:
- enumerate_partitions(n) / count_partitions(n): all partitions of n.
- enumerate_B(r, i, n) / count_B(r, i, n): Gordon's difference-condition family.
- count_A(r, i, n): partitions avoiding the residues 0, +-i mod 2r+1.
- count_b(r, i, m, n): members of B_{r,i}(n) with exactly m parts.
- durfee_profile(partition, r, i), count_d(r, i, m, n), count_D(r, i, n).
- count_G(r, l, n): members of B_{r,r}(n) with at most l parts different from 1.
- count_max_length, count_smallest_part, count_kth_smallest, count_box:
  recursive counting oracles for the single-partition generating functions.

All enumerations return partitions in lexicographically descending order,
e.g. for n = 4: 4, 3+1, 2+2, 2+1+1, 1+1+1+1.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from errors import ParameterError, require

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Partition:
    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ParameterError(f"parts must be non-increasing, got {parts}")
        if parts and parts[-1] <= 0:
            raise ParameterError(f"parts must be positive, got {parts}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def ones(self) -> int:
        return self.multiplicity(1)

    def multiplicity(self, part: int) -> int:
        return self.parts.count(part)

    def ascending(self) -> tuple:
        return tuple(reversed(self.parts))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __bool__(self):
        return bool(self.parts)

    def __str__(self):
        return "+".join(str(p) for p in self.parts) or "()"


@dataclass(frozen=True)
class DurfeeProfile:
    """
    Sides d_1 >= ... >= d_{r-1} >= 0 of the successive Durfee rectangles and squares.

    A rectangle with d rows has d + 1 columns and reports side d + 1, so an
    empty rectangle reports side 1. A square with d rows reports side d.
    """
    sides: tuple
    rectangle_count: int
    square_count: int

    @property
    def length(self) -> int:
        rects = self.sides[: self.rectangle_count]
        squares = self.sides[self.rectangle_count:]
        return sum(d - 1 for d in rects) + sum(squares)


def check_ri(r: int, i: int) -> None:
    require(r >= 2, f"r must be >= 2, got {r}")
    require(1 <= i <= r, f"i must satisfy 1 <= i <= r = {r}, got {i}")


def _check_n(n: int) -> None:
    require(n >= 0, f"n must be >= 0, got {n}")


# ordinary partitions

def _descend(n: int, max_part: int, prefix: list, out: list) -> None:
    if n == 0:
        out.append(Partition(tuple(prefix)))
        return
    for p in range(min(n, max_part), 0, -1):
        prefix.append(p)
        _descend(n - p, p, prefix, out)
        prefix.pop()


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple:
    """All partitions of n, lexicographically descending; n = 0 gives the empty partition."""
    _check_n(n)
    out = []
    _descend(n, n, [], out)
    return tuple(out)


def count_partitions(n: int) -> int:
    return len(enumerate_partitions(n))


# Gordon's family

def is_gordon(partition: Partition, r: int) -> bool:
    """lambda_j - lambda_{j+r-1} >= 2 wherever both parts exist."""
    parts = partition.parts
    return all(parts[j] - parts[j + r - 1] >= 2 for j in range(len(parts) - r + 1))


def is_in_B(partition: Partition, r: int, i: int) -> bool:
    check_ri(r, i)
    return partition.ones <= i - 1 and is_gordon(partition, r)


def _gordon_descend(n, max_part, r, ones_left, prefix, out):
    if n == 0:
        out.append(Partition(tuple(prefix)))
        return
    t = len(prefix)
    for p in range(min(n, max_part), 0, -1):
        if t >= r - 1 and prefix[t - r + 1] - p < 2:
            # smaller p only makes the difference smaller
            break
        if p == 1 and ones_left == 0:
            continue
        prefix.append(p)
        _gordon_descend(n - p, p, r, ones_left - (p == 1), prefix, out)
        prefix.pop()


@lru_cache(maxsize=None)
def enumerate_B(r: int, i: int, n: int) -> tuple:
    check_ri(r, i)
    _check_n(n)
    out = []
    _gordon_descend(n, n, r, i - 1, [], out)
    return tuple(out)


def count_B(r: int, i: int, n: int) -> int:
    return len(enumerate_B(r, i, n))


def count_A(r: int, i: int, n: int) -> int:
    check_ri(r, i)
    _check_n(n)
    modulus = 2 * r + 1
    excluded = {0, i % modulus, (modulus - i) % modulus}
    return sum(1 for lam in enumerate_partitions(n) if all(p % modulus not in excluded for p in lam))


def count_b(r: int, i: int, m: int, n: int) -> int:
    """Members of B_{r,i}(n) with exactly m parts; b_{r,0}(m, n) = 0."""
    require(r >= 2, f"r must be >= 2, got {r}")
    require(0 <= i <= r, f"i must satisfy 0 <= i <= r = {r}, got {i}")
    require(m >= 0, f"m must be >= 0, got {m}")
    if i == 0:
        return 0
    return sum(1 for lam in enumerate_B(r, i, n) if lam.length == m)


# Durfee dissection

def _largest_rectangle(rows: tuple) -> int:
    d = 0
    while d < len(rows) and rows[d] >= d + 2:
        d += 1
    return d


def _largest_square(rows: tuple) -> int:
    d = 0
    while d < len(rows) and rows[d] >= d + 1:
        d += 1
    return d


def durfee_profile(partition: Partition, r: int, i: int) -> Optional[DurfeeProfile]:
    """
    Greedy successive dissection: r - i horizontal Durfee rectangles, then
    i - 1 Durfee squares, each taken as large as possible below the previous one.

    Arguments:
        partition (Partition): the partition to dissect.
        r, i (int): the family D_{r,i}.

    Returns:
        DurfeeProfile when no row is left below the last shape, None otherwise.
    """
    check_ri(r, i)
    rows = partition.parts
    sides = []
    for _ in range(r - i):
        d = _largest_rectangle(rows)
        sides.append(d + 1)
        rows = rows[d:]
    for _ in range(i - 1):
        d = _largest_square(rows)
        sides.append(d)
        rows = rows[d:]
    if rows:
        return None
    return DurfeeProfile(tuple(sides), r - i, i - 1)


def is_in_D(partition: Partition, r: int, i: int) -> bool:
    return durfee_profile(partition, r, i) is not None


@lru_cache(maxsize=None)
def enumerate_D(r: int, i: int, n: int) -> tuple:
    check_ri(r, i)
    _check_n(n)
    return tuple(lam for lam in enumerate_partitions(n) if is_in_D(lam, r, i))


def count_D(r: int, i: int, n: int) -> int:
    return len(enumerate_D(r, i, n))


def count_d(r: int, i: int, m: int, n: int) -> int:
    require(m >= 0, f"m must be >= 0, got {m}")
    return sum(1 for lam in enumerate_D(r, i, n) if lam.length == m)


# G_{r,l}

def non_one_parts(partition: Partition) -> int:
    return partition.length - partition.ones


def count_G(r: int, ell: int, n: int) -> int:
    require(r >= 2, f"r must be >= 2, got {r}")
    require(ell >= 0, f"l must be >= 0, got {ell}")
    _check_n(n)
    return sum(1 for lam in enumerate_B(r, r, n) if non_one_parts(lam) <= ell)


# counting oracles for single-partition generating functions

@lru_cache(maxsize=None)
def count_max_length(k: int, n: int) -> int:
    """Partitions of n with at most k parts: p(n, k) = p(n, k-1) + p(n-k, k)."""
    require(k >= 0, f"k must be >= 0, got {k}")
    if n == 0:
        return 1
    if n < 0 or k == 0:
        return 0
    return count_max_length(k - 1, n) + count_max_length(k, n - k)


@lru_cache(maxsize=None)
def count_min_part(m: int, n: int) -> int:
    if n == 0:
        return 1
    if m > n:
        return 0
    return count_min_part(m, n - m) + count_min_part(m + 1, n)


def count_smallest_part(k: int, n: int) -> int:
    require(k >= 1, f"k must be >= 1, got {k}")
    if n < k:
        return 0
    return count_min_part(k, n - k)


@lru_cache(maxsize=None)
def count_exact_bounded(s: int, c: int, top: int) -> int:
    if c == 0:
        return 1 if s == 0 else 0
    if s <= 0 or top <= 0:
        return 0
    return count_exact_bounded(s, c, top - 1) + count_exact_bounded(s - top, c - 1, top)


def count_kth_smallest(k: int, i: int, n: int) -> int:
    """
    Partitions of n with at least k parts whose k-th smallest part equals i.

    Ascending, such a partition is k-1 parts <= i, then the part i, then any
    partition into parts >= i.
    """
    require(k >= 1 and i >= 1, f"k and i must be >= 1, got k={k}, i={i}")
    total = 0
    for s in range(0, n - i + 1):
        below = count_exact_bounded(s, k - 1, i)
        if below:
            total += below * count_min_part(i, n - i - s)
    return total


def count_box(a: int, b: int, n: int) -> int:
    """Partitions of n with at most b parts, each at most a - b."""
    require(0 <= b <= a, f"count_box needs 0 <= b <= a, got a={a}, b={b}")
    return sum(count_exact_bounded(n, c, a - b) for c in range(b + 1))
