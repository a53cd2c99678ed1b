"""Integer partitions, their enumeration, and the mex / r-gap statistics."""

from __future__ import annotations

import threading
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator


@dataclass(frozen=True, order=True)
class Partition:
    """A partition stored as a weakly decreasing tuple of positive parts.

    The constructor accepts parts in any order and normalizes them.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if parts and parts[-1] < 1:
            raise ValueError(f"partition parts must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def multiplicities(self) -> Counter:
        return Counter(self.parts)

    def is_distinct(self) -> bool:
        return all(a > b for a, b in zip(self.parts, self.parts[1:]))

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > c) for c in range(self.parts[0])))

    def __str__(self) -> str:
        return render_partition(self)


def render_partition(lam: Partition | Iterable[int]) -> str:
    parts = lam.parts if isinstance(lam, Partition) else tuple(lam)
    if not parts:
        return "0"
    return "+".join(str(p) for p in parts)


def parse_partition(text: str) -> Partition:
    """Parse ``"7+7+6+6+4+2"`` style text; ``"0"`` (or blank) is the empty partition."""
    text = text.strip()
    if text in ("", "0"):
        return Partition()
    parts = []
    for token in text.split("+"):
        token = token.strip()
        if not token.isdigit() or int(token) < 1:
            raise ValueError(f"malformed partition text: {text!r}")
        parts.append(int(token))
    return Partition(tuple(parts))


@dataclass(frozen=True)
class Staircase:
    """The staircase k + (k-1) + ... + 1."""

    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("staircase height must be nonnegative")

    @property
    def weight(self) -> int:
        return triangular(self.k)

    def partition(self) -> Partition:
        return Partition(tuple(range(self.k, 0, -1)))


@dataclass(frozen=True)
class GapStatistic:
    r: int
    value: int


def triangular(m: int) -> int:
    return m * (m + 1) // 2


# -- enumeration ------------------------------------------------------------

def iter_partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield partitions of ``n`` as tuples in reverse-lexicographic order."""
    if n < 0:
        return
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    # iterative descent to keep deep recursion out of large n
    stack: list[int] = []
    remaining = n
    top = max_part
    while True:
        while remaining > 0:
            part = min(top, remaining)
            stack.append(part)
            remaining -= part
            top = part
        yield tuple(stack)
        # backtrack: drop trailing 1s, then decrement the last part > 1
        while stack and stack[-1] == 1:
            stack.pop()
            remaining += 1
        if not stack:
            return
        last = stack.pop()
        remaining += last
        top = last - 1


def iter_distinct_partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield partitions of ``n`` into distinct parts, reverse-lexicographic."""
    if n < 0:
        return
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        # the rest must fit into 1 + 2 + ... + (first - 1)
        if triangular(first) < n:
            break
        for rest in iter_distinct_partitions(n - first, first - 1):
            yield (first,) + rest


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order (``[]`` for n < 0)."""
    return [Partition(p) for p in iter_partitions(n)]


_p_lock = threading.Lock()
_p_table: list[int] = [1]


def partition_count(n: int) -> int:
    """p(n) via Euler's pentagonal recurrence; 0 for negative n."""
    if n < 0:
        return 0
    if n < len(_p_table):
        return _p_table[n]
    with _p_lock:
        table = _p_table
        for m in range(len(table), n + 1):
            total = 0
            j = 1
            while True:
                g1 = j * (3 * j - 1) // 2
                if g1 > m:
                    break
                sign = 1 if j % 2 else -1
                total += sign * table[m - g1]
                g2 = j * (3 * j + 1) // 2
                if g2 <= m:
                    total += sign * table[m - g2]
                j += 1
            table.append(total)
        return table[n]


# -- statistics -------------------------------------------------------------

def _parts_of(lam) -> tuple[int, ...]:
    return lam.parts if isinstance(lam, Partition) else tuple(lam)


def mex(lam) -> int:
    """Least positive integer that is not a part."""
    present = set(_parts_of(lam))
    m = 1
    while m in present:
        m += 1
    return m


def r_gap(lam, r: int) -> int:
    """Least positive integer occurring fewer than ``r`` times as a part."""
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r}")
    mult = Counter(_parts_of(lam))
    m = 1
    while mult[m] >= r:
        m += 1
    return m


def gap_statistic(lam, r: int) -> GapStatistic:
    return GapStatistic(r, r_gap(lam, r))


@lru_cache(maxsize=None)
def sigma_mex_direct(n: int, r: int = 1) -> int:
    """Sum of the least r-gap over every partition of ``n``, by enumeration."""
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r}")
    if n < 0:
        return 0
    if r == 1:
        return sum(mex(p) for p in iter_partitions(n))
    return sum(r_gap(p, r) for p in iter_partitions(n))


def sigma_mex_convolution(n: int, r: int = 1) -> int:
    """sum_{j >= 0} p(n - r*j*(j+1)/2)."""
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r}")
    total = 0
    j = 0
    while n - r * triangular(j) >= 0:
        total += partition_count(n - r * triangular(j))
        j += 1
    return total


def sigma_mex(n: int) -> int:
    """sigma mex(n); the convolution route, 0 for negative n."""
    return sigma_mex_convolution(n, 1) if n >= 0 else 0


# -- indicator functions ----------------------------------------------------

def delta(n: int) -> int:
    """1 if ``n`` is triangular (0 included), else 0."""
    if n < 0:
        return 0
    m = 0
    while triangular(m) < n:
        m += 1
    return int(triangular(m) == n)


def delta_prime(n: int) -> int:
    """(-1)^m if n = m(3m-1) for some integer m, else 0."""
    if n < 0:
        return 0
    m = 0
    while m * (3 * m - 1) <= n:
        if m * (3 * m - 1) == n or m * (3 * m + 1) == n:
            # m(3m+1) is the value at -m, same parity as m
            return -1 if m % 2 else 1
        m += 1
    return 0


def is_generalized_pentagonal(n: int) -> bool:
    if n < 0:
        return False
    j = 0
    while j * (3 * j - 1) // 2 <= n:
        if j * (3 * j - 1) // 2 == n or j * (3 * j + 1) // 2 == n:
            return True
        j += 1
    return False


def is_twice_gen_pentagonal(n: int) -> bool:
    """True iff n = j(3j+1) or n = j(3j-1) for some j >= 0."""
    return n >= 0 and n % 2 == 0 and is_generalized_pentagonal(n // 2)
