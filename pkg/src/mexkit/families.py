"""Restricted partition families: colored distinct partitions, overpartitions,
M_k, Mbar_k, MP_k, pod, D2*, D3^(k) and Dtilde2^(r).

Every family has a literal membership predicate (``is_*``) and, where the
objects are small enough to list, an enumerator.  ``count_*`` functions are
exact combinatorial counts; the slower ones are organized by grouping
components (color classes, multiplicity choices) rather than by filtering
whole objects, and the test-suite checks them against the literal filters.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Optional

from mexkit.partition_core import (
    Partition,
    iter_distinct_partitions,
    iter_partitions,
    mex,
    partition_count,
    sigma_mex_convolution,
    triangular,
)


# -- colored partitions -----------------------------------------------------

@dataclass(frozen=True)
class ColoredPartition:
    """Parts tagged with a color, kept sorted by value then color, both descending.

    Distinctness within a color is a property of particular families
    (see :meth:`is_distinct`), not of the type: Dtilde2^(r) repeats color-1 parts.
    """

    parts: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        parts = tuple(sorted(((int(v), int(c)) for v, c in self.parts), reverse=True))
        for v, c in parts:
            if v < 1:
                raise ValueError(f"colored part values must be positive, got {v}")
            if c not in (0, 1, 2):
                raise ValueError(f"colors are 0, 1 or 2, got {c}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_classes(cls, *classes: Iterable[int]) -> "ColoredPartition":
        """Build from one iterable of values per color, color 0 first."""
        return cls(tuple((v, c) for c, values in enumerate(classes) for v in values))

    @property
    def weight(self) -> int:
        return sum(v for v, _ in self.parts)

    def color_class(self, color: int) -> Partition:
        return Partition(tuple(v for v, c in self.parts if c == color))

    def length(self, color: int) -> int:
        return sum(1 for _, c in self.parts if c == color)

    def is_distinct(self) -> bool:
        return len(set(self.parts)) == len(self.parts)

    def __str__(self) -> str:
        return render_colored(self)


def render_colored(mu: ColoredPartition) -> str:
    if not mu.parts:
        return "0"
    return "+".join(f"{v}_{c}" for v, c in mu.parts)


def parse_colored(text: str) -> ColoredPartition:
    """Parse ``"9_1+8_1+3_0"``; ``"0"`` is the empty colored partition."""
    text = text.strip()
    if text in ("", "0"):
        return ColoredPartition()
    parts = []
    for token in text.split("+"):
        value, sep, color = token.strip().partition("_")
        if not sep or not value.isdigit() or color not in ("0", "1", "2") or int(value) < 1:
            raise ValueError(f"malformed colored partition text: {text!r}")
        parts.append((int(value), int(color)))
    return ColoredPartition(tuple(parts))


# -- overpartitions ---------------------------------------------------------

@dataclass(frozen=True)
class Overpartition:
    """Weakly decreasing parts; the first copy of a value may be overlined."""

    parts: tuple[tuple[int, bool], ...] = ()

    def __post_init__(self):
        # overlined copy sorts ahead of the plain copies of its value
        parts = tuple(sorted(((int(v), bool(o)) for v, o in self.parts),
                             key=lambda vo: (-vo[0], not vo[1])))
        seen = set()
        for i, (v, o) in enumerate(parts):
            if v < 1:
                raise ValueError(f"overpartition parts must be positive, got {v}")
            if o and v in seen:
                raise ValueError(f"value {v} overlined more than once")
            seen.add(v)
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self) -> int:
        return sum(v for v, _ in self.parts)

    @property
    def underlying(self) -> Partition:
        return Partition(tuple(v for v, _ in self.parts))

    def __str__(self) -> str:
        return render_overpartition(self)


def render_overpartition(op: Overpartition) -> str:
    if not op.parts:
        return "0"
    return "+".join(f"{v}o" if o else str(v) for v, o in op.parts)


def parse_overpartition(text: str) -> Overpartition:
    """Parse ``"3o+3+1"`` (``o`` suffix marks the overlined copy)."""
    text = text.strip()
    if text in ("", "0"):
        return Overpartition()
    parts = []
    for token in text.split("+"):
        token = token.strip()
        over = token.endswith("o")
        digits = token[:-1] if over else token
        if not digits.isdigit() or int(digits) < 1:
            raise ValueError(f"malformed overpartition text: {text!r}")
        parts.append((int(digits), over))
    return Overpartition(tuple(parts))


def iter_overpartitions(n: int) -> Iterator[Overpartition]:
    """Underlying partitions in reverse-lex order; for each, overline subsets in
    binary-counting order with the largest value on the lowest bit."""
    for lam in iter_partitions(n):
        values = sorted(set(lam), reverse=True)
        for mask in range(1 << len(values)):
            marked = {v for i, v in enumerate(values) if mask >> i & 1}
            parts = []
            for v in lam:
                if v in marked:
                    parts.append((v, True))
                    marked.discard(v)
                else:
                    parts.append((v, False))
            yield Overpartition(tuple(parts))


def enumerate_overpartitions(n: int) -> list[Overpartition]:
    return list(iter_overpartitions(n))


# -- shared helpers ---------------------------------------------------------

def _bucket(n: int) -> int:
    """Table size covering n; tables are shared across nearby n."""
    size = 32
    while size < n:
        size *= 2
    return size


def _as_index(x) -> Optional[int]:
    """Integer value of a count argument, or None when it counts as zero."""
    if isinstance(x, Fraction):
        if x.denominator != 1:
            return None
        x = x.numerator
    elif isinstance(x, float):
        if not x.is_integer():
            return None
        x = int(x)
    if x < 0:
        return None
    return int(x)


@lru_cache(maxsize=None)
def _distinct(m: int) -> tuple[tuple[int, ...], ...]:
    return tuple(iter_distinct_partitions(m))


def _multiplicity_table(N: int, values: Iterable[int], ways: Callable[[int, int], int]) -> list[int]:
    """counts[w] = number of ways to pick multiplicities m_v (v in ``values``)
    with sum m_v * v = w, each choice weighted by ``ways(v, m_v)``."""
    counts = [1] + [0] * N
    for v in values:
        if v > N:
            continue
        counts = _apply_value(counts, v, ways)
    return counts


def _apply_value(counts: list[int], v: int, ways: Callable[[int, int], int]) -> list[int]:
    N = len(counts) - 1
    out = [0] * (N + 1)
    for m in range(N // v + 1):
        w = ways(v, m)
        if not w:
            continue
        shift = m * v
        for t in range(N + 1 - shift):
            if counts[t]:
                out[t + shift] += w * counts[t]
    return out


def _overpart_ways(v: int, m: int) -> int:
    return 1 if m == 0 else 2


def _pod_ways(v: int, m: int) -> int:
    return 1 if (v % 2 == 0 or m <= 1) else 0


# -- ordinary-partition families ---------------------------------------------

def _distinct_ways(v: int, m: int) -> int:
    return 1 if m <= 1 else 0


def _any_ways(v: int, m: int) -> int:
    return 1


@lru_cache(maxsize=None)
def _table(kind: str, N: int, param: int = 0) -> tuple[int, ...]:
    """Counting tables built from per-value multiplicity choices."""
    if kind == "distinct":
        return tuple(_multiplicity_table(N, range(1, N + 1), _distinct_ways))
    if kind == "distinct_even":
        return tuple(_multiplicity_table(N, range(2, N + 1, 2), _distinct_ways))
    if kind == "distinct_multiple":
        return tuple(_multiplicity_table(N, range(param, N + 1, param), _distinct_ways))
    if kind == "mult_at_most":
        return tuple(_multiplicity_table(N, range(1, N + 1),
                                         lambda v, m: 1 if m <= param else 0))
    if kind == "pod":
        return tuple(_multiplicity_table(N, range(1, N + 1), _pod_ways))
    if kind == "overpartition":
        return tuple(_multiplicity_table(N, range(1, N + 1), _overpart_ways))
    raise ValueError(kind)


def count_D1(n) -> int:
    """Partitions of n into distinct parts; non-integer or negative n gives 0, D1(0) = 1."""
    m = _as_index(n)
    if m is None:
        return 0
    return _table("distinct", _bucket(m))[m]


def count_overpartitions(n: int) -> int:
    if n < 0:
        return 0
    return _table("overpartition", _bucket(n))[n]


def enumerate_D2(n: int) -> Iterator[ColoredPartition]:
    """Partitions of n into distinct parts using two colors."""
    for a in range(n + 1):
        for mu0 in _distinct(a):
            for mu1 in _distinct(n - a):
                yield ColoredPartition.from_classes(mu0, mu1)


def count_D2(n: int) -> int:
    """Pairs (mu0, mu1) of distinct-part partitions with total weight n."""
    if n < 0:
        return 0
    return sum(count_D1(a) * count_D1(n - a) for a in range(n + 1))


def is_pod(lam) -> bool:
    mult = Counter(lam)
    return all(m <= 1 for v, m in mult.items() if v % 2)


def enumerate_pod(n: int) -> list[Partition]:
    return [Partition(lam) for lam in iter_partitions(n) if is_pod(lam)]


def count_pod(n: int) -> int:
    """Partitions of n in which no odd part is repeated."""
    if n < 0:
        return 0
    return _table("pod", _bucket(n))[n]


def is_Mk(lam, k: int) -> bool:
    """mex is k and more parts exceed k than fall below it."""
    parts = tuple(lam)
    if mex(parts) != k:
        return False
    above = sum(1 for p in parts if p > k)
    below = sum(1 for p in parts if p < k)
    return above > below


def enumerate_Mk(n: int, k: int) -> list[Partition]:
    return [Partition(lam) for lam in iter_partitions(n) if is_Mk(lam, k)]


@lru_cache(maxsize=None)
def _length_table(N: int, lo: int, hi: int) -> tuple[tuple[int, ...], ...]:
    """t[w][l] = partitions of w into exactly l parts from [lo, hi]."""
    t = [[0] * (N + 1) for _ in range(N + 1)]
    t[0][0] = 1
    for v in range(max(lo, 1), min(hi, N) + 1):
        for w in range(v, N + 1):
            # one more part of size v: shift the length index by one
            t[w] = [x + y for x, y in zip(t[w], [0] + t[w - v][:-1])]
    return tuple(tuple(row) for row in t)


@lru_cache(maxsize=None)
def count_Mk(n: int, k: int) -> int:
    """M_k(n); counted by splitting lambda into parts below k (each of 1..k-1
    present) and parts above k, grouped by weight and number of parts."""
    if k < 1:
        raise ValueError("k must be positive")
    if n <= 0:
        return 0
    base = triangular(k - 1)
    if base > n:
        return 0
    N = _bucket(n)
    small = _length_table(N, 1, k - 1)
    big = _length_table(N, k + 1, N)
    total = 0
    for a in range(base, n + 1):
        for ls in range(k - 1, a + 1):
            # parts 1..k-1 once each, then any extra parts from 1..k-1
            s = small[a - base][ls - (k - 1)]
            if not s:
                continue
            b = n - a
            total += s * sum(big[b][lb] for lb in range(ls + 1, b + 1))
    return total


def is_MPk(lam, k: int) -> bool:
    """The first (smallest) part larger than 2k-1 is odd and appears exactly
    k times; every other odd part appears at most once."""
    parts = tuple(lam)
    above = [p for p in parts if p > 2 * k - 1]
    if not above:
        return False
    u = min(above)
    mult = Counter(parts)
    if u % 2 == 0 or mult[u] != k:
        return False
    return all(m <= 1 for v, m in mult.items() if v % 2 and v != u)


def enumerate_MPk(n: int, k: int) -> list[Partition]:
    return [Partition(lam) for lam in iter_partitions(n) if is_MPk(lam, k)]


@lru_cache(maxsize=None)
def mpk_table(N: int, k: int) -> tuple[int, ...]:
    """MP_k(n) for 0 <= n <= N, summing over the smallest part u > 2k-1."""
    low = _multiplicity_table(N, range(1, 2 * k), _pod_ways)
    out = [0] * (N + 1)
    high = [1] + [0] * N
    # high holds pod-type choices over parts > u; extend downward from N
    for u in range(N, 2 * k - 1, -1):
        if u % 2 and k * u <= N:
            budget = N - k * u
            for t in range(budget + 1):
                conv = sum(low[a] * high[t - a] for a in range(t + 1))
                out[t + k * u] += conv
        high = _apply_value(high, u, _pod_ways)
    return tuple(out)


def count_MPk(n: int, k: int) -> int:
    if k < 1:
        raise ValueError("k must be positive")
    if n < 0:
        return 0
    return mpk_table(_bucket(n), k)[n]


def is_Mbar_k(op: Overpartition, k: int) -> bool:
    """The smallest part value larger than k occurs at least k+1 times
    (overlined and plain copies together)."""
    values = [v for v, _ in op.parts]
    above = [v for v in values if v > k]
    if not above:
        return False
    return values.count(min(above)) >= k + 1


def enumerate_Mbar_k(n: int, k: int) -> list[Overpartition]:
    return [op for op in iter_overpartitions(n) if is_Mbar_k(op, k)]


@lru_cache(maxsize=None)
def mbar_k_table(N: int, k: int) -> tuple[int, ...]:
    """Mbar_k(n) for 0 <= n <= N, summing over the smallest part u > k and its
    multiplicity m >= k+1 (two overline states)."""
    low = _multiplicity_table(N, range(1, k + 1), _overpart_ways)
    out = [0] * (N + 1)
    high = [1] + [0] * N
    for u in range(N, k, -1):
        if (k + 1) * u <= N:
            rest = [sum(low[a] * high[t - a] for a in range(t + 1))
                    for t in range(N - (k + 1) * u + 1)]
            for m in range(k + 1, N // u + 1):
                for t in range(N - m * u + 1):
                    out[t + m * u] += 2 * rest[t]
        high = _apply_value(high, u, _overpart_ways)
    return tuple(out)


def count_Mbar_k(n: int, k: int) -> int:
    if k < 1:
        raise ValueError("k must be positive")
    if n < 0:
        return 0
    return mbar_k_table(_bucket(n), k)[n]


# -- two-colored families ---------------------------------------------------

def _is_staircase(mu: tuple[int, ...]) -> bool:
    return tuple(mu) == tuple(range(len(mu), 0, -1))


def _all_even(mu: tuple[int, ...]) -> bool:
    return all(p % 2 == 0 for p in mu)


def is_D2_star(mu: ColoredPartition) -> bool:
    """Distinct within colors; color-0 parts are 1..j; color-1 parts are even."""
    if not mu.is_distinct() or any(c == 2 for _, c in mu.parts):
        return False
    return _is_staircase(mu.color_class(0).parts) and _all_even(mu.color_class(1).parts)


def enumerate_D2_star(n: int) -> Iterator[ColoredPartition]:
    for a in range(n + 1):
        for mu0 in _distinct(a):
            if not _is_staircase(mu0):
                continue
            for mu1 in _distinct(n - a):
                if _all_even(mu1):
                    yield ColoredPartition.from_classes(mu0, mu1)


def count_D2_star(n: int) -> int:
    m = _as_index(n)
    if m is None:
        return 0
    # the color-0 class is a staircase: exactly one choice per triangular weight
    evens = _table("distinct_even", _bucket(m))
    total, j = 0, 0
    while triangular(j) <= m:
        total += evens[m - triangular(j)]
        j += 1
    return total


@lru_cache(maxsize=None)
def _divisible_by(r: int) -> Callable[[tuple[int, ...]], bool]:
    def pred(mu):
        return all(p % r == 0 for p in mu)
    return pred


@lru_cache(maxsize=None)
def _mult_at_most(cap: int) -> Callable[[tuple[int, ...]], bool]:
    def pred(lam):
        return all(m <= cap for m in Counter(lam).values())
    return pred


def is_Dtilde2_r(mu: ColoredPartition, r: int) -> bool:
    """Color-0 parts distinct multiples of r; color-1 parts repeated at most 2r-1 times."""
    if any(c == 2 for _, c in mu.parts):
        return False
    mu0, mu1 = mu.color_class(0), mu.color_class(1)
    return (mu0.is_distinct() and _divisible_by(r)(mu0.parts)
            and _mult_at_most(2 * r - 1)(mu1.parts))


def enumerate_Dtilde2_r(n: int, r: int) -> Iterator[ColoredPartition]:
    div, cap = _divisible_by(r), _mult_at_most(2 * r - 1)
    for a in range(0, n + 1, r):
        for mu0 in _distinct(a):
            if not div(mu0):
                continue
            for mu1 in iter_partitions(n - a):
                if cap(mu1):
                    yield ColoredPartition.from_classes(mu0, mu1)


def count_Dtilde2_r(n: int, r: int) -> int:
    if r < 1:
        raise ValueError("r must be positive")
    if n < 0:
        return 0
    N = _bucket(n)
    multiples = _table("distinct_multiple", N, r)
    capped = _table("mult_at_most", N, 2 * r - 1)
    return sum(multiples[a] * capped[n - a] for a in range(0, n + 1, r))


# -- three-colored family D3^(k) -------------------------------------------

def staircase_height(len0: int, len1: int) -> int:
    """The height j read off from r = len0 - len1:
    j = |r| - 1/2 + sign(r) (-1)^r / 2, with sign(0) = +1."""
    r = len0 - len1
    if r >= 0:
        return r if r % 2 == 0 else r - 1
    r = -r
    return r - 1 if r % 2 == 0 else r


def _color2_ok(c: tuple[int, ...], k: int) -> bool:
    return len(c) == k and (k == 1 or 2 * c[-1] > c[0])


def is_D3k(mu: ColoredPartition, k: int) -> bool:
    """Distinct within each of three colors, plus:
    (i) exactly k color-2 parts, and twice the smallest exceeds the largest when k > 1;
    (ii) with j the height read from len0 - len1, the largest part of color
    j mod 2 equals j plus the smallest color-2 part."""
    if not mu.is_distinct():
        return False
    c = mu.color_class(2).parts
    if not _color2_ok(c, k):
        return False
    l0, l1 = mu.length(0), mu.length(1)
    j = staircase_height(l0, l1)
    designated = mu.color_class(j % 2).parts
    # an empty designated class has no largest part, so (ii) cannot hold
    return bool(designated) and designated[0] == j + c[-1]


@lru_cache(maxsize=None)
def _color2_sets(w: int, k: int) -> tuple[tuple[int, ...], ...]:
    return tuple(c for c in _distinct(w) if _color2_ok(c, k))


def enumerate_D3k(n: int, k: int) -> Iterator[ColoredPartition]:
    for w in range(n + 1):
        for c in _color2_sets(w, k):
            for a in range(n - w + 1):
                for mu0 in _distinct(a):
                    for mu1 in _distinct(n - w - a):
                        mu = ColoredPartition.from_classes(mu0, mu1, c)
                        if is_D3k(mu, k):
                            yield mu


@lru_cache(maxsize=None)
def _shape_groups(m: int) -> tuple[tuple[int, int, int], ...]:
    """(length, largest part or 0, how many) over distinct partitions of m."""
    groups = Counter((len(mu), mu[0] if mu else 0) for mu in _distinct(m))
    return tuple((l, top, cnt) for (l, top), cnt in sorted(groups.items()))


@lru_cache(maxsize=None)
def _color2_by_min(w: int, k: int) -> dict:
    return Counter(c[-1] for c in _color2_sets(w, k))


@lru_cache(maxsize=None)
def count_D3k(n: int, k: int) -> int:
    """D3^(k)(n).  Condition (ii) only sees (length, largest part) of the two
    uncolored-2 classes and the smallest color-2 part, so tally those shapes."""
    if k < 1:
        raise ValueError("k must be positive")
    if n < 0:
        return 0
    total = 0
    for a in range(n + 1):
        for b in range(n - a + 1):
            by_min = _color2_by_min(n - a - b, k)
            if not by_min:
                continue
            for l0, top0, c0 in _shape_groups(a):
                for l1, top1, c1 in _shape_groups(b):
                    j = staircase_height(l0, l1)
                    top = top0 if j % 2 == 0 else top1
                    if top:
                        total += c0 * c1 * by_min.get(top - j, 0)
    return total


# -- uniform dispatch -------------------------------------------------------

class Family(str, enum.Enum):
    p = "p"
    D1 = "D1"
    D2 = "D2"
    D2star = "D2star"
    D3k = "D3k"
    Mk = "Mk"
    Mbark = "Mbark"
    MPk = "MPk"
    pod = "pod"
    Dtilde2r = "Dtilde2r"
    sigma_mex = "sigma_mex"
    sigma_mex_r = "sigma_mex_r"


NEEDS_K = {Family.D3k, Family.Mk, Family.Mbark, Family.MPk}
NEEDS_R = {Family.Dtilde2r, Family.sigma_mex_r}


@dataclass(frozen=True)
class FamilyCount:
    family: Family
    n: int
    count: int
    k: Optional[int] = None
    r: Optional[int] = None


def count(family, n: int, k: Optional[int] = None, r: Optional[int] = None) -> FamilyCount:
    """Evaluate a named counting function.  Raises ValueError on a missing or
    invalid parameter and on unknown family names."""
    family = Family(family)
    if family in NEEDS_K and (k is None or k < 1):
        raise ValueError(f"{family.value} needs a positive k")
    if family in NEEDS_R and (r is None or r < 1):
        raise ValueError(f"{family.value} needs a positive r")
    if n < 0:
        raise ValueError("n must be nonnegative")
    fn = {
        Family.p: lambda: partition_count(n),
        Family.D1: lambda: count_D1(n),
        Family.D2: lambda: count_D2(n),
        Family.D2star: lambda: count_D2_star(n),
        Family.D3k: lambda: count_D3k(n, k),
        Family.Mk: lambda: count_Mk(n, k),
        Family.Mbark: lambda: count_Mbar_k(n, k),
        Family.MPk: lambda: count_MPk(n, k),
        Family.pod: lambda: count_pod(n),
        Family.Dtilde2r: lambda: count_Dtilde2_r(n, r),
        Family.sigma_mex: lambda: sigma_mex_convolution(n, 1),
        Family.sigma_mex_r: lambda: sigma_mex_convolution(n, r),
    }[family]
    return FamilyCount(family, n, fn(),
                       k if family in NEEDS_K else None,
                       r if family in NEEDS_R else None)
