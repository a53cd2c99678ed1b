"""Invertible maps between partition families.

``phi`` sends a partition plus a staircase height to a 2-colored distinct
partition by cutting a diagram along its staircase profile; ``xi`` lifts it to
the r-gap setting with Glaisher's map; ``d3k_map`` peels the first k columns
off an M_k partition before running ``phi``.  Every map takes an optional
``trace`` list that collects a line-oriented description of each step.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Union

from mexkit.families import ColoredPartition, is_D3k, is_Dtilde2_r, is_Mk, staircase_height
from mexkit.partition_core import Partition, iter_partitions, render_partition, triangular


class PreconditionError(ValueError):
    """The input lies outside the domain of the map."""


@dataclass(frozen=True)
class StaircaseSplit:
    alpha: Partition
    beta: Partition
    k: int


@dataclass(frozen=True)
class BijectionResult:
    image: Union[ColoredPartition, Partition]
    params: dict = field(default_factory=dict)
    trace: tuple[str, ...] = ()


def _log(trace: Optional[list], line: str) -> None:
    if trace is not None:
        trace.append(line)


def _diagonal_length(rows: list[int]) -> int:
    # the profile steps right over cell (i, i) while that cell exists
    d = 0
    while d < len(rows) and rows[d] >= d + 1:
        d += 1
    return d


def _draw(rows: list[int], d: int) -> list[str]:
    lines = []
    for i, length in enumerate(rows):
        if i < d:
            lines.append("#" * (i + 1) + "|" + "#" * (length - i - 1))
        else:
            lines.append("#" * length)
    return lines


def staircase_split(lam: Partition, k: int, trace: Optional[list] = None) -> StaircaseSplit:
    """Stack rows 1, 2, ..., k on top of the diagram of ``lam`` and cut it along
    the staircase profile: alpha are the column lengths left of the profile,
    beta the row lengths right of it."""
    if k < 0:
        raise PreconditionError("staircase height must be nonnegative")
    rows = list(range(1, k + 1)) + list(lam.parts)
    d = _diagonal_length(rows)
    alpha = [sum(1 for i in range(c, len(rows)) if rows[i] > c) for c in range(d)]
    beta = [rows[i] - i - 1 for i in range(d) if rows[i] > i + 1]
    _log(trace, f"rows: {','.join(map(str, rows)) or '-'}")
    _log(trace, f"profile: {d} right steps")
    for line in _draw(rows, d):
        _log(trace, f"  {line}")
    split = StaircaseSplit(Partition(tuple(alpha)), Partition(tuple(beta)), k)
    _log(trace, f"alpha: {render_partition(split.alpha)}")
    _log(trace, f"beta: {render_partition(split.beta)}")
    return split


def phi(lam: Partition, k: int, trace: Optional[list] = None) -> ColoredPartition:
    """Color alpha with k mod 2 and beta with k+1 mod 2."""
    split = staircase_split(lam, k, trace)
    a_color, b_color = k % 2, (k + 1) % 2
    mu = ColoredPartition(tuple((v, a_color) for v in split.alpha)
                          + tuple((v, b_color) for v in split.beta))
    _log(trace, f"colors: alpha->{a_color} beta->{b_color}")
    _log(trace, f"image: {mu}")
    return mu


def phi_inverse(mu: ColoredPartition, trace: Optional[list] = None) -> tuple[Partition, int]:
    if any(c == 2 for _, c in mu.parts):
        raise PreconditionError("phi_inverse takes colors 0 and 1 only")
    if not mu.is_distinct():
        raise PreconditionError("a part is repeated within one color")
    l0, l1 = mu.length(0), mu.length(1)
    k = staircase_height(l0, l1)
    a_color = 0 if l0 >= l1 else 1
    alpha = mu.color_class(a_color).parts
    beta = mu.color_class(1 - a_color).parts
    _log(trace, f"lengths: l0={l0} l1={l1} -> k={k}")
    _log(trace, f"alpha (color {a_color}): {render_partition(alpha)}")
    _log(trace, f"beta (color {1 - a_color}): {render_partition(beta)}")
    # conjugate of the shifted diagram of alpha: column c spans rows c .. c+alpha_c-1
    height = alpha[0] if alpha else 0
    d = len(alpha)
    rows = []
    for i in range(height):
        left = sum(1 for c in range(min(i + 1, d)) if c + alpha[c] > i)
        right = beta[i - k] if 0 <= i - k < len(beta) else 0
        rows.append(left + right)
    _log(trace, f"rows: {','.join(map(str, rows)) or '-'}")
    if rows[:k] != list(range(1, k + 1)):
        raise PreconditionError("top rows do not form the rotated staircase")
    lam_rows = rows[k:]
    if any(a < b for a, b in zip(lam_rows, lam_rows[1:])) or 0 in lam_rows:
        raise PreconditionError("remaining rows do not form a partition")
    lam = Partition(tuple(lam_rows))
    _log(trace, f"preimage: {lam} with k={k}")
    return lam, k


def color_swap(mu: ColoredPartition) -> ColoredPartition:
    """Exchange colors 0 and 1."""
    return ColoredPartition(tuple((v, {0: 1, 1: 0}.get(c, c)) for v, c in mu.parts))


def franklin(lam: Partition, trace: Optional[list] = None) -> Partition:
    """Franklin's involution on partitions into distinct parts.  The pentagonal
    exceptions (k+...+(2k-1) and (k+1)+...+2k, plus the empty partition) are
    returned unchanged."""
    parts = list(lam.parts)
    if not lam.is_distinct():
        raise PreconditionError("franklin needs distinct parts")
    if not parts:
        return lam
    s = parts[-1]
    run = 1
    while run < len(parts) and parts[run] == parts[run - 1] - 1:
        run += 1
    whole = run == len(parts)
    _log(trace, f"smallest={s} run={run}")
    if s <= run:
        if whole and s == run:
            _log(trace, "exceptional: fixed point")
            return lam
        parts.pop()
        for i in range(s):
            parts[i] += 1
        _log(trace, "moved smallest part onto the run")
    else:
        if whole and s == run + 1:
            _log(trace, "exceptional: fixed point")
            return lam
        for i in range(run):
            parts[i] -= 1
        parts.append(run)
        _log(trace, "moved the run into a new smallest part")
    out = Partition(tuple(parts))
    _log(trace, f"image: {out}")
    return out


def glaisher(lam: Partition, r: int, trace: Optional[list] = None) -> Partition:
    """Merge r equal parts into one part r times as large until every
    multiplicity is below r."""
    if r < 2:
        raise PreconditionError("glaisher needs r >= 2")
    if any(p % r == 0 for p in lam.parts):
        raise PreconditionError(f"a part is divisible by r={r}")
    parts = []
    for v, m in Counter(lam.parts).items():
        scale = v
        while m:
            m, digit = divmod(m, r)
            parts.extend([scale] * digit)
            scale *= r
    out = Partition(tuple(parts))
    _log(trace, f"glaisher r={r}: {lam} -> {out}")
    return out


def glaisher_inverse(mu: Partition, r: int, trace: Optional[list] = None) -> Partition:
    if r < 2:
        raise PreconditionError("glaisher needs r >= 2")
    if any(m >= r for m in Counter(mu.parts).values()):
        raise PreconditionError(f"a part has multiplicity >= r={r}")
    parts = []
    for p in mu.parts:
        copies = 1
        while p % r == 0:
            p //= r
            copies *= r
        parts.extend([p] * copies)
    out = Partition(tuple(parts))
    _log(trace, f"glaisher_inverse r={r}: {mu} -> {out}")
    return out


def xi(lam: Partition, r: int, j: int, trace: Optional[list] = None) -> ColoredPartition:
    """Parts divisible by r go through phi (scaled down by r, staircase j);
    color-0 parts are scaled back up, color-1 parts are repeated r times; the
    remaining parts go through Glaisher's map and are colored 1."""
    if r < 1:
        raise PreconditionError("r must be positive")
    if j < 0:
        raise PreconditionError("j must be nonnegative")
    divisible = Partition(tuple(p // r for p in lam.parts if p % r == 0))
    rest = Partition(tuple(p for p in lam.parts if p % r))
    _log(trace, f"divisible/r: {divisible}")
    _log(trace, f"not divisible: {rest}")
    inner = phi(divisible, j, trace)
    parts = []
    for v, c in inner.parts:
        if c == 0:
            parts.append((v * r, 0))
        else:
            parts.extend([(v, 1)] * r)
    if rest.parts:
        parts.extend((v, 1) for v in glaisher(rest, r, trace).parts)
    mu = ColoredPartition(tuple(parts))
    _log(trace, f"image: {mu}")
    return mu


def xi_inverse(mu: ColoredPartition, r: int, trace: Optional[list] = None) -> tuple[Partition, int]:
    if r < 1:
        raise PreconditionError("r must be positive")
    if not is_Dtilde2_r(mu, r):
        raise PreconditionError(
            f"not in Dtilde2^({r}): color 0 must be distinct multiples of r, "
            f"color 1 multiplicities at most {2 * r - 1}")
    mu0 = mu.color_class(0)
    repeated, leftover = [], []
    for v, m in Counter(mu.color_class(1).parts).items():
        # multiplicity in [r, 2r-1]: r copies form one repeated part
        if m >= r:
            repeated.append(v)
            m -= r
        leftover.extend([v] * m)
    _log(trace, f"repeated (x{r}): {render_partition(sorted(repeated, reverse=True))}")
    _log(trace, f"leftover: {render_partition(sorted(leftover, reverse=True))}")
    inner = ColoredPartition.from_classes([v // r for v in mu0.parts], repeated)
    core, j = phi_inverse(inner, trace)
    parts = [p * r for p in core.parts]
    if leftover:
        parts.extend(glaisher_inverse(Partition(tuple(leftover)), r, trace).parts)
    lam = Partition(tuple(parts))
    _log(trace, f"preimage: {lam} with j={j}")
    return lam, j


def d3k_map(lam: Partition, j: int, k: int, trace: Optional[list] = None) -> ColoredPartition:
    """Remove the first k columns (their lengths become color-2 parts), then
    send the remaining diagram with staircase j through phi."""
    if k < 1:
        raise PreconditionError("k must be positive")
    if not is_Mk(lam.parts, k):
        raise PreconditionError(
            f"not counted by M_{k}: need mex = {k} and more parts > {k} than < {k}")
    columns = [sum(1 for p in lam.parts if p >= i) for i in range(1, k + 1)]
    residue = Partition(tuple(p - k for p in lam.parts if p > k))
    _log(trace, f"columns (color 2): {render_partition(columns)}")
    _log(trace, f"residue: {residue}")
    inner = phi(residue, j, trace)
    mu = ColoredPartition(inner.parts + tuple((c, 2) for c in columns))
    _log(trace, f"image: {mu}")
    return mu


def d3k_inverse(mu: ColoredPartition, k: int, trace: Optional[list] = None) -> tuple[Partition, int]:
    if not is_D3k(mu, k):
        raise PreconditionError(f"not counted by D3^({k})")
    columns = mu.color_class(2).parts
    inner = ColoredPartition(tuple((v, c) for v, c in mu.parts if c != 2))
    residue, j = phi_inverse(inner, trace)
    if len(residue) != columns[-1]:
        raise PreconditionError("residue length differs from the shortest removed column")
    parts = [p + k for p in residue.parts]
    for i in range(1, k):
        parts.extend([i] * (columns[i - 1] - columns[i]))
    lam = Partition(tuple(parts))
    _log(trace, f"preimage: {lam} with j={j}")
    return lam, j


def preimage_domain(n: int, step: int = 1):
    """Pairs (lam, j) with lam a partition of n - step*j(j+1)/2."""
    j = 0
    while n - step * triangular(j) >= 0:
        for lam in iter_partitions(n - step * triangular(j)):
            yield Partition(lam), j
        j += 1
