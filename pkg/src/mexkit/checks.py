"""Finite sweeps that verify each identity, inequality and bijection.

Each check evaluates one row per grid point (n, k, r) with two independently
computed sides.  Rows are sorted by (n, k, r) whatever order they were
computed in, so reports are reproducible for a fixed configuration.
"""

from __future__ import annotations

import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from mexkit import bijections as bj
from mexkit import families as fam
from mexkit import qseries as qs
from mexkit.partition_core import (
    Partition,
    delta,
    delta_prime,
    is_generalized_pentagonal,
    is_twice_gen_pentagonal,
    iter_distinct_partitions,
    iter_partitions,
    partition_count,
    sigma_mex,
    sigma_mex_convolution,
    sigma_mex_direct,
    triangular,
)
from mexkit.qseries import VerificationReport

DEFAULT_MAX_ORDER = 2000


def max_order_cap() -> int:
    raw = os.environ.get("MEXKIT_MAX_ORDER")
    return int(raw) if raw else DEFAULT_MAX_ORDER


@dataclass(frozen=True)
class RunConfig:
    max_n: Optional[int] = None
    max_k: Optional[int] = None
    max_r: Optional[int] = None
    series_order: int = 100
    output_format: str = "json"
    parallelism: int = 1

    def __post_init__(self):
        for name in ("max_n", "max_k", "max_r"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise ValueError(f"{name} must be nonnegative")
        if self.series_order < 1:
            raise ValueError("series order must be positive")
        if self.series_order > max_order_cap():
            raise ValueError(f"series order {self.series_order} exceeds the cap {max_order_cap()}")
        if self.output_format not in ("json", "csv"):
            raise ValueError("output format is json or csv")
        if self.parallelism < 1:
            raise ValueError("parallelism must be positive")


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def _triangular_sum(n: int, f: Callable[[int], int], signed: bool = False) -> int:
    """sum_{j >= 0} f(n - j(j+1)/2), optionally weighted by (-1)^(j(j+1)/2)."""
    total, j = 0, 0
    while triangular(j) <= n:
        t = triangular(j)
        total += (_sign(t) if signed else 1) * f(n - t)
        j += 1
    return total


# -- row functions; module level so a process pool can pickle them -----------

def pentagonal_signed_sum(n: int, k: int) -> int:
    inner = sum(_sign(j) * sigma_mex(n - j * (3 * j - 1) // 2) for j in range(-(k - 1), k + 1))
    return _sign(k - 1) * (inner - delta(n))


def square_signed_sum(n: int, k: int) -> int:
    inner = sigma_mex(n) + 2 * sum(_sign(j) * sigma_mex(n - j * j) for j in range(1, k + 1))
    return _sign(k) * (inner - delta_prime(n))


def mbar_signed_sum(n: int, k: int) -> int:
    """sum over integers j of (-1)^j Mbar_k(n - j(3j-1))."""
    total, j = 0, 0
    while True:
        terms = [j] if j == 0 else [j, -j]
        exps = [(t, t * (3 * t - 1)) for t in terms if t * (3 * t - 1) <= n]
        if not exps:
            break
        total += sum(_sign(t) * fam.count_Mbar_k(n - e, k) for t, e in exps)
        j += 1
    return total


def triangular_signed_sum(n: int, k: int) -> int:
    inner = sum(_sign(triangular(j)) * sigma_mex(n - triangular(j)) for j in range(2 * k))
    return _sign(k - 1) * (inner - fam.count_D2_star(n))


def _d1_half(m: int) -> int:
    return fam.count_D1(Fraction(m, 2))


def _d3k_image_count(n: int, k: int) -> int:
    images = set()
    j = 0
    while triangular(j) <= n:
        for lam in fam.enumerate_Mk(n - triangular(j), k):
            mu = bj.d3k_map(lam, j, k)
            if fam.is_D3k(mu, k) and bj.d3k_inverse(mu, k) == (lam, j):
                images.add(mu)
        j += 1
    return len(images)


def row_theorem1(n, k, r):
    return sigma_mex_direct(n, 1), fam.count_D2(n), None


def row_lemma1(n, k, r):
    return sigma_mex_convolution(n, 1) % 2, int(is_twice_gen_pentagonal(n)), None


def row_theorem2(n, k, r):
    return pentagonal_signed_sum(n, k), _triangular_sum(n, lambda m: fam.count_Mk(m, k)), None


def row_corollary2(n, k, r):
    lhs = pentagonal_signed_sum(n, k)
    strict = n >= k * (3 * k + 1) // 2
    return lhs, 0, lhs > 0 if strict else lhs >= 0


def row_prop_p1(n, k, r):
    lhs = fam.count_D3k(n, k)
    rhs = _triangular_sum(n, lambda m: fam.count_Mk(m, k))
    images = _d3k_image_count(n, k)
    return lhs, rhs, lhs == rhs == images


def row_theorem3(n, k, r):
    return square_signed_sum(n, k), mbar_signed_sum(n, k), None


def row_conjecture4(n, k, r):
    lhs = mbar_signed_sum(n, k)
    strict = n >= (k + 1) ** 2
    return lhs, 0, lhs > 0 if strict else lhs >= 0


def row_theorem5(n, k, r):
    lhs = _triangular_sum(n, sigma_mex, signed=True)
    return lhs, _triangular_sum(n, _d1_half), None


def row_watson_prop(n, k, r):
    return _triangular_sum(n, _d1_half), fam.count_D2_star(n), None


def row_theorem6(n, k, r):
    rhs = sum(fam.count_MPk(j, k) * fam.count_D2_star(n - j) for j in range(n + 1))
    return triangular_signed_sum(n, k), rhs, None


def row_corollary6(n, k, r):
    lhs = triangular_signed_sum(n, k)
    strict = n >= k * (2 * k + 1)
    return lhs, 0, lhs > 0 if strict else lhs >= 0


def row_conv_pod(n, k, r):
    rhs = sum(fam.count_pod(j) * fam.count_D2_star(n - j) for j in range(n + 1))
    return sigma_mex(n), rhs, None


def row_theoremTL(n, k, r):
    return sigma_mex_direct(n, r), fam.count_Dtilde2_r(n, r), None


def _roundtrip_phi(n: int) -> tuple[int, int, bool]:
    images, ok = set(), True
    for lam, k in bj.preimage_domain(n):
        mu = bj.phi(lam, k)
        ok &= mu.weight == n and bj.phi_inverse(mu) == (lam, k)
        images.add(mu)
    target = set(fam.enumerate_D2(n))
    return len(images), len(target), ok and images == target


def _roundtrip_xi(n: int, r: int) -> tuple[int, int, bool]:
    images, ok = set(), True
    for lam, j in bj.preimage_domain(n, r):
        mu = bj.xi(lam, r, j)
        ok &= bj.xi_inverse(mu, r) == (lam, j)
        images.add(mu)
    target = set(fam.enumerate_Dtilde2_r(n, r))
    return len(images), len(target), ok and images == target


def _roundtrip_glaisher(n: int, r: int) -> tuple[int, int, bool]:
    source = [Partition(p) for p in iter_partitions(n) if all(v % r for v in p)]
    target = {Partition(p) for p in iter_partitions(n) if max(Counter(p).values(), default=0) < r}
    images = {bj.glaisher(lam, r) for lam in source}
    ok = all(bj.glaisher_inverse(bj.glaisher(lam, r), r) == lam for lam in source)
    return len(images), len(target), ok and images == target and len(images) == len(source)


def _franklin_sweep(n: int) -> tuple[int, int, bool]:
    fixed, ok = 0, True
    for mu in iter_distinct_partitions(n):
        lam = Partition(mu)
        image = bj.franklin(lam)
        ok &= bj.franklin(image) == lam
        if image == lam:
            fixed += 1
        else:
            ok &= (len(image) - len(lam)) % 2 == 1
    return fixed, int(is_generalized_pentagonal(n)), ok and fixed == int(is_generalized_pentagonal(n))


def _color_swap_sweep(n: int) -> tuple[int, int, bool]:
    # parity of D2(n) from the swap pairing equals parity from the fixed points
    fixed, ok = 0, True
    for mu in fam.enumerate_D2(n):
        swapped = bj.color_swap(mu)
        ok &= bj.color_swap(swapped) == mu
        fixed += swapped == mu
    expected = fam.count_D1(Fraction(n, 2))
    return fixed, expected, ok and fixed == expected


BIJECTION_SWEEPS = {
    "phi": lambda n, r: _roundtrip_phi(n),
    "xi": _roundtrip_xi,
    "glaisher": _roundtrip_glaisher,
    "franklin": lambda n, r: _franklin_sweep(n),
    "color_swap": lambda n, r: _color_swap_sweep(n),
}


def row_bijection(n, k, r, name):
    return BIJECTION_SWEEPS[name](n, r)


# -- check registry -----------------------------------------------------------

@dataclass(frozen=True)
class Check:
    row: Callable
    default_n: int
    default_k: Optional[int] = None
    default_r: Optional[int] = None
    min_n: int = 0
    conjecture: bool = False


CHECKS: dict[str, Check] = {
    "theorem1": Check(row_theorem1, 40),
    "lemma1": Check(row_lemma1, 200),
    "theorem2": Check(row_theorem2, 60, default_k=5),
    "corollary2": Check(row_corollary2, 60, default_k=5),
    "prop_p1": Check(row_prop_p1, 30, default_k=3),
    "theorem3": Check(row_theorem3, 45, default_k=4),
    "conjecture4": Check(row_conjecture4, 120, default_k=5, min_n=1, conjecture=True),
    "theorem5": Check(row_theorem5, 40),
    "watson_prop": Check(row_watson_prop, 40),
    "theorem6": Check(row_theorem6, 40, default_k=3),
    "corollary6": Check(row_corollary6, 40, default_k=3),
    "conv_pod": Check(row_conv_pod, 40),
    "theoremTL": Check(row_theoremTL, 30, default_r=3),
}

# series identities run by identities_all, with the k range each is checked over
IDENTITY_K = {"TPNT": 5, "eq1.11": 4, "eq1.13": 3, "smex_truncated_pentagonal": 5,
              "smex_alternating_squares": 4, "smex_truncated_triangular": 3}

ALL_CHECK_IDS = sorted(CHECKS) + ["identities_all", "bijections_all"]


def _grid(check: Check, config: RunConfig) -> list[tuple]:
    max_n = check.default_n if config.max_n is None else config.max_n
    ks = [None]
    if check.default_k is not None:
        ks = list(range(1, (config.max_k or check.default_k) + 1))
    rs = [None]
    if check.default_r is not None:
        rs = list(range(1, (config.max_r or check.default_r) + 1))
    return [(n, k, r) for n in range(check.min_n, max_n + 1) for k in ks for r in rs]


def _evaluate(args):
    row_fn, n, k, r, extra = args
    if extra is None:
        return row_fn(n, k, r)
    return row_fn(n, k, r, extra)


def _run_grid(row_fn, grid, jobs: int, extra=None) -> list:
    tasks = [(row_fn, n, k, r, extra) for n, k, r in grid]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_evaluate, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    return [_evaluate(t) for t in tasks]


def _report(check_id: str, grid, results, rng: dict, conjecture: bool, started: float) -> VerificationReport:
    rows, counter = [], None
    ordered = sorted(zip(grid, results), key=lambda item: tuple(-1 if v is None else v for v in item[0]))
    for (n, k, r), (lhs, rhs, verdict) in ordered:
        ok = (lhs == rhs) if verdict is None else bool(verdict)
        rows.append({"check_id": check_id, "n": n, "k": k, "r": r,
                     "lhs": lhs, "rhs": rhs, "status": "pass" if ok else "fail"})
        if not ok and counter is None:
            counter = {"n": n, "k": k, "r": r, "lhs": lhs, "rhs": rhs}
    if counter is not None:
        status = "fail"
    else:
        status = "evidence-only" if conjecture else "pass"
    return VerificationReport(check_id, rng, status, counter, time.perf_counter() - started, rows)


def run_check(check_id: str, config: RunConfig = RunConfig()) -> VerificationReport:
    if check_id == "identities_all":
        return run_identities(config)
    if check_id == "bijections_all":
        return run_bijections(config)
    if check_id not in CHECKS:
        raise KeyError(check_id)
    started = time.perf_counter()
    check = CHECKS[check_id]
    grid = _grid(check, config)
    results = _run_grid(check.row, grid, config.parallelism)
    rng = {"n_min": check.min_n,
           "n_max": check.default_n if config.max_n is None else config.max_n}
    if check.default_k is not None:
        rng["k_max"] = config.max_k or check.default_k
    if check.default_r is not None:
        rng["r_max"] = config.max_r or check.default_r
    return _report(check_id, grid, results, rng, check.conjecture, started)


def _gf_count_pairs(max_k: int):
    """(family, k, r, exact counting function) compared against each gf."""
    pairs = [
        ("p", None, None, partition_count),
        ("D1", None, None, fam.count_D1),
        ("D2", None, None, fam.count_D2),
        ("D2star", None, None, fam.count_D2_star),
        ("pod", None, None, fam.count_pod),
        ("overpartitions", None, None, fam.count_overpartitions),
        ("sigma_mex", None, None, sigma_mex),
    ]
    for r in (1, 2, 3):
        pairs.append(("sigma_mex_r", None, r, lambda n, r=r: sigma_mex_convolution(n, r)))
        pairs.append(("Dtilde2r", None, r, lambda n, r=r: fam.count_Dtilde2_r(n, r)))
    for k in range(1, min(max_k, 5) + 1):
        pairs.append(("Mk", k, None, lambda n, k=k: fam.count_Mk(n, k)))
    for k in range(1, min(max_k, 4) + 1):
        pairs.append(("Mbark", k, None, lambda n, k=k: fam.count_Mbar_k(n, k)))
    for k in range(1, min(max_k, 3) + 1):
        pairs.append(("MPk", k, None, lambda n, k=k: fam.count_MPk(n, k)))
    return pairs


def run_identities(config: RunConfig = RunConfig()) -> VerificationReport:
    started = time.perf_counter()
    order = config.series_order
    max_k = config.max_k or 5
    reports = []
    for name in sorted(qs.IDENTITIES):
        if name in qs.PARAMETERLESS:
            reports.append(qs.verify_identity(name, order))
        else:
            for k in range(1, min(max_k, IDENTITY_K.get(name, 5)) + 1):
                reports.append(qs.verify_identity(name, order, k))
    for family, k, r, counter in _gf_count_pairs(max_k):
        reports.append(qs.verify_gf_against_counts(family, counter, order, k=k, r=r))
    rows = [row for rep in reports for row in rep.rows]
    failed = next((rep for rep in reports if rep.status == "fail"), None)
    counter = None
    if failed is not None:
        counter = dict(failed.first_counterexample, identity=failed.check_id)
    return VerificationReport("identities_all", {"order": order, "k_max": max_k},
                              "fail" if failed else "pass", counter,
                              time.perf_counter() - started, rows)


BIJECTION_DEFAULT_N = {"phi": 22, "xi": 18, "glaisher": 20, "franklin": 25, "color_swap": 21}


def run_bijections(config: RunConfig = RunConfig()) -> VerificationReport:
    started = time.perf_counter()
    rows, counter = [], None
    for name in sorted(BIJECTION_SWEEPS):
        max_n = BIJECTION_DEFAULT_N[name] if config.max_n is None else config.max_n
        rs = [None]
        if name in ("xi", "glaisher"):
            rs = list(range(2, max(config.max_r or 3, 2) + 1))
        grid = [(n, None, r) for n in range(max_n + 1) for r in rs]
        results = _run_grid(row_bijection, grid, config.parallelism, extra=name)
        sub = _report(f"bijection:{name}", grid, results, {}, False, started)
        rows.extend(sub.rows)
        if sub.first_counterexample and counter is None:
            counter = dict(sub.first_counterexample, bijection=name)
    rng = {"n_max": config.max_n, "r_max": config.max_r or 3}
    return VerificationReport("bijections_all", rng, "fail" if counter else "pass", counter,
                              time.perf_counter() - started, rows)
