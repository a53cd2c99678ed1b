"""Truncated power series in q with exact integer coefficients.

Infinite products are truncated factor by factor: a factor whose lowest
nonconstant exponent exceeds the order contributes nothing below it.
"""

from __future__ import annotations

import enum
import math
import time
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

INFINITE = None


class SeriesError(ArithmeticError):
    """An exact division left a remainder, or a reciprocal does not exist."""


class TruncatedSeries:
    """sum_{i <= order} c_i q^i, known exactly up to and including q^order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[int], order: Optional[int] = None):
        coeffs = [int(c) for c in coeffs]
        if order is None:
            order = max(len(coeffs) - 1, 0)
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = coeffs[: order + 1]
        coeffs.extend([0] * (order + 1 - len(coeffs)))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: int = 1) -> "TruncatedSeries":
        out = [0] * (order + 1)
        if 0 <= exponent <= order:
            out[exponent] = coeff
        return cls(out, order)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __len__(self) -> int:
        return self.order + 1

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs, min(order, self.order))

    def __add__(self, other):
        if isinstance(other, int):
            other = TruncatedSeries([other], self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], n)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        if isinstance(other, int):
            other = TruncatedSeries([other], self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries([other * c for c in self.coeffs], self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai:
                for j in range(n + 1 - i):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def reciprocal(self) -> "TruncatedSeries":
        """1/s by coefficient recursion; needs constant term +1 or -1."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise SeriesError(f"reciprocal needs a unit constant term, got {c0}")
        n = self.order
        out = [0] * (n + 1)
        out[0] = c0
        for m in range(1, n + 1):
            acc = sum(self.coeffs[i] * out[m - i] for i in range(1, m + 1))
            out[m] = -c0 * acc
        return TruncatedSeries(out, n)

    def __truediv__(self, other):
        if isinstance(other, int):
            if any(c % other for c in self.coeffs):
                raise SeriesError("inexact scalar division")
            return TruncatedSeries([c // other for c in self.coeffs], self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self * other.reciprocal()

    def first_mismatch(self, other: "TruncatedSeries") -> Optional[int]:
        n = min(self.order, other.order)
        for i in range(n + 1):
            if self.coeffs[i] != other.coeffs[i]:
                return i
        return None

    def to_json(self) -> dict:
        return {"order": self.order, "coefficients": list(self.coeffs)}

    def __repr__(self) -> str:
        return f"TruncatedSeries({render_series(self)})"

    def __str__(self) -> str:
        return render_series(self)


def series_add(s1: TruncatedSeries, s2: TruncatedSeries) -> TruncatedSeries:
    return s1 + s2


def series_mul(s1: TruncatedSeries, s2: TruncatedSeries) -> TruncatedSeries:
    return s1 * s2


def series_scale(s: TruncatedSeries, c: int) -> TruncatedSeries:
    return s * c


def render_series(s: TruncatedSeries) -> str:
    """Sparse text such as ``1 - q + 2q^5 + O(q^101)``."""
    terms = []
    for i, c in enumerate(s.coeffs):
        if not c:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = "q" if i == 1 else f"q^{i}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    terms.append(("+ " if terms else "") + f"O(q^{s.order + 1})")
    return " ".join(terms)


# -- products ---------------------------------------------------------------

@dataclass(frozen=True)
class PochhammerSpec:
    """(sign * q^base_exponent ; q^step)_length; ``length=None`` is infinite."""

    base_sign: int
    base_exponent: int
    step: int
    length: Optional[int] = INFINITE

    def __post_init__(self):
        if self.base_sign not in (1, -1):
            raise ValueError("base_sign must be +1 or -1")
        if self.base_exponent < 0 or self.step < 1:
            raise ValueError("need base_exponent >= 0 and step >= 1")
        if self.length is not None and self.length < 0:
            raise ValueError("length must be nonnegative or infinite")


def _times_binomial(coeffs: list[int], sign: int, e: int) -> None:
    """In place: coeffs *= (1 - sign*q^e), truncated."""
    if e == 0:
        f = 1 - sign
        for i in range(len(coeffs)):
            coeffs[i] *= f
        return
    for i in range(len(coeffs) - 1, e - 1, -1):
        coeffs[i] -= sign * coeffs[i - e]


def pochhammer(spec: PochhammerSpec, order: int) -> TruncatedSeries:
    """prod_{i < length} (1 - sign q^(base_exponent + step*i)) up to q^order."""
    coeffs = [1] + [0] * order
    i = 0
    while spec.length is None or i < spec.length:
        e = spec.base_exponent + spec.step * i
        if e > order:
            break
        _times_binomial(coeffs, spec.base_sign, e)
        i += 1
    return TruncatedSeries(coeffs, order)


def qpoch(a_sign: int, a_exp: int, step: int, length: Optional[int], order: int) -> TruncatedSeries:
    """Shorthand for ``pochhammer(PochhammerSpec(...), order)``."""
    return pochhammer(PochhammerSpec(a_sign, a_exp, step, length), order)


def _poly_divide_exact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    while den and den[-1] == 0:
        den = den[:-1]
    if not den or den[0] not in (1, -1):
        raise SeriesError("divisor needs a unit constant term")
    deg_q = len(num) - len(den)
    if deg_q < 0:
        if any(num):
            raise SeriesError("polynomial division leaves a remainder")
        return [0]
    quot = [0] * (deg_q + 1)
    for i in range(deg_q + 1):
        c = num[i] * den[0]  # den[0] is its own inverse
        quot[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num):
        raise SeriesError("polynomial division leaves a remainder")
    return quot


def _qfactorial_poly(n: int) -> list[int]:
    coeffs = [1] + [0] * triangular_sum(n)
    for i in range(1, n + 1):
        _times_binomial(coeffs, 1, i)
    return coeffs


def triangular_sum(n: int) -> int:
    return n * (n + 1) // 2


def gaussian_binomial_poly(n: int, k: int) -> list[int]:
    """Coefficients of [n choose k]_q as an exact polynomial ([] when out of range)."""
    if n < 0 or k < 0 or k > n:
        return []
    num = _qfactorial_poly(n)
    den_a = _qfactorial_poly(k)
    den_b = _qfactorial_poly(n - k)
    den = [0] * (len(den_a) + len(den_b) - 1)
    for i, a in enumerate(den_a):
        for j, b in enumerate(den_b):
            den[i + j] += a * b
    quot = _poly_divide_exact(num, den)
    return quot[: k * (n - k) + 1]


def gaussian_binomial(n: int, k: int, order: int) -> TruncatedSeries:
    return TruncatedSeries(gaussian_binomial_poly(n, k), order)


# -- theta-type sums --------------------------------------------------------

class ThetaKind(str, enum.Enum):
    triangular = "triangular"
    triangular_alternating = "triangular_alternating"
    pentagonal_half = "pentagonal_half"
    pentagonal_whole = "pentagonal_whole"


def theta_series(kind, order: int) -> TruncatedSeries:
    """triangular: sum q^(n(n+1)/2); triangular_alternating: sum (-q)^(n(n+1)/2);
    pentagonal_half: sum_{n in Z} (-1)^n q^(n(3n-1)/2);
    pentagonal_whole: sum_{n in Z} (-1)^n q^(n(3n-1))."""
    kind = ThetaKind(kind)
    coeffs = [0] * (order + 1)
    if kind in (ThetaKind.triangular, ThetaKind.triangular_alternating):
        n = 0
        while triangular_sum(n) <= order:
            e = triangular_sum(n)
            sign = -1 if (kind is ThetaKind.triangular_alternating and e % 2) else 1
            coeffs[e] += sign
            n += 1
    else:
        scale = 1 if kind is ThetaKind.pentagonal_half else 2
        for e, sign in pentagonal_terms(-(order + 1), order + 1, order, scale):
            coeffs[e] += sign
    return TruncatedSeries(coeffs, order)


def pentagonal_terms(lo: int, hi: int, order: int, scale: int = 1):
    """(exponent, sign) of (-1)^j q^(scale*j(3j-1)/2) for lo <= j <= hi, exponent <= order."""
    for j in range(lo, hi + 1):
        e = scale * j * (3 * j - 1) // 2
        if e <= order:
            yield e, (-1 if j % 2 else 1)


def truncated_pentagonal(k: int, order: int) -> TruncatedSeries:
    """sum_{j=-(k-1)}^{k} (-1)^j q^(j(3j-1)/2)."""
    coeffs = [0] * (order + 1)
    for e, sign in pentagonal_terms(-(k - 1), k, order):
        coeffs[e] += sign
    return TruncatedSeries(coeffs, order)


# -- generating functions ---------------------------------------------------

class GF(str, enum.Enum):
    p = "p"
    D1 = "D1"
    D2 = "D2"
    D2star = "D2star"
    sigma_mex = "sigma_mex"
    sigma_mex_r = "sigma_mex_r"
    Dtilde2r = "Dtilde2r"
    Mk = "Mk"
    Mbark = "Mbark"
    MPk = "MPk"
    pod = "pod"
    overpartitions = "overpartitions"


def _gf_Mk(k: int, order: int) -> TruncatedSeries:
    """sum_{n >= k} q^(C(k,2) + (k+1)n) / (q;q)_n * [n-1 choose k-1]."""
    total = TruncatedSeries.zero(order)
    n = k
    while math.comb(k, 2) + (k + 1) * n <= order:
        e = math.comb(k, 2) + (k + 1) * n
        term = TruncatedSeries.monomial(e, order) * gaussian_binomial(n - 1, k - 1, order)
        total = total + term / qpoch(1, 1, 1, n, order)
        n += 1
    return total


def _gf_Mbark(k: int, order: int) -> TruncatedSeries:
    """2 (-q;q)_k/(q;q)_k sum_j q^((k+1)(k+j+1)) (-q^(k+j+2);q)_inf
    / ((1 - q^(k+j+1)) (q^(k+j+2);q)_inf)."""
    total = TruncatedSeries.zero(order)
    j = 0
    while (k + 1) * (k + j + 1) <= order:
        u = k + j + 1
        num = TruncatedSeries.monomial((k + 1) * u, order) * qpoch(-1, u + 1, 1, INFINITE, order)
        den = qpoch(1, u, 1, 1, order) * qpoch(1, u + 1, 1, INFINITE, order)
        total = total + num / den
        j += 1
    return 2 * qpoch(-1, 1, 1, k, order) / qpoch(1, 1, 1, k, order) * total


def _gf_MPk(k: int, order: int) -> TruncatedSeries:
    """(-q;q^2)_k/(q^2;q^2)_(k-1) sum_j q^(k(2j+2k+1)) (-q^(2j+2k+3);q^2)_inf
    / (q^(2k+2j+2);q^2)_inf."""
    total = TruncatedSeries.zero(order)
    j = 0
    while k * (2 * j + 2 * k + 1) <= order:
        num = (TruncatedSeries.monomial(k * (2 * j + 2 * k + 1), order)
               * qpoch(-1, 2 * j + 2 * k + 3, 2, INFINITE, order))
        total = total + num / qpoch(1, 2 * k + 2 * j + 2, 2, INFINITE, order)
        j += 1
    return qpoch(-1, 1, 2, k, order) / qpoch(1, 2, 2, k - 1, order) * total


def _gf_sigma_mex_r(r: int, order: int) -> TruncatedSeries:
    """(q^(2r);q^(2r))_inf / ((q;q)_inf (q^r;q^(2r))_inf)."""
    den = qpoch(1, 1, 1, INFINITE, order) * qpoch(1, r, 2 * r, INFINITE, order)
    return qpoch(1, 2 * r, 2 * r, INFINITE, order) / den


def gf(family, order: int, k: Optional[int] = None, r: Optional[int] = None) -> TruncatedSeries:
    """Generating function of a counting function as a product/sum formula."""
    family = GF(family)
    if family in (GF.Mk, GF.Mbark, GF.MPk) and (k is None or k < 1):
        raise ValueError(f"{family.value} needs a positive k")
    if family in (GF.sigma_mex_r, GF.Dtilde2r) and (r is None or r < 1):
        raise ValueError(f"{family.value} needs a positive r")
    if family is GF.p:
        return qpoch(1, 1, 1, INFINITE, order).reciprocal()
    if family is GF.D1:
        return qpoch(-1, 1, 1, INFINITE, order)
    if family is GF.D2:
        d1 = qpoch(-1, 1, 1, INFINITE, order)
        return d1 * d1
    if family is GF.D2star:
        return theta_series(ThetaKind.triangular, order) * qpoch(-1, 2, 2, INFINITE, order)
    if family is GF.sigma_mex:
        return _gf_sigma_mex_r(1, order)
    if family in (GF.sigma_mex_r, GF.Dtilde2r):
        return _gf_sigma_mex_r(r, order)
    if family is GF.Mk:
        return _gf_Mk(k, order)
    if family is GF.Mbark:
        return _gf_Mbark(k, order)
    if family is GF.MPk:
        return _gf_MPk(k, order)
    if family is GF.pod:
        return qpoch(-1, 1, 2, INFINITE, order) / qpoch(1, 2, 2, INFINITE, order)
    if family is GF.overpartitions:
        return qpoch(-1, 1, 1, INFINITE, order) / qpoch(1, 1, 1, INFINITE, order)
    raise ValueError(f"unknown family {family}")


# -- identities -------------------------------------------------------------

@dataclass
class VerificationReport:
    """Outcome of one check.  ``status`` is pass, fail or evidence-only."""

    check_id: str
    range: dict
    status: str
    first_counterexample: Optional[dict] = None
    elapsed: float = 0.0
    rows: list = field(default_factory=list)

    def __post_init__(self):
        if self.status not in ("pass", "fail", "evidence-only"):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == "fail" and self.first_counterexample is None:
            raise ValueError("a failing report needs a counterexample")

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def to_dict(self, include_elapsed: bool = True) -> dict:
        out = {
            "schema": 1,
            "check_id": self.check_id,
            "range": self.range,
            "status": self.status,
            "first_counterexample": self.first_counterexample,
            "rows": self.rows,
        }
        if include_elapsed:
            out["elapsed"] = round(self.elapsed, 6)
        return out


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _truncated_pentagonal_identity(k: int, order: int):
    lhs = _sign(k - 1) * truncated_pentagonal(k, order) / qpoch(1, 1, 1, INFINITE, order)
    return lhs, _sign(k - 1) + gf(GF.Mk, order, k=k)


def _overpartition_identity(k: int, order: int):
    bracket = TruncatedSeries.one(order)
    for j in range(1, k + 1):
        bracket = bracket + TruncatedSeries.monomial(j * j, order, 2 * _sign(j))
    lhs = gf(GF.overpartitions, order) * bracket
    return lhs, 1 + _sign(k) * gf(GF.Mbark, order, k=k)


def _pod_identity(k: int, order: int):
    partial = TruncatedSeries.zero(order)
    for j in range(2 * k):
        e = triangular_sum(j)
        partial = partial + TruncatedSeries.monomial(e, order, -1 if e % 2 else 1)
    lhs = gf(GF.pod, order) * partial
    return lhs, 1 + _sign(k - 1) * gf(GF.MPk, order, k=k)


def _theta_quotient_identity(order: int):
    lhs = qpoch(1, 2, 2, INFINITE, order) / qpoch(-1, 1, 2, INFINITE, order)
    return lhs, theta_series(ThetaKind.triangular_alternating, order)


def _pentagonal(order: int):
    return qpoch(1, 1, 1, INFINITE, order), theta_series(ThetaKind.pentagonal_half, order)


def _pentagonal_whole(order: int):
    return qpoch(1, 2, 2, INFINITE, order), theta_series(ThetaKind.pentagonal_whole, order)


def _triangular_product(order: int):
    lhs = qpoch(1, 2, 2, INFINITE, order) / qpoch(1, 1, 2, INFINITE, order)
    return lhs, theta_series(ThetaKind.triangular, order)


def _smex_truncated_pentagonal(k: int, order: int):
    # sigma_mex gf times the truncated pentagonal sum, against theta * M_k gf
    smex = gf(GF.sigma_mex, order)
    tri = theta_series(ThetaKind.triangular, order)
    lhs = _sign(k - 1) * (smex * truncated_pentagonal(k, order) - tri)
    return lhs, tri * gf(GF.Mk, order, k=k)


def _smex_alternating_squares(k: int, order: int):
    smex = gf(GF.sigma_mex, order)
    bracket = TruncatedSeries.one(order)
    for j in range(1, k + 1):
        bracket = bracket + TruncatedSeries.monomial(j * j, order, 2 * _sign(j))
    whole = theta_series(ThetaKind.pentagonal_whole, order)
    lhs = _sign(k) * (smex * bracket - whole)
    return lhs, whole * gf(GF.Mbark, order, k=k)


def _smex_triangular_theta(order: int):
    lhs = gf(GF.sigma_mex, order) * theta_series(ThetaKind.triangular_alternating, order)
    d1_in_q2 = qpoch(-1, 2, 2, INFINITE, order)
    return lhs, d1_in_q2 * theta_series(ThetaKind.triangular, order)


def _smex_truncated_triangular(k: int, order: int):
    smex = gf(GF.sigma_mex, order)
    partial = TruncatedSeries.zero(order)
    for j in range(2 * k):
        e = triangular_sum(j)
        partial = partial + TruncatedSeries.monomial(e, order, -1 if e % 2 else 1)
    d2s = gf(GF.D2star, order)
    lhs = _sign(k - 1) * (smex * partial - d2s)
    return lhs, gf(GF.MPk, order, k=k) * d2s


IDENTITIES: dict[str, Callable] = {
    "TPNT": _truncated_pentagonal_identity,
    "eq1.11": _overpartition_identity,
    "eq1.13": _pod_identity,
    "Eq5": lambda k, order: _theta_quotient_identity(order),
    "pentagonal": lambda k, order: _pentagonal(order),
    "pentagonal_whole": lambda k, order: _pentagonal_whole(order),
    "triangular_product": lambda k, order: _triangular_product(order),
    "smex_truncated_pentagonal": _smex_truncated_pentagonal,
    "smex_alternating_squares": _smex_alternating_squares,
    "smex_triangular_theta": lambda k, order: _smex_triangular_theta(order),
    "smex_truncated_triangular": _smex_truncated_triangular,
}

# identities without a k parameter ignore it
PARAMETERLESS = {"Eq5", "pentagonal", "pentagonal_whole", "triangular_product", "smex_triangular_theta"}


def compare_series(check_id: str, lhs: TruncatedSeries, rhs: TruncatedSeries,
                   params: dict, started: float) -> VerificationReport:
    order = min(lhs.order, rhs.order)
    bad = lhs.first_mismatch(rhs)
    row = {"check_id": check_id, "n": order if bad is None else bad,
           "k": params.get("k"), "r": params.get("r"),
           "lhs": lhs[order if bad is None else bad], "rhs": rhs[order if bad is None else bad],
           "status": "pass" if bad is None else "fail"}
    counter = None
    if bad is not None:
        counter = {"n": bad, "k": params.get("k"), "r": params.get("r"),
                   "lhs": lhs[bad], "rhs": rhs[bad]}
    return VerificationReport(check_id, {"order": order, **params},
                              "pass" if bad is None else "fail", counter,
                              time.perf_counter() - started, [row])


def verify_identity(identity: str, order: int = 100, k: Optional[int] = None) -> VerificationReport:
    """Expand both sides of a named identity to ``order`` and compare."""
    started = time.perf_counter()
    if identity not in IDENTITIES:
        raise ValueError(f"unknown identity {identity!r}")
    if identity not in PARAMETERLESS and (k is None or k < 1):
        raise ValueError(f"{identity} needs a positive k")
    lhs, rhs = IDENTITIES[identity](k, order)
    params = {} if identity in PARAMETERLESS else {"k": k}
    return compare_series(identity, lhs, rhs, params, started)


def verify_gf_against_counts(family, counter: Callable[[int], int], order: int,
                             k: Optional[int] = None, r: Optional[int] = None) -> VerificationReport:
    """Coefficients of ``gf(family)`` against an independent counting function."""
    started = time.perf_counter()
    lhs = gf(family, order, k=k, r=r)
    rhs = TruncatedSeries([counter(n) for n in range(order + 1)], order)
    params = {key: v for key, v in (("k", k), ("r", r)) if v is not None}
    return compare_series(f"gf_vs_enum:{GF(family).value}", lhs, rhs, params, started)
