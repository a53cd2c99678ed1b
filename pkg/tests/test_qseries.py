import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mexkit import families as fam
from mexkit import qseries as qs
from mexkit.partition_core import partition_count, sigma_mex_direct
from mexkit.qseries import (
    GF,
    INFINITE,
    PochhammerSpec,
    SeriesError,
    ThetaKind,
    TruncatedSeries,
    VerificationReport,
    gaussian_binomial,
    gaussian_binomial_poly,
    gf,
    pochhammer,
    qpoch,
    theta_series,
    verify_gf_against_counts,
    verify_identity,
)

ORDER = 12
series = st.lists(st.integers(-20, 20), min_size=ORDER + 1, max_size=ORDER + 1).map(
    lambda cs: TruncatedSeries(cs, ORDER))
unit_series = series.map(lambda s: TruncatedSeries((1,) + s.coeffs[1:], ORDER))


def S(*coeffs, order=None):
    return TruncatedSeries(coeffs, order)


# -- arithmetic -----------------------------------------------------------------------

def test_product_example():
    assert (S(1, 1, order=5) * S(1, -1, order=5)).coeffs == (1, 0, -1, 0, 0, 0)
    assert qs.series_mul(S(1, 1, order=2), S(1, -1, order=2)) == S(1, 0, -1)
    assert qs.series_add(S(1, 2), S(3, 4)) == S(4, 6)
    assert qs.series_scale(S(1, 2), 3) == S(3, 6)


def test_mixed_orders_truncate_to_minimum():
    assert (S(1, 1, 1, order=5) * S(1, 1, order=2)).order == 2


@given(series, series, series)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == TruncatedSeries.zero(ORDER)


@given(unit_series, series)
def test_reciprocal_and_division(u, b):
    assert u * u.reciprocal() == TruncatedSeries.one(ORDER)
    assert (b / u) * u == b


def test_reciprocal_needs_unit():
    with pytest.raises(SeriesError):
        S(2, 1).reciprocal()
    with pytest.raises(SeriesError):
        S(3, 1) / 2


def test_render():
    assert str(S(1, -1, 0, 0, 0, 2, order=100)) == "1 - q + 2q^5 + O(q^101)"
    assert str(TruncatedSeries.zero(3)) == "O(q^4)"
    assert S(0, 1, order=2).to_json() == {"order": 2, "coefficients": [0, 1, 0]}


# -- products --------------------------------------------------------------------------

def test_pochhammer_basics():
    assert qpoch(1, 1, 1, 0, 10) == TruncatedSeries.one(10)
    assert qpoch(1, 1, 1, 2, 6).coeffs == (1, -1, -1, 1, 0, 0, 0)
    with pytest.raises(ValueError):
        PochhammerSpec(2, 1, 1)


def test_euler_function_is_pentagonal():
    euler = pochhammer(PochhammerSpec(1, 1, 1, INFINITE), 30)
    assert euler == theta_series(ThetaKind.pentagonal_half, 30)


def test_partition_gf():
    coeffs = gf(GF.p, 60).coeffs
    assert list(coeffs) == [partition_count(n) for n in range(61)]


# -- Gaussian binomials --------------------------------------------------------------

def test_gaussian_binomial_examples():
    assert gaussian_binomial_poly(2, 1) == [1, 1]
    assert gaussian_binomial_poly(4, 2) == [1, 1, 2, 1, 1]
    assert gaussian_binomial(5, -1, 10) == TruncatedSeries.zero(10)
    assert gaussian_binomial(0, 0, 3) == TruncatedSeries.one(3)


@pytest.mark.parametrize("n", range(0, 9))
def test_gaussian_binomial_properties(n):
    for k in range(n + 1):
        poly = gaussian_binomial_poly(n, k)
        assert sum(poly) == math.comb(n, k)
        assert poly == poly[::-1]
        if 0 < k < n:
            # q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]
            a = gaussian_binomial(n - 1, k - 1, 40)
            b = TruncatedSeries.monomial(k, 40) * gaussian_binomial(n - 1, k, 40)
            assert gaussian_binomial(n, k, 40) == a + b


def test_exact_division_detects_remainder():
    with pytest.raises(SeriesError):
        qs._poly_divide_exact([1, 0, 1], [1, 1])


# -- theta series ---------------------------------------------------------------------

def test_theta_examples():
    tri = theta_series("triangular", 10)
    assert [i for i, c in enumerate(tri.coeffs) if c] == [0, 1, 3, 6, 10]
    alt = theta_series("triangular_alternating", 10)
    assert [(i, c) for i, c in enumerate(alt.coeffs) if c] == [(0, 1), (1, -1), (3, -1), (6, 1), (10, 1)]
    assert theta_series("pentagonal_whole", 12) == qpoch(1, 2, 2, INFINITE, 12)


# -- generating functions --------------------------------------------------------------

def test_gf_point_values():
    assert gf(GF.sigma_mex, 10)[3] == 6
    assert gf(GF.Mbark, 20, k=2)[12] == 16
    assert gf(GF.MPk, 25, k=2)[19] == 10


def test_gf_needs_parameters():
    with pytest.raises(ValueError):
        gf(GF.Mk, 10)
    with pytest.raises(ValueError):
        gf(GF.sigma_mex_r, 10)


def test_gf_sigma_mex_coefficients():
    assert list(gf(GF.sigma_mex, 35).coeffs) == [sigma_mex_direct(n) for n in range(36)]
    for r in (2, 3):
        assert list(gf(GF.sigma_mex_r, 30, r=r).coeffs) == [sigma_mex_direct(n, r) for n in range(31)]


@pytest.mark.parametrize("family, k, counter, order", [
    ("Mk", 1, lambda n: fam.count_Mk(n, 1), 35),
    ("Mk", 2, lambda n: fam.count_Mk(n, 2), 35),
    ("Mk", 3, lambda n: fam.count_Mk(n, 3), 35),
    ("Mk", 4, lambda n: fam.count_Mk(n, 4), 35),
    ("Mbark", 1, lambda n: fam.count_Mbar_k(n, 1), 30),
    ("Mbark", 2, lambda n: fam.count_Mbar_k(n, 2), 30),
    ("Mbark", 3, lambda n: fam.count_Mbar_k(n, 3), 30),
    ("MPk", 1, lambda n: fam.count_MPk(n, 1), 30),
    ("MPk", 2, lambda n: fam.count_MPk(n, 2), 30),
    ("MPk", 3, lambda n: fam.count_MPk(n, 3), 30),
    ("pod", None, fam.count_pod, 40),
    ("D2", None, fam.count_D2, 30),
    ("D2star", None, fam.count_D2_star, 30),
    ("overpartitions", None, fam.count_overpartitions, 30),
])
def test_gf_against_counts(family, k, counter, order):
    report = verify_gf_against_counts(family, counter, order, k=k)
    assert report.status == "pass", report.first_counterexample


def test_gf_mk_small_family_by_enumeration():
    # literal enumeration, independent of the structural counter
    coeffs = gf(GF.Mk, 20, k=2).coeffs
    assert list(coeffs) == [len(fam.enumerate_Mk(n, 2)) for n in range(21)]


# -- identities --------------------------------------------------------------------------

@pytest.mark.parametrize("name", sorted(qs.PARAMETERLESS))
def test_parameterless_identities(name):
    assert verify_identity(name, 100).status == "pass"


@pytest.mark.parametrize("name, max_k", [("TPNT", 5), ("eq1.11", 4), ("eq1.13", 3),
                                         ("smex_truncated_pentagonal", 5), ("smex_alternating_squares", 4),
                                         ("smex_truncated_triangular", 3)])
def test_k_identities(name, max_k):
    for k in range(1, max_k + 1):
        report = verify_identity(name, 60, k)
        assert report.status == "pass", (k, report.first_counterexample)


def test_identity_detects_mismatch():
    report = qs.compare_series("x", S(1, 2, 3), S(1, 2, 4), {}, 0.0)
    assert report.status == "fail"
    assert report.first_counterexample == {"n": 2, "k": None, "r": None, "lhs": 3, "rhs": 4}


def test_verify_identity_rejects():
    with pytest.raises(ValueError):
        verify_identity("nope")
    with pytest.raises(ValueError):
        verify_identity("TPNT", 20)


def test_report_invariants():
    with pytest.raises(ValueError):
        VerificationReport("x", {}, "fail")
    with pytest.raises(ValueError):
        VerificationReport("x", {}, "maybe")
    payload = VerificationReport("x", {"n_max": 3}, "pass", elapsed=1.5).to_dict(include_elapsed=False)
    assert payload["schema"] == 1 and "elapsed" not in payload
