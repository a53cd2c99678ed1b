from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mexkit import families as fam
from mexkit.families import ColoredPartition, Overpartition, parse_colored, parse_overpartition
from mexkit.partition_core import (
    Partition,
    iter_partitions,
    partition_count,
    sigma_mex_convolution,
    sigma_mex_direct,
    triangular,
)


def _tri_sum(n, f):
    total, j = 0, 0
    while triangular(j) <= n:
        total += f(n - triangular(j))
        j += 1
    return total


# -- types and text formats ---------------------------------------------------

def test_colored_order_and_render():
    mu = ColoredPartition(((3, 0), (9, 1), (3, 1)))
    assert str(mu) == "9_1+3_1+3_0"
    assert parse_colored("3_0+9_1+3_1") == mu
    assert parse_colored("0") == ColoredPartition()
    assert mu.weight == 15 and mu.length(1) == 2 and mu.color_class(0) == Partition.of(3)


@pytest.mark.parametrize("text", ["3", "3_5", "x_1", "0_1", "3_1++2_0"])
def test_colored_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_colored(text)


def test_colored_distinctness():
    assert ColoredPartition(((3, 1), (3, 0))).is_distinct()
    assert not ColoredPartition(((3, 0), (3, 0))).is_distinct()
    assert ColoredPartition(((4, 1), (3, 0), (3, 1), (2, 0), (1, 0))).is_distinct()


def test_overpartition_canonical_form():
    op = parse_overpartition("3+3o+1")
    assert str(op) == "3o+3+1"
    assert op.weight == 7
    with pytest.raises(ValueError):
        Overpartition(((2, True), (2, True)))


def test_overpartitions_of_three():
    listed = ["3", "3o", "2+1", "2o+1", "2+1o", "2o+1o", "1+1+1", "1o+1+1"]
    assert [str(op) for op in fam.enumerate_overpartitions(3)] == listed


def test_overpartition_counts():
    assert len(fam.enumerate_overpartitions(0)) == 1
    assert len(fam.enumerate_overpartitions(4)) == 14
    for n in range(12):
        ops = fam.enumerate_overpartitions(n)
        assert len(set(ops)) == len(ops) == fam.count_overpartitions(n)


# -- point values -------------------------------------------------------------

@pytest.mark.parametrize("fn, n, expected", [
    (fam.count_D2, 0, 1), (fam.count_D2, 1, 2), (fam.count_D2, 3, 6),
    (fam.count_D1, 0, 1), (fam.count_D1, 5, 3), (fam.count_D1, 6, 4),
    (fam.count_pod, 0, 1), (fam.count_pod, 3, 2), (fam.count_pod, 4, 3),
    (fam.count_D2_star, 0, 1), (fam.count_D2_star, 3, 2),
])
def test_point_values(fn, n, expected):
    assert fn(n) == expected


def test_parametrized_point_values():
    assert fam.count_Mk(3, 1) == 1
    assert fam.count_Mk(7, 2) == 1
    assert fam.enumerate_Mk(7, 2) == [Partition.of(3, 3, 1)]
    assert fam.count_Mbar_k(12, 2) == 16
    assert fam.count_Mbar_k(3, 5) == 0
    assert fam.count_MPk(19, 2) == 10
    assert fam.count_MPk(0, 1) == 0
    assert fam.count_D3k(1, 1) == 0
    assert fam.count_D3k(3, 1) == 2
    assert fam.count_Dtilde2_r(2, 2) == 3
    assert [fam.count_Dtilde2_r(0, r) for r in (1, 2, 3)] == [1, 1, 1]


def test_negative_and_fractional_arguments():
    assert fam.count_D1(-1) == 0
    assert fam.count_D1(Fraction(5, 2)) == 0
    assert fam.count_D1(Fraction(10, 2)) == 3
    assert fam.count_D2(-4) == 0
    assert fam.count_Mk(-1, 2) == 0


def test_mbar_witnesses():
    listed = {
        "4+4+4", "4o+4+4", "3+3+3+3", "3o+3+3+3", "3+3+3+2+1", "3+3+3+2o+1",
        "3+3+3+2+1o", "3+3+3+2o+1o", "3o+3+3+2+1", "3o+3+3+2o+1", "3o+3+3+2+1o",
        "3o+3+3+2o+1o", "3+3+3+1+1+1", "3+3+3+1o+1+1", "3o+3+3+1+1+1", "3o+3+3+1o+1+1",
    }
    assert {str(op) for op in fam.enumerate_Mbar_k(12, 2)} == listed


def test_mp_witnesses():
    listed = {
        "9+9+1", "9+5+5", "8+5+5+1", "7+7+3+2", "7+7+2+2+1", "7+5+5+2",
        "6+5+5+3", "6+5+5+2+1", "5+5+3+2+2+2", "5+5+2+2+2+2+1",
    }
    assert {str(lam) for lam in fam.enumerate_MPk(19, 2)} == listed


# -- fast counts against literal enumerators -----------------------------------

@pytest.mark.parametrize("n", range(0, 21))
def test_fast_counts_match_enumeration(n):
    assert fam.count_D2(n) == sum(1 for _ in fam.enumerate_D2(n))
    assert fam.count_pod(n) == len(fam.enumerate_pod(n))
    assert fam.count_D2_star(n) == sum(1 for _ in fam.enumerate_D2_star(n))
    for k in (1, 2, 3):
        assert fam.count_Mk(n, k) == len(fam.enumerate_Mk(n, k))
        assert fam.count_MPk(n, k) == len(fam.enumerate_MPk(n, k))
        assert fam.count_D3k(n, k) == sum(1 for _ in fam.enumerate_D3k(n, k))
    for r in (1, 2, 3):
        assert fam.count_Dtilde2_r(n, r) == sum(1 for _ in fam.enumerate_Dtilde2_r(n, r))


@pytest.mark.parametrize("n", range(0, 13))
def test_mbar_count_matches_enumeration(n):
    for k in (1, 2, 3):
        assert fam.count_Mbar_k(n, k) == len(fam.enumerate_Mbar_k(n, k))


def test_m1_is_p_difference():
    for n in range(1, 61):
        assert fam.count_Mk(n, 1) == partition_count(n) - partition_count(n - 1)


# -- identities by counting -----------------------------------------------------

def test_d2_equals_sigma_mex():
    for n in range(41):
        assert fam.count_D2(n) == sigma_mex_direct(n, 1)


def test_r_gap_theorem_by_counts():
    for r in (1, 2, 3):
        for n in range(31):
            assert fam.count_Dtilde2_r(n, r) == sigma_mex_direct(n, r)


def test_dtilde_r1_is_d2():
    for n in range(20):
        assert set(fam.enumerate_Dtilde2_r(n, 1)) == set(fam.enumerate_D2(n))


def test_d3k_convolution():
    for k in (1, 2, 3):
        for n in range(31):
            assert fam.count_D3k(n, k) == _tri_sum(n, lambda m: fam.count_Mk(m, k))


def test_d2_star_from_d1():
    for n in range(31):
        assert fam.count_D2_star(n) == _tri_sum(n, lambda m: fam.count_D1(Fraction(m, 2)))


def test_sigma_mex_pod_convolution():
    for n in range(41):
        conv = sum(fam.count_pod(j) * fam.count_D2_star(n - j) for j in range(n + 1))
        assert conv == sigma_mex_convolution(n)


# -- predicates -------------------------------------------------------------------

def test_is_mk():
    assert fam.is_Mk((3, 3, 1), 2)
    assert not fam.is_Mk((3, 1), 2)
    assert not fam.is_Mk((2, 1), 2)


def test_is_mpk_uses_smallest_qualifying_part():
    assert fam.is_MPk((9, 5, 5), 2)
    assert not fam.is_MPk((9, 9, 5), 2)
    assert not fam.is_MPk((7, 7, 3, 1, 1), 2)


def test_staircase_height():
    assert [fam.staircase_height(a, b) for a, b in [(0, 0), (1, 0), (2, 0), (0, 1), (0, 2), (2, 6)]] \
        == [0, 0, 2, 1, 1, 3]


# -- dispatch ------------------------------------------------------------------------

def test_count_dispatch():
    assert fam.count("Mbark", 12, k=2).count == 16
    assert fam.count("sigma_mex", 0).count == 1
    assert fam.count("D2", 3).count == 6
    assert fam.count("p", 5).count == 7
    assert fam.count("sigma_mex_r", 2, r=2).count == 3


@pytest.mark.parametrize("args", [("Mk", 3, None, None), ("Dtilde2r", 3, None, None),
                                  ("nope", 3, None, None), ("D2", -1, None, None)])
def test_count_dispatch_errors(args):
    family, n, k, r = args
    with pytest.raises(ValueError):
        fam.count(family, n, k=k, r=r)


@given(st.integers(0, 25))
def test_counts_nonnegative(n):
    for family in fam.Family:
        result = fam.count(family, n, k=2, r=2)
        assert result.count >= 0


def test_every_partition_of_n_is_counted_once_in_pod_or_not():
    for n in range(15):
        pods = sum(1 for lam in iter_partitions(n) if fam.is_pod(lam))
        assert pods == fam.count_pod(n)
