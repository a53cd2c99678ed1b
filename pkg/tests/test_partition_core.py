import threading

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mexkit.partition_core import (
    Partition,
    Staircase,
    delta,
    delta_prime,
    enumerate_partitions,
    gap_statistic,
    is_generalized_pentagonal,
    is_twice_gen_pentagonal,
    iter_partitions,
    mex,
    parse_partition,
    partition_count,
    r_gap,
    render_partition,
    sigma_mex_convolution,
    sigma_mex_direct,
)

partitions = st.lists(st.integers(1, 8), max_size=10).map(lambda xs: Partition(tuple(xs)))


def test_partition_normalizes_order():
    assert Partition((1, 3, 2)).parts == (3, 2, 1)
    assert Partition.of(2, 2, 5).weight == 9


def test_partition_rejects_nonpositive():
    with pytest.raises(ValueError):
        Partition((3, 0))


@pytest.mark.parametrize("text, parts", [
    ("7+7+6+6+4+2", (7, 7, 6, 6, 4, 2)),
    ("1+3+2", (3, 2, 1)),
    ("0", ()),
    (" 4 + 1 ", (4, 1)),
])
def test_parse(text, parts):
    assert parse_partition(text).parts == parts


@pytest.mark.parametrize("text", ["a+1", "3++1", "-2", "1.5"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_partition(text)


def test_render_empty():
    assert render_partition(Partition(())) == "0"
    assert str(Partition.of(3, 1, 1)) == "3+1+1"


@given(partitions)
def test_render_parse_roundtrip(lam):
    assert parse_partition(str(lam)) == lam


@given(partitions)
def test_conjugate_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().weight == lam.weight


def test_enumerate_small():
    assert enumerate_partitions(0) == [Partition(())]
    assert [str(p) for p in enumerate_partitions(4)] == ["4", "3+1", "2+2", "2+1+1", "1+1+1+1"]


def test_enumerate_50():
    assert len(enumerate_partitions(50)) == 204226


@pytest.mark.parametrize("n", range(0, 31))
def test_enumeration_matches_recurrence(n):
    assert sum(1 for _ in iter_partitions(n)) == partition_count(n)


def test_partition_count_values():
    assert partition_count(-3) == 0
    assert partition_count(5) == 7
    assert partition_count(50) == 204226
    assert partition_count(100) == 190569292


def test_partition_count_threads():
    results = {}

    def work(i):
        results[i] = partition_count(300 + i)

    threads = [threading.Thread(target=work, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert [results[i] for i in range(8)] == [partition_count(300 + i) for i in range(8)]


def test_mex():
    assert mex(Partition(())) == 1
    assert mex(Partition.of(3, 2, 1)) == 4
    assert mex(Partition.of(2, 2)) == 1


def test_r_gap():
    assert r_gap(Partition(()), 5) == 1
    assert r_gap(Partition.of(2, 1, 1), 2) == 2
    assert gap_statistic(Partition.of(2, 1, 1), 2).value == 2
    with pytest.raises(ValueError):
        r_gap(Partition.of(1), 0)


@given(partitions, st.integers(1, 4))
def test_r_gap_definition(lam, r):
    g = r_gap(lam, r)
    counts = lam.multiplicities()
    assert g >= 1
    assert counts[g] < r
    assert all(counts[v] >= r for v in range(1, g))


@given(partitions)
def test_one_gap_is_mex(lam):
    assert r_gap(lam, 1) == mex(lam)


def test_sigma_mex_values():
    assert sigma_mex_direct(0, 1) == 1
    assert sigma_mex_direct(3, 1) == 6
    assert sigma_mex_direct(2, 2) == 3
    assert sigma_mex_convolution(3, 1) == 6
    assert sigma_mex_convolution(2, 2) == 3


@pytest.mark.parametrize("r", [1, 2, 3])
def test_sigma_mex_direct_vs_convolution(r):
    assert [sigma_mex_direct(n, r) for n in range(41)] == [sigma_mex_convolution(n, r) for n in range(41)]


def test_delta():
    assert (delta(0), delta(10), delta(5), delta(-1)) == (1, 1, 0, 0)


def test_delta_prime():
    assert (delta_prime(0), delta_prime(2), delta_prime(3)) == (1, -1, 0)
    assert delta_prime(4) == -1
    assert delta_prime(10) == 1


def test_twice_gen_pentagonal():
    assert is_twice_gen_pentagonal(0)
    assert is_twice_gen_pentagonal(2)
    assert not is_twice_gen_pentagonal(3)
    assert [m for m in range(16) if is_generalized_pentagonal(m)] == [0, 1, 2, 5, 7, 12, 15]


def test_parity_of_sigma_mex():
    for n in range(201):
        assert (sigma_mex_convolution(n) % 2 == 1) == is_twice_gen_pentagonal(n)


def test_partitions_without_one():
    for n in range(1, 61):
        if n <= 30:
            direct = sum(1 for lam in iter_partitions(n) if 1 not in lam)
            assert direct == partition_count(n) - partition_count(n - 1)
        assert partition_count(n) >= partition_count(n - 1)


def test_staircase():
    assert Staircase(3).partition() == Partition.of(3, 2, 1)
    assert Staircase(3).weight == 6
    assert Staircase(0).partition() == Partition(())


@settings(max_examples=40)
@given(st.integers(0, 18))
def test_reverse_lex_order(n):
    seq = list(iter_partitions(n))
    assert seq == sorted(seq, reverse=True)
    assert len(set(seq)) == len(seq)
