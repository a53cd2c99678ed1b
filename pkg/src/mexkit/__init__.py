"""Exact computation with the minimal excludant of integer partitions."""

from mexkit.partition_core import (
    Partition,
    delta,
    delta_prime,
    enumerate_partitions,
    is_twice_gen_pentagonal,
    mex,
    parse_partition,
    partition_count,
    r_gap,
    sigma_mex_convolution,
    sigma_mex_direct,
)
from mexkit.families import ColoredPartition, Overpartition, count
from mexkit.qseries import TruncatedSeries, gf, verify_identity

__version__ = "0.1.0"

__all__ = [
    "ColoredPartition",
    "Overpartition",
    "Partition",
    "TruncatedSeries",
    "count",
    "delta",
    "delta_prime",
    "enumerate_partitions",
    "gf",
    "is_twice_gen_pentagonal",
    "mex",
    "parse_partition",
    "partition_count",
    "r_gap",
    "sigma_mex_convolution",
    "sigma_mex_direct",
    "verify_identity",
]
