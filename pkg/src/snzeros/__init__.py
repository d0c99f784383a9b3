"""Zeros of irreducible characters of the symmetric groups.

Exact counts of certified zeros (t-core and Stanley-type criteria), the
generating functions behind them, asymptotic predictors, and a uniform
Boltzmann sampler for Monte Carlo estimates at large N.
"""

from .asymptotics import AsymptoticReport, leading_proportion, refined_integral, report
from .characters import CharTable, character, full_table
from .hooks import SizeGuardError, hook_lengths, is_core
from .partitions import Partition, enumerate_partitions, partition_count
from .sampler import SampleEstimate, SeedSpec, estimate_zero_types, sample_partition
from .zeros import PairFlags, ZeroCensus, census, classify, z1_exact

__version__ = "0.1.0"

__all__ = [
    "AsymptoticReport",
    "CharTable",
    "PairFlags",
    "Partition",
    "SampleEstimate",
    "SeedSpec",
    "SizeGuardError",
    "ZeroCensus",
    "census",
    "character",
    "classify",
    "enumerate_partitions",
    "estimate_zero_types",
    "full_table",
    "hook_lengths",
    "is_core",
    "leading_proportion",
    "partition_count",
    "refined_integral",
    "report",
    "sample_partition",
    "z1_exact",
]
