"""Summand report for the type-A pushforward decomposition.

For sl_{n+1}, every adjoint orbit carries a cyclic fundamental group of
order c = gcd of its partition; the top cohomology of the covering fiber
contains a copy of the regular representation, so every one of the c
characters is certified to occur as a local-system summand.  The report
lists each (orbit, character) pair with the orbit and fiber dimensions.
Multiplicities are lower bounds only and are never fabricated.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import InputError, Partition, ResourceBoundError, partitions_of
from .orbits import orbit_dimension_type_a
from .paving import max_cell_dimension

DEFAULT_RANK_BOUND = 20


@dataclass(frozen=True)
class SummandRecord:
    """One orbit of sl_{n+1} with its certified character list.

    ``characters`` lists the c character labels 0..c-1 of the cyclic
    fundamental group.  ``multiplicity_known`` stays False: each character
    occurs at least once, and nothing more is claimed.
    """

    partition: Partition
    orbit_dimension: int
    fiber_dimension: int
    c: int
    characters: tuple[int, ...]
    multiplicity_known: bool = False


def summand_report(n: int, bound: int = DEFAULT_RANK_BOUND) -> list[SummandRecord]:
    """One record per partition of n+1, sorted by orbit dimension descending.

    Ties break on the partition tuple, so output order is deterministic.
    """
    if n < 1:
        raise InputError("rank must be >= 1, got %d" % n)
    if n > bound:
        raise ResourceBoundError("rank %d exceeds the report bound %d" % (n, bound))
    records = []
    for p in partitions_of(n + 1):
        dim = orbit_dimension_type_a(n, p)
        d_x = max_cell_dimension(p)
        c = p.gcd()
        records.append(
            SummandRecord(
                partition=p,
                orbit_dimension=dim,
                fiber_dimension=d_x,
                c=c,
                characters=tuple(range(c)),
            )
        )
    records.sort(key=lambda r: (-r.orbit_dimension, r.partition.parts))
    return records
