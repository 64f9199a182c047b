"""Partitioning a family into k independent sets, and certifying when it fails.

All verdicts are read off a fundamental partition: the family splits into k
independent sets exactly when its fundamental partition has at most k blocks.
When it does not, a transversal of the first k blocks yields a subset whose
ratio ``|J| / dim span(J)`` exceeds k.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple

from radohorn.config import DEFAULT_SETTINGS, OracleBudget, Settings
from radohorn.exact_linalg import RationalVector, in_span, is_independent, rank, span_equal
from radohorn.exceptions import (
    ArgumentError,
    BudgetExceededError,
    ConstructionError,
    DegenerateFamilyError,
    NoWitnessError,
)
from radohorn.family_partition import IndexSet, OrderedPartition, VectorFamily
from radohorn.fundamental import (
    Transversal,
    construct_fundamental,
    find_transversal,
    max_ratio_subset,
    merged_transversal,
)
from radohorn.oracle import Oracle

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    SATISFIABLE = "satisfiable"
    VIOLATED = "violated"


class RemovalVerdict(str, Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class ScreenResult:
    """Outcome of :func:`screen_zero_vectors`."""

    zero_indices: tuple[int, ...] = ()

    @property
    def clean(self) -> bool:
        return not self.zero_indices


@dataclass(frozen=True)
class RadoHornCertificate:
    """Answer to "does the family split into ``k`` independent sets?".

    A violated certificate carries a subset ``witness_subset`` whose ratio
    exceeds ``k``. When it comes from :func:`partition_into_k` it also
    carries the transversal and anchor it was built from; its ratio is then
    exactly ``k + 1 / transversal_dim``.
    """

    verdict: Verdict
    k: int
    witness_subset: IndexSet | None = None
    ratio: Fraction | None = None
    partition: OrderedPartition | None = None
    transversal: Transversal | None = None
    anchor: int | None = None
    transversal_dim: int | None = None

    @property
    def satisfiable(self) -> bool:
        return self.verdict is Verdict.SATISFIABLE

    def fail_decomposition(self) -> tuple[int, Fraction] | None:
        """``(k, 1 / dim span(T))`` for transversal-backed violations."""
        if self.transversal_dim is None:
            return None
        return self.k, Fraction(1, self.transversal_dim)


@dataclass(frozen=True)
class RedundantWitness:
    """Structure explaining why no k-block independent partition exists.

    ``partition`` has k blocks, the last of which is generally dependent.
    Every ``slices[i]`` spans the subspace with basis ``subspace_basis``,
    ``saturated_set`` is every index whose vector lies there, and
    ``transversal`` keeps the k-transversal the slices were cut from.
    ``conditions`` holds the three rank checks in order: equal spans, ratio
    above k, and independence of each block minus its slice.
    """

    k: int
    partition: tuple[IndexSet, ...]
    subspace_basis: tuple[RationalVector, ...]
    slices: tuple[IndexSet, ...]
    saturated_set: IndexSet
    conditions: tuple[bool, bool, bool]
    merged: bool
    transversal: tuple[IndexSet, ...] = ()

    @property
    def dimension(self) -> int:
        return len(self.subspace_basis)

    @property
    def ratio(self) -> Fraction:
        return Fraction(len(self.saturated_set), self.dimension)


@dataclass(frozen=True)
class RemovalReport:
    """Whether removing ``removals`` vectors leaves a k-partitionable family."""

    k: int
    removals: int
    verdict: RemovalVerdict
    removed: IndexSet | None = None
    witness: IndexSet | None = None
    ratio: Fraction | None = None

    @property
    def feasible(self) -> bool:
        return self.verdict is RemovalVerdict.FEASIBLE


class SpanningSummary(NamedTuple):
    total_dim: int
    max_spanning_sets: int


def screen_zero_vectors(family: VectorFamily) -> ScreenResult:
    return ScreenResult(tuple(entry.index for entry in family if entry.vector.is_zero()))


def require_clean(family: VectorFamily) -> None:
    """Raise :class:`DegenerateFamilyError` if the family has zero vectors."""
    screen = screen_zero_vectors(family)
    if not screen.clean:
        raise DegenerateFamilyError(screen.zero_indices)


def _require_k(k: int) -> None:
    if k < 1:
        raise ArgumentError(f"k must be a positive integer, got {k}")


def check_inequality(family: VectorFamily, k: int) -> RadoHornCertificate:
    """Test ``|J| / dim span(J) <= k`` for every subset J.

    The witness of a violation is the maximum-ratio subset.

    Raises:
        DegenerateFamilyError: If the family has zero vectors.
        ArgumentError: If ``k < 1``.
    """
    _require_k(k)
    require_clean(family)
    if family.size == 0:
        return RadoHornCertificate(Verdict.SATISFIABLE, k)
    subset, ratio = max_ratio_subset(family)
    if ratio > k:
        return RadoHornCertificate(Verdict.VIOLATED, k, witness_subset=subset, ratio=ratio)
    return RadoHornCertificate(Verdict.SATISFIABLE, k, ratio=ratio)


def partition_into_k(
    family: VectorFamily, k: int, *, settings: Settings | None = None
) -> RadoHornCertificate:
    """Split the family into at most ``k`` independent sets, or prove it cannot be done.

    Raises:
        DegenerateFamilyError: If the family has zero vectors.
        ArgumentError: If ``k < 1``.
    """
    _require_k(k)
    require_clean(family)
    partition, _ = construct_fundamental(family, settings=settings)
    if len(partition) <= k:
        return RadoHornCertificate(Verdict.SATISFIABLE, k, partition=partition)

    anchor = min(partition[-1])
    transversal = find_transversal(family, partition, k, anchor)
    witness = transversal.members() | {anchor}
    dim = rank(family.vectors(witness))
    ratio = Fraction(len(witness), dim)
    if ratio != k + Fraction(1, dim):
        raise ConstructionError(f"witness ratio {ratio} does not decompose as {k} + 1/{dim}")
    logger.debug("k=%d violated: anchor %d, witness %s", k, anchor, sorted(witness))
    return RadoHornCertificate(
        Verdict.VIOLATED,
        k,
        witness_subset=witness,
        ratio=ratio,
        partition=partition,
        transversal=transversal,
        anchor=anchor,
        transversal_dim=dim,
    )


def generalized_check(
    family: VectorFamily, k: int, removals: int, *, settings: Settings | None = None
) -> RemovalReport:
    """Can ``removals`` vectors be dropped so the rest splits into ``k`` independent sets?

    Feasible exactly when the blocks after the k-th of a fundamental partition
    hold at most ``removals`` vectors. Otherwise the witness J combines a
    k-transversal spanning block ``k + 1`` with all later blocks, and
    ``(|J| - removals) / dim span(J) > k``.

    Raises:
        DegenerateFamilyError: If the family has zero vectors.
        ArgumentError: If ``k < 1`` or ``removals`` is outside ``0..M``.
    """
    _require_k(k)
    if not 0 <= removals <= family.size:
        raise ArgumentError(f"L must be in 0..{family.size}, got {removals}")
    require_clean(family)
    partition, _ = construct_fundamental(family, settings=settings)
    blocks = partition.blocks
    tail = frozenset().union(*blocks[k:])

    if len(tail) <= removals:
        removed = set(tail)
        for block in reversed(blocks[:k]):
            for index in sorted(block, reverse=True):
                if len(removed) == removals:
                    break
                removed.add(index)
        return RemovalReport(k, removals, RemovalVerdict.FEASIBLE, removed=frozenset(removed))

    transversal = merged_transversal(family, partition, k, blocks[k])
    witness = transversal.members() | tail
    ratio = Fraction(len(witness) - removals, rank(family.vectors(witness)))
    if ratio <= k:
        raise ConstructionError(f"removal witness ratio {ratio} does not exceed {k}")
    return RemovalReport(
        k, removals, RemovalVerdict.INFEASIBLE, witness=witness, ratio=ratio
    )


def redundant_witness(
    family: VectorFamily,
    k: int,
    *,
    merge: bool | None = None,
    settings: Settings | None = None,
) -> RedundantWitness:
    """Subspace witness for a family that does not split into ``k`` independent sets.

    With ``merge`` (the default, from ``construction.redundant_merge``) the
    transversal is merged over every vector after block ``k``, which also
    makes each block minus its slice independent. Without it a single anchor
    from the last block is used.

    Raises:
        DegenerateFamilyError: If the family has zero vectors.
        NoWitnessError: If the family does split into ``k`` independent sets.
    """
    _require_k(k)
    require_clean(family)
    settings = settings or DEFAULT_SETTINGS
    if merge is None:
        merge = settings.construction.redundant_merge
    partition, _ = construct_fundamental(family, settings=settings)
    blocks = partition.blocks
    if len(blocks) <= k:
        raise NoWitnessError(
            f"the family splits into {len(blocks)} independent set(s), so k={k} is feasible"
        )

    grouped = (*blocks[: k - 1], frozenset().union(*blocks[k - 1 :]))
    anchors = frozenset().union(*blocks[k:]) if merge else frozenset({min(blocks[-1])})
    transversal = merged_transversal(family, partition, k, anchors)
    slices = transversal.slices
    if merge:
        # every tail vector lies in the merged span, so the last slice takes them all
        slices = (*slices[:-1], slices[-1] | frozenset().union(*blocks[k:]))
    basis = tuple(family.vectors(transversal.slices[0]))
    saturated = frozenset(i for i in family.indices if in_span(family.vector(i), basis))

    spans_agree = all(span_equal(basis, family.vectors(s)) for s in slices)
    ratio_exceeds = Fraction(len(saturated), len(basis)) > k
    remainders_independent = all(
        is_independent(family.vectors(block - chosen))
        for block, chosen in zip(grouped, slices)
    )
    return RedundantWitness(
        k=k,
        partition=grouped,
        subspace_basis=basis,
        slices=slices,
        transversal=transversal.slices,
        saturated_set=saturated,
        conditions=(spans_agree, ratio_exceeds, remainders_independent),
        merged=merge,
    )


def spanning_summary(
    family: VectorFamily, *, settings: Settings | None = None
) -> SpanningSummary:
    """Total dimension and the largest number of disjoint spanning subsets.

    Both come from the last stage of the construction: the family has
    ``k_r`` disjoint spanning sets when that stage's last slice is full, and
    ``k_r - 1`` otherwise.
    """
    require_clean(family)
    _, trace = construct_fundamental(family, settings=settings)
    if not trace.stages:
        return SpanningSummary(0, 0)
    last = trace.stages[-1]
    spanning = last.k if last.t == last.s else last.k - 1
    return SpanningSummary(trace.total_dimension, spanning)


def removal_satisfies_inequality(
    family: VectorFamily, k: int, removed: Iterable[int], budget: OracleBudget | None = None
) -> bool:
    """Check ``(|J| - |H|) / dim span(J) <= k`` for every nonempty J by enumeration.

    Raises:
        BudgetExceededError: If the family exceeds ``max_subset_scan``.
    """
    oracle = Oracle(family, budget)
    if family.size > oracle.budget.max_subset_scan:
        raise BudgetExceededError(
            "removal_satisfies_inequality", family.size, oracle.budget.max_subset_scan
        )
    size = len(set(removed))
    return all(
        mask.bit_count() - size <= k * oracle.rank_of(mask)
        for mask in range(1, oracle.full_mask + 1)
    )
