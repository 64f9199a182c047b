"""Fundamental partitions: support chains, transversals and the staged construction.

A fundamental partition is an ordered independent partition whose profile
majorizes the profile of every other one. This module builds one by repeatedly
taking a maximum-ratio subset, splitting it into slices and projecting the rest
of the family onto the orthogonal complement of its span.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from radohorn.config import DEFAULT_SETTINGS, MaximizerPolicy, OracleBudget, Settings
from radohorn.exact_linalg import (
    EchelonBasis,
    expansion_coefficients,
    is_independent,
    project_complement_many,
    rank,
    span_contains,
    span_equal,
)
from radohorn.exceptions import (
    ArgumentError,
    ConstructionError,
    DegenerateFamilyError,
    NotInSpanError,
    PartitionError,
    TransversalError,
)
from radohorn.family_partition import (
    IndexSet,
    OrderedPartition,
    VectorFamily,
    majorizes,
    require_ordered,
    validate_ordered,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Transversal:
    """A t-transversal of ``partition``.

    ``slices[i]`` is drawn from block ``i + 1``; all slices span the same
    subspace.
    """

    partition: OrderedPartition
    slices: tuple[IndexSet, ...]

    @property
    def t(self) -> int:
        return len(self.slices)

    def members(self) -> IndexSet:
        return frozenset().union(*self.slices)

    def dimension(self, family: VectorFamily) -> int:
        """Dimension of the common span of the slices."""
        return rank(family.vectors(self.slices[0])) if self.slices else 0

    def as_lists(self) -> list[list[int]]:
        return [sorted(s) for s in self.slices]


@dataclass(frozen=True)
class ChainState:
    """Fixpoint of the support chain seeded at ``seed``.

    ``sets[i]`` lies in block ``i + 1`` and ``carrier`` is the 1-based block
    holding a largest set. ``history`` keeps the sets of every step.
    """

    seed: int
    step: int
    sets: tuple[IndexSet, ...]
    carrier: int
    history: tuple[tuple[IndexSet, ...], ...] = field(default=(), repr=False)

    def entry_step(self, position: int, index: int) -> int:
        """First step at which ``index`` joined the set of block ``position``."""
        for step, sets in enumerate(self.history, start=1):
            if index in sets[position - 1]:
                return step
        raise KeyError(index)


@dataclass(frozen=True)
class Stage:
    """One stage of the construction.

    Indices refer to the input family. ``projected_family`` is the family the
    stage worked on; its ``origin`` maps local indices back.
    """

    number: int
    indices: IndexSet
    slices: tuple[IndexSet, ...]
    t: int
    k: int
    s: int
    projected_family: VectorFamily = field(repr=False)

    @property
    def ratio(self) -> Fraction:
        return Fraction(len(self.indices), self.t)


@dataclass(frozen=True)
class MergeEvent:
    """Two consecutive stages with equal ``k`` collapsed into one."""

    stage: int
    absorbed: IndexSet
    merged: IndexSet
    ratio_before: Fraction
    ratio_after: Fraction


@dataclass(frozen=True)
class StageTrace:
    stages: tuple[Stage, ...]
    merges: tuple[MergeEvent, ...] = ()

    def __len__(self) -> int:
        return len(self.stages)

    @property
    def total_dimension(self) -> int:
        return sum(stage.t for stage in self.stages)

    def stage_of(self, index: int) -> int:
        for stage in self.stages:
            if index in stage.indices:
                return stage.number
        raise KeyError(index)

    def cell_order(self, partition: OrderedPartition) -> list[list[int]]:
        """Members of each block, ordered by stage and then by index."""
        return [sorted(block, key=lambda i: (self.stage_of(i), i)) for block in partition]

    def annotations(self, partition: OrderedPartition) -> dict[tuple[int, int], str]:
        """Diagram labels ``T<j>`` naming the stage each cell came from."""
        labels: dict[tuple[int, int], str] = {}
        for row, members in enumerate(self.cell_order(partition), start=1):
            for column, index in enumerate(members, start=1):
                labels[(row, column)] = f"T{self.stage_of(index)}"
        return labels


@dataclass(frozen=True)
class FundamentalCheck:
    is_fundamental: bool
    method: Literal["validation", "oracle", "certificate"]
    reason: str | None = None


def minimal_support(
    family: VectorFamily, target_span_generators: Iterable[int], within_block: Iterable[int]
) -> IndexSet:
    """Smallest subset of an independent block whose span contains the targets.

    The subset is unique: it is the union of the nonzero positions in the
    expansions of the target vectors over the block.

    Raises:
        DependentSetError: If the block is dependent.
        NotInSpanError: If a target lies outside the block's span.
    """
    block = sorted(within_block)
    basis = family.vectors(block)
    support: set[int] = set()
    for target in sorted(target_span_generators):
        coefficients = expansion_coefficients(family.vector(target), basis)
        support.update(block[p - 1] for p in coefficients.nonzero())
    return frozenset(support)


def _chain(family: VectorFamily, upper: tuple[IndexSet, ...], seed: int) -> ChainState:
    first = minimal_support(family, {seed}, upper[-1])
    target, previous_size = first, len(first)
    history: list[tuple[IndexSet, ...]] = []
    # Sizes grow strictly until the fixpoint and never exceed the dimension.
    for step in range(1, family.dimension + 2):
        sets = tuple(minimal_support(family, target, block) for block in upper)
        history.append(sets)
        size = max(len(s) for s in sets)
        carrier = next(p for p, s in enumerate(sets, start=1) if len(s) == size)
        logger.debug("chain seed %d step %d: sizes %s", seed, step, [len(s) for s in sets])
        if size == previous_size:
            spans = [family.vectors(s) for s in sets]
            if not all(span_equal(spans[0], other) for other in spans[1:]):
                raise TransversalError(f"chain seeded at {seed} ended without equal spans")
            return ChainState(
                seed=seed, step=step, sets=sets, carrier=carrier, history=tuple(history)
            )
        target, previous_size = sets[carrier - 1], size
    raise TransversalError(f"chain seeded at {seed} did not reach a fixpoint")


def build_chain(family: VectorFamily, partition: OrderedPartition, seed: int) -> ChainState:
    """Iterate minimal supports across the first ``l - 1`` blocks to a fixpoint.

    The seed must lie in the last block. For a fundamental partition every
    step is defined and the final sets all span the same subspace.

    Raises:
        PartitionError: If the partition is not ordered and independent.
        TransversalError: If there is no seed block, the seed is elsewhere, or
            a support step fails (the partition is then not fundamental).
    """
    require_ordered(family, partition)
    if len(partition) < 2:
        raise TransversalError("no seed exists: the partition has a single block")
    if seed not in partition[-1]:
        raise TransversalError(f"seed {seed} is not in the last block")
    try:
        return _chain(family, partition.blocks[:-1], seed)
    except NotInSpanError as exc:
        raise TransversalError(f"chain seeded at {seed} broke: {exc}") from exc


def chain_annotations(
    chain: ChainState, partition: OrderedPartition
) -> tuple[list[list[int]], dict[tuple[int, int], str]]:
    """Cell order and labels for drawing a chain over ``partition``.

    Chain members come first in each row, labelled with the step at which
    they joined; the seed is marked ``*``.
    """
    order: list[list[int]] = []
    labels: dict[tuple[int, int], str] = {}
    for row, block in enumerate(partition, start=1):
        if row <= len(chain.sets):
            chosen = chain.sets[row - 1]
            ranked = sorted(chosen, key=lambda i: (chain.entry_step(row, i), i))
            members = ranked + sorted(block - chosen)
            for column, index in enumerate(ranked, start=1):
                labels[(row, column)] = str(chain.entry_step(row, index))
        elif chain.seed in block:
            members = [chain.seed, *sorted(block - {chain.seed})]
            labels[(row, 1)] = "*"
        else:
            members = sorted(block)
        order.append(members)
    return order, labels


def check_transversal(family: VectorFamily, transversal: Transversal) -> bool:
    """True iff ``transversal`` meets the definition of a t-transversal exactly."""
    blocks = transversal.partition.blocks
    if transversal.t < 1 or transversal.t > len(blocks):
        return False
    for position, chosen in enumerate(transversal.slices):
        if not chosen or not chosen <= blocks[position]:
            return False
        if not is_independent(family.vectors(chosen)):
            return False
    first = family.vectors(transversal.slices[0])
    return all(span_equal(first, family.vectors(s)) for s in transversal.slices[1:])


def transversal_chain(
    family: VectorFamily, partition: OrderedPartition, t: int, anchor: int
) -> tuple[OrderedPartition, ChainState]:
    """Support chain over blocks ``1..t`` seeded at ``anchor``.

    Returns the chain together with the blocks it ran over: the first ``t``
    blocks followed by the anchor's block.

    Raises:
        PartitionError: If the partition is not ordered and independent.
        TransversalError: If ``t`` is out of range, the anchor is in a block
            ``<= t``, or the chain fails.
    """
    require_ordered(family, partition)
    if not 1 <= t < len(partition):
        raise TransversalError(f"t must be in 1..{len(partition) - 1}, got {t}")
    try:
        position = partition.block_of(anchor)
    except KeyError:
        raise TransversalError(f"anchor {anchor} is not in the partition") from None
    if position <= t:
        raise TransversalError(f"anchor {anchor} is in block {position}, which is not after {t}")
    view = OrderedPartition((*partition.blocks[:t], partition.blocks[position - 1]))
    try:
        chain = _chain(family, view.blocks[:-1], anchor)
    except NotInSpanError as exc:
        raise TransversalError(f"no {t}-transversal through {anchor}: {exc}") from exc
    return view, chain


def find_transversal(
    family: VectorFamily, partition: OrderedPartition, t: int, anchor: int
) -> Transversal:
    """A t-transversal whose common span contains ``anchor``'s vector.

    The anchor must sit in a block after the first ``t``.

    Raises:
        PartitionError: If the partition is not ordered and independent.
        TransversalError: If no such transversal can be built.
    """
    _, chain = transversal_chain(family, partition, t, anchor)
    transversal = Transversal(partition=partition, slices=chain.sets)
    if not check_transversal(family, transversal):
        raise TransversalError(f"chain through {anchor} did not yield a {t}-transversal")
    return transversal


def merge_transversals(a: Transversal, b: Transversal) -> Transversal:
    """Slice-wise union of two t-transversals of the same partition.

    Raises:
        TransversalError: If ``t`` or the partition differ.
    """
    if a.partition != b.partition:
        raise TransversalError("transversals refer to different partitions")
    if a.t != b.t:
        raise TransversalError(f"cannot merge a {a.t}-transversal with a {b.t}-transversal")
    return Transversal(
        partition=a.partition,
        slices=tuple(x | y for x, y in zip(a.slices, b.slices)),
    )


def merged_transversal(
    family: VectorFamily, partition: OrderedPartition, t: int, anchors: Iterable[int]
) -> Transversal:
    """Union of the t-transversals through every anchor."""
    merged: Transversal | None = None
    for anchor in sorted(anchors):
        found = find_transversal(family, partition, t, anchor)
        merged = found if merged is None else merge_transversals(merged, found)
    if merged is None:
        raise TransversalError("at least one anchor is required")
    return merged


def _require_nonzero(family: VectorFamily) -> None:
    zeros = [entry.index for entry in family if entry.vector.is_zero()]
    if zeros:
        raise DegenerateFamilyError(zeros)


def _closure(family: VectorFamily, basis: EchelonBasis) -> IndexSet:
    return frozenset(i for i in family.indices if basis.contains(family.vector(i)))


def span_closed_subsets(family: VectorFamily) -> dict[IndexSet, int]:
    """Every nonempty span-closed subset, mapped to the dimension of its span.

    Each closed set of rank r is the closure of a closed set of rank r - 1
    plus one vector, so a search from single vectors reaches all of them.
    """
    found: dict[IndexSet, int] = {}
    frontier: list[tuple[IndexSet, EchelonBasis]] = []
    for index in family.indices:
        basis = EchelonBasis(family.dimension)
        if not basis.add(family.vector(index)):
            continue
        closed = _closure(family, basis)
        if closed not in found:
            found[closed] = 1
            frontier.append((closed, basis))
    while frontier:
        closed, basis = frontier.pop()
        for index in family.indices:
            if index in closed:
                continue
            extended = basis.copy()
            extended.add(family.vector(index))
            grown = _closure(family, extended)
            if grown not in found:
                found[grown] = len(extended)
                frontier.append((grown, extended))
    return found


def pick_maximizer(
    candidates: Mapping[IndexSet, Fraction], policy: MaximizerPolicy = "largest"
) -> tuple[IndexSet, Fraction]:
    """Apply the maximizer tie-break to ``{subset: ratio}``.

    Highest ratio wins; then the largest subset (or smallest, under
    ``policy="smallest"``); then the lexicographically smallest index list.
    """
    if not candidates:
        raise ValueError("no candidate subsets")
    best = max(candidates.values())
    tied = [subset for subset, ratio in candidates.items() if ratio == best]
    sign = -1 if policy == "largest" else 1
    chosen = min(tied, key=lambda subset: (sign * len(subset), sorted(subset)))
    return chosen, best


def max_ratio_subset(
    family: VectorFamily, *, policy: MaximizerPolicy = "largest"
) -> tuple[IndexSet, Fraction]:
    """Span-closed subset J maximizing ``|J| / dim span(J)``.

    Raises:
        ArgumentError: If the family is empty.
        DegenerateFamilyError: If the family contains zero vectors.
    """
    if family.size == 0:
        raise ArgumentError("max_ratio_subset needs a nonempty family")
    _require_nonzero(family)
    closed = span_closed_subsets(family)
    ratios = {subset: Fraction(len(subset), dim) for subset, dim in closed.items()}
    subset, ratio = pick_maximizer(ratios, policy)
    logger.debug("maximizer over %d closed sets: %s ratio %s", len(closed), sorted(subset), ratio)
    return subset, ratio


def _split_into_slices(
    base: VectorFamily, local: IndexSet, t: int, k: int, s: int
) -> list[list[int]]:
    """Split ``local`` into k - 1 bases of its span plus one independent s-set."""
    order = sorted(local)
    capacities = [t] * (k - 1) + [s]
    slices: list[list[int]] = [[] for _ in range(k)]
    bases = [EchelonBasis(base.dimension) for _ in range(k)]

    def place(position: int) -> bool:
        if position == len(order):
            return True
        index = order[position]
        vector = base.vector(index)
        tried_empty_full_slice = False
        for slot in range(k):
            if len(slices[slot]) >= capacities[slot]:
                continue
            if not slices[slot] and slot < k - 1:
                # empty full-size slices are interchangeable
                if tried_empty_full_slice:
                    continue
                tried_empty_full_slice = True
            if bases[slot].contains(vector):
                continue
            saved = bases[slot].copy()
            bases[slot].add(vector)
            slices[slot].append(index)
            if place(position + 1):
                return True
            slices[slot].pop()
            bases[slot] = saved
        return False

    if not place(0):
        raise ConstructionError(f"could not split {order} into {k - 1} bases and a {s}-set")
    return slices


def _build_stage(number: int, base: VectorFamily, local: IndexSet) -> Stage:
    vectors = base.vectors(local)
    t = rank(vectors)
    k = math.ceil(len(local) / t)
    s = len(local) - (k - 1) * t
    slices = _split_into_slices(base, local, t, k, s)
    span = base.vectors(slices[0])
    for chosen in slices[1:-1]:
        if not span_equal(span, base.vectors(chosen)):
            raise ConstructionError(f"stage {number}: full slices do not share a span")
    if not span_contains(span, base.vectors(slices[-1])):
        raise ConstructionError(f"stage {number}: last slice leaves the stage span")
    origin = base.origin
    return Stage(
        number=number,
        indices=frozenset(origin[i - 1] for i in local),
        slices=tuple(frozenset(origin[i - 1] for i in chosen) for chosen in slices),
        t=t,
        k=k,
        s=s,
        projected_family=base,
    )


def _local(base: VectorFamily, indices: IndexSet) -> IndexSet:
    return frozenset(i for i in base.indices if base.origin[i - 1] in indices)


def _project_remainder(stage: Stage) -> VectorFamily:
    base = stage.projected_family
    local = _local(base, stage.indices)
    remaining = [i for i in base.indices if i not in local]
    projected = project_complement_many(base.vectors(remaining), base.vectors(local))
    replaced = dict(zip(remaining, projected))
    zeros = [base.origin[i - 1] for i, v in replaced.items() if v.is_zero()]
    if zeros:
        raise ConstructionError(f"stage {stage.number} projected {zeros} to zero")
    return base.restrict(remaining, replaced)


def construct_fundamental(
    family: VectorFamily, *, settings: Settings | None = None
) -> tuple[OrderedPartition, StageTrace]:
    """Build a fundamental partition stage by stage.

    Each stage takes a maximum-ratio subset of the current (projected) family,
    splits it into slices and projects the remaining vectors onto the
    orthogonal complement of its span. Two consecutive stages with the same
    ``k`` are merged into one. Block ``i`` of the result is the union of the
    ``i``-th slices of all stages.

    Raises:
        DegenerateFamilyError: If the family contains zero vectors.
        ConstructionError: If an internal invariant fails.
    """
    policy = (settings or DEFAULT_SETTINGS).construction.maximizer
    _require_nonzero(family)
    stages: list[Stage] = []
    merges: list[MergeEvent] = []
    residual = family
    while residual.size:
        local, _ = max_ratio_subset(residual, policy=policy)
        stage = _build_stage(len(stages) + 1, residual, local)
        logger.debug(
            "stage %d: T=%s t=%d k=%d s=%d",
            stage.number, sorted(stage.indices), stage.t, stage.k, stage.s,
        )
        if stages and stage.k > stages[-1].k:
            raise ConstructionError(f"stage {stage.number} raised k to {stage.k}")
        if stages and stage.k == stages[-1].k:
            previous = stages.pop()
            base = previous.projected_family
            merged = _build_stage(
                previous.number, base, _local(base, previous.indices | stage.indices)
            )
            if merged.k != previous.k:
                raise ConstructionError(f"merging into stage {previous.number} changed k")
            merges.append(
                MergeEvent(
                    stage=previous.number,
                    absorbed=stage.indices,
                    merged=merged.indices,
                    ratio_before=previous.ratio,
                    ratio_after=merged.ratio,
                )
            )
            logger.debug("merged stage %d into %d: T=%s", stage.number, previous.number,
                         sorted(merged.indices))
            stage = merged
        stages.append(stage)
        residual = _project_remainder(stage)

    width = stages[0].k if stages else 0
    blocks = [
        frozenset().union(*(st.slices[i] for st in stages if i < st.k)) for i in range(width)
    ]
    partition = OrderedPartition.canonical(blocks) if blocks else OrderedPartition(())
    report = validate_ordered(family, partition)
    if not report.is_valid:
        raise ConstructionError(
            "assembled partition is invalid: " + "; ".join(i.detail for i in report.issues)
        )
    logger.info("fundamental profile %s in %d stage(s)", partition.profile().as_list(), len(stages))
    return partition, StageTrace(stages=tuple(stages), merges=tuple(merges))


def _certificate_check(family: VectorFamily, partition: OrderedPartition) -> FundamentalCheck:
    blocks = partition.blocks
    for j in range(1, len(blocks)):
        anchors = frozenset().union(*blocks[j:])
        try:
            transversal = merged_transversal(family, partition, j, anchors)
        except TransversalError as exc:
            return FundamentalCheck(False, "certificate", str(exc))
        if not check_transversal(family, transversal):
            return FundamentalCheck(
                False, "certificate", f"merged {j}-transversal is not a transversal"
            )
        if not span_contains(
            family.vectors(transversal.slices[0]), family.vectors(blocks[j])
        ):
            return FundamentalCheck(
                False, "certificate", f"block {j + 1} leaves the span of the {j}-transversal"
            )
    return FundamentalCheck(True, "certificate")


def check_fundamental(
    family: VectorFamily, partition: OrderedPartition, *, settings: Settings | None = None
) -> FundamentalCheck:
    """Decide whether ``partition`` is a fundamental partition of ``family``.

    Small families are compared against every ordered independent partition.
    Larger ones use transversal certificates: for each ``j`` the merged
    j-transversal through all later blocks must span block ``j + 1``. That
    condition is both necessary and sufficient.
    """
    settings = settings or DEFAULT_SETTINGS
    report = validate_ordered(family, partition)
    if not report.is_valid:
        return FundamentalCheck(False, "validation", "; ".join(i.detail for i in report.issues))
    threshold = settings.construction.fundamental_oracle_threshold
    if family.size > threshold:
        return _certificate_check(family, partition)

    from radohorn.oracle import Oracle

    budget = OracleBudget(
        max_family_size=max(threshold, settings.oracle.max_family_size),
        max_subset_scan=settings.oracle.max_subset_scan,
    )
    profile = partition.profile()
    for other in Oracle(family, budget).enumerate_independent_partitions():
        if not majorizes(profile, other.profile()):
            return FundamentalCheck(
                False, "oracle", f"does not majorize {other.profile().as_list()} ({other})"
            )
    return FundamentalCheck(True, "oracle")


def is_fundamental(
    family: VectorFamily, partition: OrderedPartition, *, settings: Settings | None = None
) -> bool:
    """True iff ``partition`` majorizes every ordered independent partition."""
    try:
        return check_fundamental(family, partition, settings=settings).is_fundamental
    except (PartitionError, DegenerateFamilyError):
        return False
