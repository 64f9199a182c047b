"""Vector families, ordered partitions, majorization and the exchange move.

Partitions store 1-based indices into a :class:`VectorFamily`, never copies of
vectors, so every span question goes back to the family.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum

from radohorn import young
from radohorn.exact_linalg import (
    RationalVector,
    common_dimension,
    expansion_coefficients,
    in_span,
    is_independent,
    span_contains,
)
from radohorn.exceptions import (
    DependentSetError,
    DimensionMismatchError,
    ExchangeError,
    NotInSpanError,
    PartitionError,
)

logger = logging.getLogger(__name__)

IndexSet = frozenset[int]


@dataclass(frozen=True)
class FamilyEntry:
    """One member of a family: its 1-based index, label and vector."""

    index: int
    label: str
    vector: RationalVector


@dataclass(frozen=True)
class VectorFamily:
    """An indexed family of vectors ``phi_1 .. phi_M`` of one dimension.

    ``origin`` maps local indices back to the indices of the family this one
    was restricted or projected from; for a root family it is ``1..M``.
    """

    dimension: int
    entries: tuple[FamilyEntry, ...]
    origin: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise ValueError("family dimension must be positive")
        for position, entry in enumerate(self.entries, start=1):
            if entry.index != position:
                raise ValueError(
                    f"family indices must be exactly 1..M; found {entry.index} "
                    f"at position {position}"
                )
        for entry in self.entries:
            if entry.vector.dimension != self.dimension:
                raise DimensionMismatchError(self.dimension, entry.vector.dimension)
        if not self.origin:
            object.__setattr__(self, "origin", tuple(range(1, len(self.entries) + 1)))
        elif len(self.origin) != len(self.entries):
            raise ValueError("origin must name one source index per entry")

    @classmethod
    def from_vectors(
        cls,
        vectors: Sequence[RationalVector],
        labels: Sequence[str] | None = None,
        *,
        dimension: int | None = None,
    ) -> VectorFamily:
        """Build a family; labels default to ``phi1``, ``phi2``, ..."""
        if labels is not None and len(labels) != len(vectors):
            raise ValueError("labels and vectors must have the same length")
        if dimension is None:
            inferred = common_dimension(vectors)
            if inferred is None:
                raise ValueError("dimension is required for an empty family")
            dimension = inferred
        names = list(labels) if labels is not None else [f"phi{i}" for i in range(1, len(vectors) + 1)]
        entries = tuple(
            FamilyEntry(index=i, label=name, vector=v)
            for i, (name, v) in enumerate(zip(names, vectors), start=1)
        )
        return cls(dimension=dimension, entries=entries)

    @property
    def size(self) -> int:
        """M, the number of vectors."""
        return len(self.entries)

    @property
    def indices(self) -> range:
        return range(1, self.size + 1)

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[FamilyEntry]:
        return iter(self.entries)

    def vector(self, index: int) -> RationalVector:
        self._check_index(index)
        return self.entries[index - 1].vector

    def vectors(self, indices: Iterable[int]) -> list[RationalVector]:
        """Vectors for ``indices`` in ascending index order."""
        return [self.vector(i) for i in sorted(indices)]

    def label(self, index: int) -> str:
        self._check_index(index)
        return self.entries[index - 1].label

    def labels(self, indices: Iterable[int]) -> list[str]:
        return [self.label(i) for i in sorted(indices)]

    def index_of(self, label: str) -> int:
        for entry in self.entries:
            if entry.label == label:
                return entry.index
        raise KeyError(label)

    def restrict(
        self,
        indices: Iterable[int],
        vectors: Mapping[int, RationalVector] | None = None,
    ) -> VectorFamily:
        """Sub-family on ``indices``, reindexed to ``1..m``.

        ``vectors`` optionally replaces the vectors (used for projected
        families); labels and origin indices are carried over.
        """
        chosen = sorted(indices)
        entries = tuple(
            FamilyEntry(
                index=local,
                label=self.label(i),
                vector=(vectors[i] if vectors is not None else self.vector(i)),
            )
            for local, i in enumerate(chosen, start=1)
        )
        return VectorFamily(
            dimension=self.dimension,
            entries=entries,
            origin=tuple(self.origin[i - 1] for i in chosen),
        )

    def _check_index(self, index: int) -> None:
        if not 1 <= index <= self.size:
            raise IndexError(f"index {index} outside 1..{self.size}")


@dataclass(frozen=True)
class PartitionProfile:
    """Block sizes of an ordered partition, largest first."""

    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sizes", tuple(self.sizes))
        if any(s < 1 for s in self.sizes):
            raise ValueError(f"profile {list(self.sizes)} has a part smaller than 1")
        if any(a < b for a, b in itertools.pairwise(self.sizes)):
            raise ValueError(f"profile {list(self.sizes)} is not non-increasing")

    @classmethod
    def of(cls, *sizes: int) -> PartitionProfile:
        return cls(tuple(sizes))

    @property
    def total(self) -> int:
        return sum(self.sizes)

    def __len__(self) -> int:
        return len(self.sizes)

    def prefix_sums(self, length: int | None = None) -> list[int]:
        """Prefix sums, padded with the total up to ``length`` entries."""
        sums = list(itertools.accumulate(self.sizes))
        if length is not None and length > len(sums):
            sums.extend([self.total] * (length - len(sums)))
        return sums

    def as_list(self) -> list[int]:
        return list(self.sizes)


def _block_key(block: IndexSet) -> tuple[int, int]:
    return (-len(block), min(block) if block else 0)


@dataclass(frozen=True)
class OrderedPartition:
    """A list of index blocks.

    The type itself does not insist on being valid; :func:`validate_ordered`
    reports what is wrong. :meth:`canonical` builds the normalized form used by
    every constructor in the package: sizes non-increasing, equal sizes
    ordered by their smallest index.
    """

    blocks: tuple[IndexSet, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "blocks", tuple(frozenset(b) for b in self.blocks))

    @classmethod
    def canonical(cls, blocks: Iterable[Iterable[int]]) -> OrderedPartition:
        frozen = [frozenset(b) for b in blocks]
        if any(not b for b in frozen):
            raise PartitionError("ordered partitions may not contain empty blocks")
        return cls(tuple(sorted(frozen, key=_block_key)))

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[IndexSet]:
        return iter(self.blocks)

    def __getitem__(self, position: int) -> IndexSet:
        return self.blocks[position]

    def profile(self) -> PartitionProfile:
        return PartitionProfile(tuple(len(b) for b in self.blocks))

    def block_of(self, index: int) -> int:
        """1-based position of the block holding ``index``."""
        for position, block in enumerate(self.blocks, start=1):
            if index in block:
                return position
        raise KeyError(index)

    def members(self) -> frozenset[int]:
        return frozenset().union(*self.blocks) if self.blocks else frozenset()

    def as_lists(self) -> list[list[int]]:
        return [sorted(b) for b in self.blocks]

    def __str__(self) -> str:
        return "[" + ", ".join("{" + ",".join(map(str, sorted(b))) + "}" for b in self.blocks) + "]"


class IssueKind(str, Enum):
    """What a validation issue is about."""

    OVERLAP = "overlap"
    MISSING = "missing"
    UNKNOWN_INDEX = "unknown_index"
    EMPTY_BLOCK = "empty_block"
    SIZE_ORDER = "size_order"
    DEPENDENT = "dependent"


@dataclass(frozen=True)
class Issue:
    """A single validation failure; ``block`` is the 1-based block position."""

    kind: IssueKind
    block: int | None
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of :func:`validate_ordered`."""

    issues: tuple[Issue, ...]
    independent_blocks: tuple[bool, ...]

    @property
    def is_valid(self) -> bool:
        return not self.issues

    def kinds(self) -> set[IssueKind]:
        return {issue.kind for issue in self.issues}


def validate_ordered(family: VectorFamily, partition: OrderedPartition) -> ValidationReport:
    """Check disjointness, coverage, size order and per-block independence."""
    issues: list[Issue] = []
    seen: dict[int, int] = {}
    universe = set(family.indices)
    independent: list[bool] = []

    for position, block in enumerate(partition.blocks, start=1):
        if not block:
            issues.append(Issue(IssueKind.EMPTY_BLOCK, position, "block is empty"))
        for index in sorted(block):
            if index not in universe:
                issues.append(
                    Issue(IssueKind.UNKNOWN_INDEX, position, f"index {index} is not in the family")
                )
            elif index in seen:
                issues.append(
                    Issue(
                        IssueKind.OVERLAP,
                        position,
                        f"index {index} also appears in block {seen[index]}",
                    )
                )
            else:
                seen[index] = position
        known = [i for i in block if i in universe]
        block_ok = is_independent(family.vectors(known))
        independent.append(block_ok)
        if not block_ok:
            issues.append(Issue(IssueKind.DEPENDENT, position, "block is linearly dependent"))

    for position in range(1, len(partition.blocks)):
        before, after = len(partition.blocks[position - 1]), len(partition.blocks[position])
        if before < after:
            issues.append(
                Issue(
                    IssueKind.SIZE_ORDER,
                    position + 1,
                    f"block {position + 1} has {after} elements, more than the {before} before it",
                )
            )

    missing = sorted(universe - set(seen))
    if missing:
        issues.append(
            Issue(IssueKind.MISSING, None, "indices not covered: " + ", ".join(map(str, missing)))
        )
    return ValidationReport(issues=tuple(issues), independent_blocks=tuple(independent))


def require_ordered(family: VectorFamily, partition: OrderedPartition) -> None:
    """Raise :class:`PartitionError` unless ``partition`` is ordered and independent."""
    report = validate_ordered(family, partition)
    if not report.is_valid:
        details = "; ".join(issue.detail for issue in report.issues)
        raise PartitionError(f"not an ordered independent partition: {details}", report)


def majorizes(p: PartitionProfile, q: PartitionProfile) -> bool:
    """True iff ``p`` majorizes ``q``.

    Both profiles are padded with zeros to a common length. With equal totals
    this also forces ``len(p) <= len(q)``.

    Raises:
        ValueError: If the totals differ.
    """
    if p.total != q.total:
        raise ValueError(f"profiles have different totals: {p.total} and {q.total}")
    length = max(len(p), len(q))
    return all(a >= b for a, b in zip(p.prefix_sums(length), q.prefix_sums(length)))


def exchange(
    family: VectorFamily, block: Iterable[int], incoming: int, pivot: int
) -> IndexSet:
    """Swap ``pivot`` out of ``block`` for ``incoming``.

    The result is independent and spans the same subspace as ``block``
    whenever ``pivot`` has a nonzero coefficient in the expansion of
    ``incoming`` over the block.

    Raises:
        ExchangeError: If ``incoming`` is already in the block, ``pivot`` is not
            in it, or the pivot coefficient is zero.
        DependentSetError: If the block is dependent.
        NotInSpanError: If ``incoming`` lies outside the block's span.
    """
    members = sorted(set(block))
    if incoming in members:
        raise ExchangeError(f"index {incoming} is already in the block")
    if pivot not in members:
        raise ExchangeError(f"pivot {pivot} is not in the block")
    basis = family.vectors(members)
    if not is_independent(basis):
        raise DependentSetError("exchange requires an independent block")
    target = family.vector(incoming)
    if not in_span(target, basis):
        raise NotInSpanError(f"index {incoming} is outside the span of the block")
    coefficients = expansion_coefficients(target, basis)
    if coefficients[members.index(pivot) + 1] == 0:
        raise ExchangeError(f"pivot {pivot} has a zero expansion coefficient")
    logger.debug("exchange: %s in, %s out of %s", incoming, pivot, members)
    return frozenset(members) - {pivot} | {incoming}


def check_span_nesting(family: VectorFamily, partition: OrderedPartition) -> bool:
    """True iff span(F_j) is contained in span(F_i) whenever i <= j."""
    spans = [family.vectors(b) for b in partition.blocks]
    return all(
        span_contains(spans[i], spans[i + 1]) for i in range(len(spans) - 1)
    )


def render_young(
    profile: PartitionProfile,
    annotations: Mapping[tuple[int, int], str] | None = None,
    *,
    ascii_only: bool = False,
) -> str:
    """ASCII (or box-drawing) Young diagram of a profile, one row per block."""
    return young.draw(profile.sizes, annotations, ascii_only=ascii_only)
