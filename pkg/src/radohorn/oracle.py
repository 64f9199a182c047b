"""Brute-force ground truth for small families.

Everything here enumerates. Budgets from :class:`~radohorn.config.OracleBudget`
bound the family size and exceeding them raises
:class:`~radohorn.exceptions.BudgetExceededError`; nothing is truncated.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable, Iterator
from fractions import Fraction

from radohorn.config import DEFAULT_SETTINGS, MaximizerPolicy, OracleBudget
from radohorn.exact_linalg import rank
from radohorn.exceptions import ArgumentError, BudgetExceededError, DegenerateFamilyError
from radohorn.family_partition import IndexSet, OrderedPartition, VectorFamily
from radohorn.fundamental import pick_maximizer

logger = logging.getLogger(__name__)


class Oracle:
    """Exhaustive searches over one family, with ranks memoized by bitmask.

    Bit ``i - 1`` of a mask stands for family index ``i``.
    """

    def __init__(self, family: VectorFamily, budget: OracleBudget | None = None) -> None:
        self.family = family
        self.budget = budget or DEFAULT_SETTINGS.oracle
        self._ranks: dict[int, int] = {0: 0}
        zeros = [entry.index for entry in family if entry.vector.is_zero()]
        if zeros:
            raise DegenerateFamilyError(zeros)

    @property
    def full_mask(self) -> int:
        return (1 << self.family.size) - 1

    @staticmethod
    def mask_of(indices: Iterable[int]) -> int:
        mask = 0
        for index in indices:
            mask |= 1 << (index - 1)
        return mask

    @staticmethod
    def indices_of(mask: int) -> IndexSet:
        return frozenset(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)

    def rank_of(self, mask: int) -> int:
        """Dimension of the span of the vectors selected by ``mask``."""
        cached = self._ranks.get(mask)
        if cached is None:
            cached = rank(self.family.vectors(self.indices_of(mask)))
            self._ranks[mask] = cached
        return cached

    def is_independent(self, mask: int) -> bool:
        return self.rank_of(mask) == mask.bit_count()

    def _check_partition_budget(self, what: str) -> None:
        if self.family.size > self.budget.max_family_size:
            raise BudgetExceededError(what, self.family.size, self.budget.max_family_size)

    def _blocks(self) -> Iterator[list[int]]:
        # Restricted growth strings: element i joins an existing block or opens
        # the next one. Independence is hereditary, so pruning loses nothing.
        size = self.family.size
        blocks: list[int] = []

        def extend(element: int) -> Iterator[list[int]]:
            if element == size:
                yield list(blocks)
                return
            bit = 1 << element
            for position in range(len(blocks)):
                grown = blocks[position] | bit
                if self.is_independent(grown):
                    blocks[position] = grown
                    yield from extend(element + 1)
                    blocks[position] ^= bit
            blocks.append(bit)
            yield from extend(element + 1)
            blocks.pop()

        return extend(0)

    def enumerate_independent_partitions(self) -> Iterator[OrderedPartition]:
        """Every set partition into independent blocks, in canonical order."""
        self._check_partition_budget("enumerate_independent_partitions")
        for masks in self._blocks():
            yield OrderedPartition.canonical(self.indices_of(m) for m in masks)

    def count_independent_partitions(self) -> int:
        self._check_partition_budget("count_independent_partitions")
        return sum(1 for _ in self._blocks())

    def fundamental(self) -> OrderedPartition:
        """Lexicographically largest profile; ties go to the smallest index lists."""
        best: OrderedPartition | None = None
        best_key: tuple[tuple[int, ...], tuple[tuple[int, ...], ...]] | None = None
        count = 0
        for partition in self.enumerate_independent_partitions():
            count += 1
            sizes = tuple(-len(b) for b in partition)
            key = (sizes, tuple(tuple(sorted(b)) for b in partition))
            if best_key is None or key < best_key:
                best, best_key = partition, key
        logger.debug("oracle scanned %d independent partitions", count)
        if best is None:
            return OrderedPartition(())
        return best

    def min_parts(self) -> int:
        return len(self.fundamental())

    def max_ratio(self, policy: MaximizerPolicy = "largest") -> tuple[IndexSet, Fraction]:
        """Scan all nonempty subsets for the largest ``|J| / dim span(J)``."""
        if self.family.size > self.budget.max_subset_scan:
            raise BudgetExceededError(
                "max_ratio", self.family.size, self.budget.max_subset_scan
            )
        if self.family.size == 0:
            raise ArgumentError("max_ratio needs a nonempty family")
        best = Fraction(0)
        tied: list[int] = []
        for mask in range(1, self.full_mask + 1):
            ratio = Fraction(mask.bit_count(), self.rank_of(mask))
            if ratio > best:
                best, tied = ratio, [mask]
            elif ratio == best:
                tied.append(mask)
        return pick_maximizer({self.indices_of(m): best for m in tied}, policy)

    def fits_into(self, mask: int, k: int) -> bool:
        """True iff the vectors of ``mask`` split into at most ``k`` independent sets."""
        elements = [i for i in range(self.family.size) if mask >> i & 1]
        blocks = [0] * k

        def place(position: int) -> bool:
            if position == len(elements):
                return True
            bit = 1 << elements[position]
            opened_empty = False
            for slot in range(k):
                if not blocks[slot]:
                    if opened_empty:
                        continue
                    opened_empty = True
                grown = blocks[slot] | bit
                if self.is_independent(grown):
                    blocks[slot] = grown
                    if place(position + 1):
                        return True
                    blocks[slot] ^= bit
            return False

        return place(0)

    def max_disjoint_spanning_sets(self) -> int:
        """Largest number of pairwise disjoint subsets that each span the whole family."""
        self._check_partition_budget("max_disjoint_spanning_sets")
        full_rank = self.rank_of(self.full_mask)
        if full_rank == 0:
            return 0
        bases = [
            self.mask_of(combo)
            for combo in itertools.combinations(self.family.indices, full_rank)
            if self.rank_of(self.mask_of(combo)) == full_rank
        ]

        def best_from(start: int, used: int) -> int:
            best = 0
            for position in range(start, len(bases)):
                if bases[position] & used:
                    continue
                best = max(best, 1 + best_from(position + 1, used | bases[position]))
            return best

        return best_from(0, 0)

    def removal_feasible(self, k: int, removals: int) -> IndexSet | None:
        """First H of size ``removals`` (lexicographic) leaving a k-partitionable rest."""
        self._check_partition_budget("removal_feasible")
        if not 0 <= removals <= self.family.size:
            raise ArgumentError(f"L must be in 0..{self.family.size}, got {removals}")
        for combo in itertools.combinations(self.family.indices, removals):
            rest = self.full_mask & ~self.mask_of(combo)
            if self.fits_into(rest, k):
                return frozenset(combo)
        return None


def enumerate_independent_partitions(
    family: VectorFamily, budget: OracleBudget | None = None
) -> Iterator[OrderedPartition]:
    """Yield every partition of the family into independent blocks."""
    return Oracle(family, budget).enumerate_independent_partitions()


def oracle_fundamental(
    family: VectorFamily, budget: OracleBudget | None = None
) -> OrderedPartition:
    return Oracle(family, budget).fundamental()


def oracle_max_ratio(
    family: VectorFamily,
    budget: OracleBudget | None = None,
    *,
    policy: MaximizerPolicy = "largest",
) -> tuple[IndexSet, Fraction]:
    return Oracle(family, budget).max_ratio(policy)


def oracle_min_parts(family: VectorFamily, budget: OracleBudget | None = None) -> int:
    """Least k such that the family splits into k independent sets."""
    return Oracle(family, budget).min_parts()


def oracle_max_disjoint_spanning_sets(
    family: VectorFamily, budget: OracleBudget | None = None
) -> int:
    return Oracle(family, budget).max_disjoint_spanning_sets()


def oracle_removal_feasible(
    family: VectorFamily, k: int, removals: int, budget: OracleBudget | None = None
) -> IndexSet | None:
    return Oracle(family, budget).removal_feasible(k, removals)
