"""Shared builders and hypothesis strategies for the test suite."""

from __future__ import annotations

from collections.abc import Iterator

from hypothesis import strategies as st

from radohorn import RationalVector, VectorFamily, independent_subset


def vec(*coords: int | str) -> RationalVector:
    return RationalVector.of(*coords)


def family_of(*rows: tuple[int | str, ...]) -> VectorFamily:
    """Family from coordinate tuples; labels default to phi1, phi2, ..."""
    return VectorFamily.from_vectors([vec(*row) for row in rows])


@st.composite
def families(
    draw: st.DrawFn,
    *,
    max_dimension: int = 3,
    min_size: int = 1,
    max_size: int = 7,
    coordinate: int = 2,
) -> VectorFamily:
    """Random families of nonzero vectors with small integer coordinates."""
    dimension = draw(st.integers(min_value=1, max_value=max_dimension))
    rows = draw(
        st.lists(
            st.tuples(*[st.integers(-coordinate, coordinate)] * dimension).filter(
                lambda row: any(row)
            ),
            min_size=min_size,
            max_size=max_size,
        )
    )
    return VectorFamily.from_vectors([vec(*row) for row in rows])


@st.composite
def exchange_setups(
    draw: st.DrawFn, *, max_dimension: int = 4, coordinate: int = 2, coefficient: int = 2
) -> tuple[VectorFamily, list[int], int, list[int]]:
    """An independent block, a vector built from it, and the coefficients used.

    Returns ``(family, block, incoming, coefficients)`` where ``block`` lists
    the basis indices in expansion order. Zero coefficients are allowed, so
    some pivots are illegal.
    """
    dimension = draw(st.integers(min_value=1, max_value=max_dimension))
    candidates = draw(
        st.lists(
            st.tuples(*[st.integers(-coordinate, coordinate)] * dimension).filter(
                lambda row: any(row)
            ),
            min_size=1,
            max_size=dimension,
        )
    )
    vectors = [vec(*row) for row in candidates]
    basis = [vectors[i] for i in independent_subset(vectors)]
    coefficients = draw(
        st.lists(
            st.integers(-coefficient, coefficient),
            min_size=len(basis),
            max_size=len(basis),
        ).filter(any)
    )
    incoming = RationalVector.zero(dimension)
    for c, v in zip(coefficients, basis):
        incoming = incoming + v.scale(c)
    rows = [*basis, incoming]
    order = draw(st.permutations(range(len(rows))))
    family = VectorFamily.from_vectors([rows[i] for i in order])
    position = {original: slot + 1 for slot, original in enumerate(order)}
    return family, [position[i] for i in range(len(basis))], position[len(basis)], coefficients


def set_partitions(items: list[int]) -> Iterator[list[list[int]]]:
    """Every set partition of ``items``."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partial in set_partitions(rest):
        for position in range(len(partial)):
            yield [*partial[:position], [first, *partial[position]], *partial[position + 1 :]]
        yield [[first], *partial]


def integer_partitions(total: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Non-increasing tuples of positive integers summing to ``total``."""
    if total == 0:
        yield ()
        return
    for part in range(min(total, largest or total), 0, -1):
        for tail in integer_partitions(total - part, part):
            yield (part, *tail)
