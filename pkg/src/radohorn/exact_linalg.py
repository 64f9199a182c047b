"""Exact rational linear algebra.

Everything here works over the rationals with arbitrary-precision integers.
There is no tolerance parameter anywhere: two vectors are dependent or they
are not.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from radohorn.exceptions import DependentSetError, DimensionMismatchError, NotInSpanError

RationalScalar = Fraction
"""Scalars are ``fractions.Fraction``; they are always kept in lowest terms."""

RationalLike = int | Fraction | str


def as_rational(value: RationalLike) -> Fraction:
    """Convert an int, Fraction or ``"p/q"`` literal to a Fraction."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rational literals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


def format_rational(value: Fraction) -> str:
    """Render a rational as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class RationalVector:
    """A fixed-dimension vector with exact rational coordinates."""

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        converted = tuple(as_rational(c) for c in self.coords)
        if not converted:
            raise ValueError("a vector needs at least one coordinate")
        object.__setattr__(self, "coords", converted)

    @classmethod
    def of(cls, *values: RationalLike) -> RationalVector:
        """Build a vector from positional coordinates."""
        return cls(tuple(as_rational(v) for v in values))

    @classmethod
    def zero(cls, dimension: int) -> RationalVector:
        """The zero vector of the given dimension."""
        return cls((Fraction(0),) * dimension)

    @property
    def dimension(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def dot(self, other: RationalVector) -> Fraction:
        """Standard inner product."""
        _require_same_dimension(self.dimension, other.dimension)
        return sum((a * b for a, b in zip(self.coords, other.coords)), Fraction(0))

    def scale(self, factor: RationalLike) -> RationalVector:
        f = as_rational(factor)
        return RationalVector(tuple(f * c for c in self.coords))

    def __add__(self, other: RationalVector) -> RationalVector:
        _require_same_dimension(self.dimension, other.dimension)
        return RationalVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: RationalVector) -> RationalVector:
        _require_same_dimension(self.dimension, other.dimension)
        return RationalVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __mul__(self, factor: RationalLike) -> RationalVector:
        return self.scale(factor)

    __rmul__ = __mul__

    def __neg__(self) -> RationalVector:
        return self.scale(-1)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, position: int) -> Fraction:
        return self.coords[position]

    def __str__(self) -> str:
        return "(" + ", ".join(format_rational(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class ExpansionCoefficients:
    """Coefficients ``c_i`` with ``v = sum(c_i * basis[i])``.

    Keys are 1-based positions into the independent list the expansion was
    computed against.
    """

    coefficients: Mapping[int, Fraction] = field(default_factory=dict)

    def __getitem__(self, position: int) -> Fraction:
        return self.coefficients.get(position, Fraction(0))

    def nonzero(self) -> tuple[int, ...]:
        """Positions carrying a nonzero coefficient (the legal exchange pivots)."""
        return tuple(sorted(p for p, c in self.coefficients.items() if c != 0))

    def recombine(self, basis: Sequence[RationalVector]) -> RationalVector:
        """Rebuild the expanded vector from ``basis``."""
        if not basis:
            raise ValueError("cannot recombine over an empty basis")
        total = RationalVector.zero(basis[0].dimension)
        for position, vector in enumerate(basis, start=1):
            total = total + vector.scale(self[position])
        return total


def _require_same_dimension(expected: int, actual: int) -> None:
    if expected != actual:
        raise DimensionMismatchError(expected, actual)


def common_dimension(*groups: Iterable[RationalVector]) -> int | None:
    """Return the shared dimension of all vectors, or None if there are none.

    Raises:
        DimensionMismatchError: If two vectors disagree.
    """
    dimension: int | None = None
    for group in groups:
        for vector in group:
            if dimension is None:
                dimension = vector.dimension
            else:
                _require_same_dimension(dimension, vector.dimension)
    return dimension


def _integer_row(vector: RationalVector) -> list[int]:
    # Scaling a row by a nonzero constant leaves the rank unchanged.
    scale = math.lcm(*(c.denominator for c in vector.coords))
    return [c.numerator * (scale // c.denominator) for c in vector.coords]


def _bareiss_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    if not rows:
        return 0
    width = len(rows[0])
    rank = 0
    previous_pivot = 1
    for col in range(width):
        pivot_row = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            lead = rows[r][col]
            row = rows[r]
            top = rows[rank]
            for c in range(col + 1, width):
                # Sylvester's identity makes this division exact.
                row[c] = (row[c] * pivot - lead * top[c]) // previous_pivot
            row[col] = 0
        previous_pivot = pivot
        rank += 1
        if rank == len(rows):
            break
    return rank


def rank(vectors: Sequence[RationalVector]) -> int:
    """Dimension of the span of ``vectors`` over the rationals.

    Raises:
        DimensionMismatchError: If the vectors do not share one dimension.
    """
    if common_dimension(vectors) is None:
        return 0
    return _bareiss_rank([_integer_row(v) for v in vectors])


def is_independent(vectors: Sequence[RationalVector]) -> bool:
    """True iff the vectors are linearly independent (the empty list is)."""
    return rank(vectors) == len(vectors)


def in_span(vector: RationalVector, basis_candidates: Sequence[RationalVector]) -> bool:
    """True iff ``vector`` lies in the span of ``basis_candidates``."""
    common_dimension([vector], basis_candidates)
    return rank([*basis_candidates, vector]) == rank(basis_candidates)


def span_contains(outer: Sequence[RationalVector], inner: Sequence[RationalVector]) -> bool:
    """True iff span(inner) is a subspace of span(outer)."""
    common_dimension(outer, inner)
    return rank([*outer, *inner]) == rank(outer)


def span_equal(a: Sequence[RationalVector], b: Sequence[RationalVector]) -> bool:
    """True iff ``a`` and ``b`` span the same subspace."""
    common_dimension(a, b)
    rank_a = rank(a)
    return rank_a == rank(b) == rank([*a, *b])


class EchelonBasis:
    """Incrementally maintained row-echelon basis over the rationals.

    Used where many membership tests run against a growing span.
    """

    def __init__(self, dimension: int) -> None:
        self.dimension = dimension
        self._rows: list[tuple[int, list[Fraction]]] = []

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, vector: RationalVector) -> list[Fraction]:
        """Residual of ``vector`` after elimination against the basis."""
        _require_same_dimension(self.dimension, vector.dimension)
        residual = list(vector.coords)
        for pivot_col, row in self._rows:
            factor = residual[pivot_col]
            if factor != 0:
                for c in range(pivot_col, self.dimension):
                    residual[c] -= factor * row[c]
        return residual

    def copy(self) -> EchelonBasis:
        clone = EchelonBasis(self.dimension)
        clone._rows = [(pivot, list(row)) for pivot, row in self._rows]
        return clone

    def contains(self, vector: RationalVector) -> bool:
        return all(c == 0 for c in self.reduce(vector))

    def add(self, vector: RationalVector) -> bool:
        """Add ``vector``; return False (and change nothing) if it is dependent."""
        residual = self.reduce(vector)
        pivot_col = next((c for c, value in enumerate(residual) if value != 0), None)
        if pivot_col is None:
            return False
        lead = residual[pivot_col]
        normalized = [value / lead for value in residual]
        for _, row in self._rows:
            factor = row[pivot_col]
            if factor != 0:
                for c in range(pivot_col, self.dimension):
                    row[c] -= factor * normalized[c]
        self._rows.append((pivot_col, normalized))
        self._rows.sort(key=lambda item: item[0])
        return True


def independent_subset(vectors: Sequence[RationalVector]) -> tuple[int, ...]:
    """Greedy basis extraction: 0-based positions of a maximal independent prefix-greedy subset."""
    dimension = common_dimension(vectors)
    if dimension is None:
        return ()
    basis = EchelonBasis(dimension)
    return tuple(i for i, v in enumerate(vectors) if basis.add(v))


def _solve(columns: Sequence[RationalVector], target: RationalVector) -> list[Fraction]:
    """Solve ``sum(x_j * columns[j]) == target`` for a full-column-rank system."""
    n = len(columns)
    matrix = [
        [columns[j][row] for j in range(n)] + [target[row]] for row in range(target.dimension)
    ]
    pivot_cols: list[int] = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, len(matrix)) if matrix[i][col] != 0), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        lead = matrix[r][col]
        matrix[r] = [value / lead for value in matrix[r]]
        for i, row in enumerate(matrix):
            if i != r and row[col] != 0:
                factor = row[col]
                matrix[i] = [a - factor * b for a, b in zip(row, matrix[r])]
        pivot_cols.append(col)
        r += 1
    solution = [Fraction(0)] * n
    for row_index, col in enumerate(pivot_cols):
        solution[col] = matrix[row_index][n]
    return solution


def expansion_coefficients(
    vector: RationalVector, independent: Sequence[RationalVector]
) -> ExpansionCoefficients:
    """Unique coefficients expressing ``vector`` over an independent list.

    Raises:
        DependentSetError: If ``independent`` is linearly dependent.
        NotInSpanError: If ``vector`` lies outside its span.
    """
    common_dimension([vector], independent)
    if not is_independent(independent):
        raise DependentSetError("expansion requires a linearly independent set")
    if not in_span(vector, independent):
        raise NotInSpanError(f"vector {vector} is not in the span of the given set")
    if not independent:
        return ExpansionCoefficients({})
    solution = _solve(independent, vector)
    return ExpansionCoefficients({i: c for i, c in enumerate(solution, start=1)})


def orthogonal_basis(spanning: Sequence[RationalVector]) -> list[RationalVector]:
    """Exact Gram-Schmidt (unnormalized) over the standard dot product."""
    ortho: list[RationalVector] = []
    for vector in spanning:
        residual = vector
        for u in ortho:
            residual = residual - u.scale(residual.dot(u) / u.dot(u))
        if not residual.is_zero():
            ortho.append(residual)
    return ortho


def project_complement(
    vector: RationalVector, spanning: Sequence[RationalVector]
) -> RationalVector:
    """Return ``(I - P) v`` for ``P`` the orthogonal projection onto span(spanning)."""
    common_dimension([vector], spanning)
    result = vector
    for u in orthogonal_basis(spanning):
        result = result - u.scale(vector.dot(u) / u.dot(u))
    return result


def project_complement_many(
    vectors: Sequence[RationalVector], spanning: Sequence[RationalVector]
) -> list[RationalVector]:
    """:func:`project_complement` for many vectors against one spanning set."""
    common_dimension(vectors, spanning)
    ortho = orthogonal_basis(spanning)
    projected: list[RationalVector] = []
    for vector in vectors:
        result = vector
        for u in ortho:
            result = result - u.scale(vector.dot(u) / u.dot(u))
        projected.append(result)
    return projected
