"""Tests for exact rational vectors, rank, spans, expansions and projection."""

from fractions import Fraction

import pytest

from radohorn import (
    DependentSetError,
    DimensionMismatchError,
    EchelonBasis,
    NotInSpanError,
    RationalVector,
    expansion_coefficients,
    format_rational,
    in_span,
    independent_subset,
    is_independent,
    orthogonal_basis,
    project_complement,
    rank,
    span_contains,
    span_equal,
)
from radohorn.exact_linalg import as_rational, project_complement_many
from tests.helpers import vec


class TestRationalVector:
    """Construction, arithmetic and formatting."""

    def test_of_accepts_ints_fractions_and_strings(self):
        """Mixed literals become exact Fractions."""
        v = RationalVector.of(1, Fraction(1, 2), "3/4", "-2")
        assert v.coords == (Fraction(1), Fraction(1, 2), Fraction(3, 4), Fraction(-2))
        assert v.dimension == 4

    def test_rejects_empty_and_booleans(self):
        """A vector needs coordinates, and booleans are not numbers here."""
        with pytest.raises(ValueError, match="at least one coordinate"):
            RationalVector(())
        with pytest.raises(TypeError, match="booleans"):
            as_rational(True)

    def test_arithmetic(self):
        """Addition, subtraction, scaling and negation are exact."""
        a, b = vec(1, "1/3"), vec(2, "2/3")
        assert a + b == vec(3, 1)
        assert b - a == vec(1, "1/3")
        assert a * 3 == vec(3, 1)
        assert 3 * a == vec(3, 1)
        assert -a == vec(-1, "-1/3")
        assert a.dot(b) == Fraction(2) + Fraction(2, 9)

    def test_dimension_mismatch(self):
        """Mixing dimensions raises with both sizes in the message."""
        with pytest.raises(DimensionMismatchError) as exc_info:
            vec(1, 0) + vec(1, 0, 0)
        assert exc_info.value.expected == 2
        assert exc_info.value.actual == 3
        assert isinstance(exc_info.value, ValueError)

    def test_zero_and_str(self):
        """The zero vector and the p/q rendering."""
        assert RationalVector.zero(3).is_zero()
        assert not vec(0, 1).is_zero()
        assert str(vec(1, "3/2")) == "(1, 3/2)"
        assert format_rational(Fraction(6, 4)) == "3/2"
        assert format_rational(Fraction(4, 2)) == "2"


class TestRank:
    """Rank and independence."""

    def test_rank_of_reference_families(self):
        """Ranks of a few small families."""
        assert rank([vec(1, 0), vec(0, 1), vec(1, 1)]) == 2
        assert rank([vec(1, 0), vec(2, 0), vec(3, 0)]) == 1
        assert rank([]) == 0
        assert rank([vec(0, 0)]) == 0

    def test_rank_with_fractions(self):
        """Fractions are cleared without changing the rank."""
        assert rank([vec("1/2", "1/3"), vec(3, 2)]) == 1
        assert rank([vec("1/2", "1/3"), vec(3, "2/7")]) == 2

    def test_rank_needs_no_tolerance(self):
        """A nearly dependent pair is still exactly independent."""
        assert rank([vec(1, 1), vec(1, "1000000001/1000000000")]) == 2

    def test_is_independent(self):
        """The empty list is independent; a zero vector never is."""
        assert is_independent([])
        assert is_independent([vec(1, 0), vec(0, 1)])
        assert not is_independent([vec(1, 0), vec(2, 0)])
        assert not is_independent([vec(0, 0)])

    def test_independent_subset_is_greedy(self):
        """Greedy positions of a maximal independent subset."""
        vectors = [vec(1, 0), vec(2, 0), vec(0, 1), vec(1, 1)]
        assert independent_subset(vectors) == (0, 2)
        assert independent_subset([]) == ()


class TestSpans:
    """Span membership and comparisons."""

    def test_in_span(self):
        """Membership of a vector in a span."""
        assert in_span(vec(1, 1), [vec(1, 0), vec(0, 1)])
        assert not in_span(vec(0, 1), [vec(1, 0), vec(2, 0)])
        assert in_span(vec(0, 0), [])

    def test_span_contains_and_equal(self):
        """Containment is one-directional; equality is mutual."""
        line = [vec(1, 1)]
        plane = [vec(1, 0), vec(0, 1)]
        assert span_contains(plane, line)
        assert not span_contains(line, plane)
        assert span_equal(plane, [vec(1, 1), vec(1, -1)])
        assert not span_equal(plane, line)


class TestExpansion:
    """Expansion coefficients over an independent list."""

    def test_unique_coefficients(self):
        """Coefficients recombine to the vector."""
        basis = [vec(1, 0), vec(1, 1)]
        coefficients = expansion_coefficients(vec(3, 2), basis)
        assert coefficients[1] == 1
        assert coefficients[2] == 2
        assert coefficients.recombine(basis) == vec(3, 2)
        assert coefficients.nonzero() == (1, 2)

    def test_zero_coefficient_is_not_a_pivot(self):
        """Only nonzero positions are reported."""
        coefficients = expansion_coefficients(vec(2, 0), [vec(1, 0), vec(0, 1)])
        assert coefficients.nonzero() == (1,)
        assert coefficients[2] == 0

    def test_errors(self):
        """Dependent lists and out-of-span vectors are rejected."""
        with pytest.raises(DependentSetError, match="independent"):
            expansion_coefficients(vec(1, 0), [vec(1, 0), vec(2, 0)])
        with pytest.raises(NotInSpanError, match="not in the span"):
            expansion_coefficients(vec(0, 1), [vec(1, 0)])


class TestEchelonBasis:
    """Incremental basis maintenance."""

    def test_add_and_contains(self):
        """Dependent vectors are refused and change nothing."""
        basis = EchelonBasis(3)
        assert basis.add(vec(1, 1, 0))
        assert not basis.add(vec(2, 2, 0))
        assert basis.add(vec(0, 1, 0))
        assert len(basis) == 2
        assert basis.contains(vec(1, 0, 0))
        assert not basis.contains(vec(0, 0, 1))

    def test_copy_is_independent(self):
        """Growing a copy leaves the original alone."""
        basis = EchelonBasis(2)
        basis.add(vec(1, 0))
        clone = basis.copy()
        clone.add(vec(0, 1))
        assert len(basis) == 1
        assert not basis.contains(vec(0, 1))
        assert clone.contains(vec(0, 1))


class TestProjection:
    """Orthogonal complement projection."""

    def test_project_onto_complement(self):
        """The projection kills the span and is orthogonal to it."""
        projected = project_complement(vec(1, 2, 3), [vec(1, 0, 0), vec(1, 1, 0)])
        assert projected == vec(0, 0, 3)

    def test_oblique_line(self):
        """Projection against a line that is not a coordinate axis."""
        projected = project_complement(vec(1, 0), [vec(1, 1)])
        assert projected == vec("1/2", "-1/2")
        assert projected.dot(vec(1, 1)) == 0

    def test_in_span_vectors_project_to_zero(self):
        """Vectors of the span vanish."""
        assert project_complement(vec(2, 2), [vec(1, 1)]).is_zero()

    def test_orthogonal_basis_skips_dependent_vectors(self):
        """Gram-Schmidt drops vectors already spanned."""
        ortho = orthogonal_basis([vec(1, 0), vec(2, 0), vec(1, 1)])
        assert ortho == [vec(1, 0), vec(0, 1)]

    def test_many_matches_single(self):
        """Batch projection agrees with one-at-a-time projection."""
        spanning = [vec(1, 1, 0), vec(0, 1, 1)]
        vectors = [vec(1, 0, 0), vec(0, 0, 5), vec(1, 2, 1)]
        assert project_complement_many(vectors, spanning) == [
            project_complement(v, spanning) for v in vectors
        ]
