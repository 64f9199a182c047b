"""Tests for the k-partition decision, its certificates and the removal variant."""

from fractions import Fraction

import pytest

from radohorn import (
    ConstructionSettings,
    DegenerateFamilyError,
    NoWitnessError,
    RemovalVerdict,
    Settings,
    SpanningSummary,
    Verdict,
    VectorFamily,
    check_inequality,
    generalized_check,
    partition_into_k,
    redundant_witness,
    removal_satisfies_inequality,
    screen_zero_vectors,
    spanning_summary,
)
from tests.helpers import family_of


class TestScreening:
    """Zero vectors are screened before any construction."""

    def test_screen(self):
        """Zero vectors are listed by index."""
        screen = screen_zero_vectors(family_of((0, 0), (1, 0), (0, 0)))
        assert screen.zero_indices == (1, 3)
        assert not screen.clean

    def test_clean(self, fam_a):
        """A family of nonzero vectors passes."""
        assert screen_zero_vectors(fam_a).clean

    def test_partition_refuses_zero_vectors(self):
        """Degenerate families never reach the construction."""
        with pytest.raises(DegenerateFamilyError) as exc_info:
            partition_into_k(family_of((1, 0), (0, 0)), 2)
        assert exc_info.value.zero_indices == (2,)


class TestCheckInequality:
    """|J| <= k dim span(J) over every subset."""

    def test_violated_with_densest_witness(self, fam_a):
        """Three vectors in a plane break k=1."""
        result = check_inequality(fam_a, 1)
        assert result.verdict is Verdict.VIOLATED
        assert result.witness_subset == frozenset({1, 2, 3})
        assert result.ratio == Fraction(3, 2)
        assert result.fail_decomposition() is None

    def test_satisfiable(self, fam_a):
        """k=2 is enough."""
        result = check_inequality(fam_a, 2)
        assert result.satisfiable
        assert result.ratio == Fraction(3, 2)

    def test_empty_family(self):
        """Nothing to violate."""
        assert check_inequality(VectorFamily.from_vectors([], dimension=2), 1).satisfiable

    def test_k_must_be_positive(self, fam_a):
        """k counts independent sets."""
        with pytest.raises(ValueError, match="k must be a positive integer, got 0"):
            check_inequality(fam_a, 0)


class TestPartitionIntoK:
    """The constructive decision and its transversal witness."""

    def test_feasible_returns_the_partition(self, fam_a):
        """Two blocks suffice for k=2."""
        result = partition_into_k(fam_a, 2)
        assert result.satisfiable
        assert result.partition.as_lists() == [[1, 2], [3]]
        assert result.witness_subset is None

    def test_fam_a_k1_witness(self, fam_a):
        """Witness ratio 3/2 = 1 + 1/2."""
        result = partition_into_k(fam_a, 1)
        assert result.verdict is Verdict.VIOLATED
        assert result.anchor == 3
        assert result.transversal.as_lists() == [[1, 2]]
        assert result.witness_subset == frozenset({1, 2, 3})
        assert result.ratio == Fraction(3, 2)
        assert result.transversal_dim == 2
        assert result.fail_decomposition() == (1, Fraction(1, 2))

    def test_fam_b_k2_witness(self, fam_b):
        """Witness ratio 3 = 2 + 1/1."""
        result = partition_into_k(fam_b, 2)
        assert not result.satisfiable
        assert result.transversal.as_lists() == [[1], [2]]
        assert result.ratio == Fraction(3)
        assert result.fail_decomposition() == (2, Fraction(1))

    def test_agrees_with_inequality(self, fam_c, fam_d):
        """Both deciders give the same verdict."""
        for family in (fam_c, fam_d):
            for k in (1, 2, 3):
                assert partition_into_k(family, k).verdict is check_inequality(family, k).verdict


class TestGeneralizedCheck:
    """Removing L vectors before partitioning."""

    def test_feasible_removes_the_tail(self, fam_b):
        """With k=1 the two later blocks go."""
        report = generalized_check(fam_b, 1, 2)
        assert report.verdict is RemovalVerdict.FEASIBLE
        assert report.removed == frozenset({2, 3})

    def test_feasible_tops_up_from_earlier_blocks(self, fam_c):
        """Spare removals are taken from block k downwards, highest index first."""
        report = generalized_check(fam_c, 1, 2)
        assert report.feasible
        assert report.removed == frozenset({3, 4})

    def test_infeasible_witness(self, fam_b, fam_a):
        """(|J| - L) / dim span(J) exceeds k."""
        report = generalized_check(fam_b, 1, 1)
        assert report.verdict is RemovalVerdict.INFEASIBLE
        assert report.witness == frozenset({1, 2, 3})
        assert report.ratio == Fraction(2)
        report = generalized_check(fam_a, 1, 0)
        assert report.witness == frozenset({1, 2, 3})
        assert report.ratio == Fraction(3, 2)

    def test_removal_range(self, fam_b):
        """L lies in 0..M."""
        with pytest.raises(ValueError, match=r"L must be in 0\.\.3, got 4"):
            generalized_check(fam_b, 1, 4)

    def test_removed_set_satisfies_inequality(self, fam_b):
        """The enumerated inequality agrees with the feasible removal."""
        assert removal_satisfies_inequality(fam_b, 1, {2, 3})
        assert not removal_satisfies_inequality(fam_b, 1, {3})


class TestRedundantWitness:
    """Subspace witnesses for infeasible k."""

    def test_fam_a(self, fam_a):
        """The whole plane, with all three vectors in one slice."""
        witness = redundant_witness(fam_a, 1)
        assert witness.partition == (frozenset({1, 2, 3}),)
        assert witness.transversal == (frozenset({1, 2}),)
        assert witness.slices == (frozenset({1, 2, 3}),)
        assert witness.saturated_set == frozenset({1, 2, 3})
        assert witness.dimension == 2
        assert witness.ratio == Fraction(3, 2)
        assert witness.conditions == (True, True, True)
        assert witness.merged

    def test_fam_b_k2(self, fam_b):
        """The last slice absorbs the tail of the partition."""
        witness = redundant_witness(fam_b, 2)
        assert witness.partition == (frozenset({1}), frozenset({2, 3}))
        assert witness.transversal == (frozenset({1}), frozenset({2}))
        assert witness.slices == (frozenset({1}), frozenset({2, 3}))
        assert [str(v) for v in witness.subspace_basis] == ["(1, 0)"]
        assert witness.ratio == Fraction(3)
        assert all(witness.conditions)

    def test_single_anchor_leaves_a_dependent_remainder(self, fam_b):
        """Without merging, {2,3} stays outside the slice and is dependent."""
        witness = redundant_witness(fam_b, 1, merge=False)
        assert not witness.merged
        assert witness.slices == (frozenset({1}),)
        assert witness.conditions == (True, True, False)

    def test_merge_default_comes_from_settings(self, fam_b):
        """construction.redundant_merge picks the default."""
        settings = Settings(construction=ConstructionSettings(redundant_merge=False))
        assert not redundant_witness(fam_b, 1, settings=settings).merged
        assert redundant_witness(fam_b, 1).merged

    def test_no_witness_for_feasible_k(self, fam_a):
        """Two blocks mean k=2 needs no witness."""
        with pytest.raises(NoWitnessError) as exc_info:
            redundant_witness(fam_a, 2)
        assert "k=2 is feasible" in str(exc_info.value)


class TestSpanningSummary:
    """Total dimension and disjoint spanning sets from the last stage."""

    @pytest.mark.parametrize(
        ("fixture", "expected"),
        [
            ("fam_a", (2, 1)),
            ("fam_b", (1, 3)),
            ("fam_c", (3, 1)),
            ("fam_d", (2, 2)),
            ("basis3", (3, 1)),
        ],
    )
    def test_reference_families(self, request, fixture, expected):
        """Matches the brute-force counts."""
        assert spanning_summary(request.getfixturevalue(fixture)) == SpanningSummary(*expected)

    def test_empty(self):
        """No stages, nothing spans."""
        empty = VectorFamily.from_vectors([], dimension=3)
        assert spanning_summary(empty) == SpanningSummary(0, 0)
