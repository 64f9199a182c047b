#!/usr/bin/env python3
"""Basic usage examples for radohorn."""

from radohorn import (
    DegenerateFamilyError,
    RationalVector,
    VectorFamily,
    construct_fundamental,
    generalized_check,
    partition_into_k,
    redundant_witness,
    render_young,
)


def main() -> None:
    """Run basic usage examples."""
    # Example 1: a fundamental partition
    print("=== Example 1: Fundamental Partition ===")
    family = VectorFamily.from_vectors(
        [
            RationalVector.of(1, 0, 0),
            RationalVector.of(0, 1, 0),
            RationalVector.of(1, 1, 0),
            RationalVector.of(0, 0, 1),
        ]
    )
    partition, trace = construct_fundamental(family)
    print(f"partition: {partition}")
    for stage in trace.stages:
        print(f"  stage {stage.number}: {sorted(stage.indices)} t={stage.t} k={stage.k} s={stage.s}")
    print(render_young(partition.profile(), trace.annotations(partition)))
    print()

    # Example 2: deciding k and reading the certificate
    print("=== Example 2: Rado-Horn Certificate ===")
    collinear = VectorFamily.from_vectors(
        [RationalVector.of(1, 0), RationalVector.of("1/2", 0), RationalVector.of(-3, 0)]
    )
    for k in (2, 3):
        certificate = partition_into_k(collinear, k)
        print(f"k={k}: {certificate.verdict.value}", end="")
        if not certificate.satisfiable:
            print(f", witness {sorted(certificate.witness_subset or ())} ratio {certificate.ratio}")
        else:
            print(f", partition {certificate.partition}")
    print()

    # Example 3: the subspace witness
    print("=== Example 3: Subspace Witness ===")
    witness = redundant_witness(collinear, 2)
    print(f"basis: {[str(v) for v in witness.subspace_basis]}")
    print(f"slices: {[sorted(s) for s in witness.slices]}")
    print(f"conditions: {witness.conditions}")
    print()

    # Example 4: removing vectors first
    print("=== Example 4: Removals ===")
    for removals in (1, 2):
        report = generalized_check(collinear, 1, removals)
        print(f"L={removals}: {report.verdict.value} {sorted(report.removed or report.witness or ())}")
    print()

    # Example 5: zero vectors
    print("=== Example 5: Degenerate Families ===")
    try:
        construct_fundamental(VectorFamily.from_vectors([RationalVector.of(0, 0)]))
    except DegenerateFamilyError as e:
        print(f"refused: {e}")


if __name__ == "__main__":
    main()
