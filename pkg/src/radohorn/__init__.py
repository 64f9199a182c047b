"""Exact Rado-Horn partitioning of finite vector families.

Example:
    >>> from radohorn import RationalVector, VectorFamily, construct_fundamental
    >>> family = VectorFamily.from_vectors(
    ...     [RationalVector.of(1, 0), RationalVector.of(0, 1), RationalVector.of(1, 1)]
    ... )
    >>> partition, trace = construct_fundamental(family)
    >>> partition.profile().as_list()
    [2, 1]
"""

import logging

from radohorn.config import (
    ConstructionSettings,
    OracleBudget,
    Settings,
    load_settings,
)
from radohorn.exact_linalg import (
    EchelonBasis,
    ExpansionCoefficients,
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
from radohorn.exceptions import (
    ArgumentError,
    BudgetExceededError,
    ConfigurationError,
    ConstructionError,
    DegenerateFamilyError,
    DependentSetError,
    DimensionMismatchError,
    ExchangeError,
    FamilyFormatError,
    NoWitnessError,
    NotInSpanError,
    PartitionError,
    RadoHornError,
    TransversalError,
)
from radohorn.family_partition import (
    IndexSet,
    Issue,
    IssueKind,
    OrderedPartition,
    PartitionProfile,
    ValidationReport,
    VectorFamily,
    check_span_nesting,
    exchange,
    majorizes,
    render_young,
    require_ordered,
    validate_ordered,
)
from radohorn.fundamental import (
    ChainState,
    FundamentalCheck,
    MergeEvent,
    Stage,
    StageTrace,
    Transversal,
    build_chain,
    chain_annotations,
    check_fundamental,
    check_transversal,
    construct_fundamental,
    find_transversal,
    is_fundamental,
    max_ratio_subset,
    merge_transversals,
    merged_transversal,
    minimal_support,
    span_closed_subsets,
    transversal_chain,
)
from radohorn.oracle import (
    Oracle,
    enumerate_independent_partitions,
    oracle_fundamental,
    oracle_max_disjoint_spanning_sets,
    oracle_max_ratio,
    oracle_min_parts,
    oracle_removal_feasible,
)
from radohorn.rado_horn import (
    RadoHornCertificate,
    RedundantWitness,
    RemovalReport,
    RemovalVerdict,
    ScreenResult,
    SpanningSummary,
    Verdict,
    check_inequality,
    generalized_check,
    partition_into_k,
    redundant_witness,
    removal_satisfies_inequality,
    require_clean,
    screen_zero_vectors,
    spanning_summary,
)

__version__ = "0.1.0"

logging.getLogger(__name__).addHandler(logging.NullHandler())

__all__ = [
    "ArgumentError",
    "BudgetExceededError",
    "ChainState",
    "ConfigurationError",
    "ConstructionError",
    "ConstructionSettings",
    "DegenerateFamilyError",
    "DependentSetError",
    "DimensionMismatchError",
    "EchelonBasis",
    "ExchangeError",
    "ExpansionCoefficients",
    "FamilyFormatError",
    "FundamentalCheck",
    "IndexSet",
    "Issue",
    "IssueKind",
    "MergeEvent",
    "NoWitnessError",
    "NotInSpanError",
    "Oracle",
    "OracleBudget",
    "OrderedPartition",
    "PartitionError",
    "PartitionProfile",
    "RadoHornCertificate",
    "RadoHornError",
    "RationalVector",
    "RedundantWitness",
    "RemovalReport",
    "RemovalVerdict",
    "ScreenResult",
    "Settings",
    "SpanningSummary",
    "Stage",
    "StageTrace",
    "Transversal",
    "TransversalError",
    "ValidationReport",
    "VectorFamily",
    "Verdict",
    "__version__",
    "build_chain",
    "chain_annotations",
    "check_fundamental",
    "check_inequality",
    "check_span_nesting",
    "check_transversal",
    "construct_fundamental",
    "enumerate_independent_partitions",
    "exchange",
    "expansion_coefficients",
    "find_transversal",
    "format_rational",
    "generalized_check",
    "in_span",
    "independent_subset",
    "is_fundamental",
    "is_independent",
    "load_settings",
    "majorizes",
    "max_ratio_subset",
    "merge_transversals",
    "merged_transversal",
    "minimal_support",
    "oracle_fundamental",
    "oracle_max_disjoint_spanning_sets",
    "oracle_max_ratio",
    "oracle_min_parts",
    "oracle_removal_feasible",
    "orthogonal_basis",
    "partition_into_k",
    "project_complement",
    "rank",
    "redundant_witness",
    "removal_satisfies_inequality",
    "render_young",
    "require_clean",
    "require_ordered",
    "screen_zero_vectors",
    "span_closed_subsets",
    "span_contains",
    "span_equal",
    "spanning_summary",
    "transversal_chain",
    "validate_ordered",
]
