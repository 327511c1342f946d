"""symdec: decomposition-matrix columns for symmetric groups in odd
characteristic, with the supporting p-core combinatorics, character theory,
signed-matching fixed-point counts, and an exact F_p Specht/Meataxe oracle.
"""

__version__ = "0.1.0"

from .partitions import (
    CoreAndWeight,
    Partition,
    add_rim_hook_all,
    conjugate,
    dominates,
    format_partition,
    is_p_regular,
    odd_parts_count,
    p_core,
    parse_partition,
    partitions_of,
)
from .blocks import (
    BlockLabel,
    CandidateSet,
    DecompositionColumn,
    DominanceComponent,
    WeightResult,
    candidate_set,
    dominance_components,
    partitions_with_core_and_weight,
    synthesize_columns,
    tail_core_sweep,
    weight_condition_holds,
    weight_k,
)
from .errors import (
    HypothesisViolation,
    MeataxeCapError,
    OracleMismatch,
    SearchCapExceeded,
)

__all__ = [
    "CoreAndWeight",
    "Partition",
    "add_rim_hook_all",
    "conjugate",
    "dominates",
    "format_partition",
    "is_p_regular",
    "odd_parts_count",
    "p_core",
    "parse_partition",
    "partitions_of",
    "BlockLabel",
    "CandidateSet",
    "DecompositionColumn",
    "DominanceComponent",
    "WeightResult",
    "candidate_set",
    "dominance_components",
    "partitions_with_core_and_weight",
    "synthesize_columns",
    "tail_core_sweep",
    "weight_condition_holds",
    "weight_k",
    "HypothesisViolation",
    "MeataxeCapError",
    "OracleMismatch",
    "SearchCapExceeded",
]
