"""Extended 1-perfect binary codes from local automorphisms.

Build codes from assignment trees of coset representatives, verify them
exhaustively, and evaluate the exact counting formulas the construction
satisfies.
"""

from .analysis import (
    CodeReport,
    analyze,
    distinct,
    kernel,
    kernel_dimension,
    rank,
    rank_deficiency,
    verify_extended_perfect,
    verify_perfect,
)
from .components import (
    AffineSubspace,
    affine_span,
    is_bold,
    is_component,
    is_degenerate,
    is_shifted_component,
)
from .construction import (
    AssignmentTree,
    build_code,
    build_code_array,
    identity_tree,
    puncture,
    sample_tree,
    validate_tree,
)
from .counting import (
    historical_bounds,
    la_code_count,
    la_code_count_upper,
    log2_int,
    nonequivalence_bounds,
)
from .isometries import (
    CosetRep,
    Isometry,
    coset_count,
    enumerate_reps,
    factor,
    in_neighborhood_stabilizer,
    in_partition_stabilizer,
    realize,
    sample_rep,
)
from .scaffold import hamming_code, seed_words

__version__ = "0.1.0"

__all__ = [
    "AffineSubspace",
    "AssignmentTree",
    "CodeReport",
    "CosetRep",
    "Isometry",
    "affine_span",
    "analyze",
    "build_code",
    "build_code_array",
    "coset_count",
    "distinct",
    "enumerate_reps",
    "factor",
    "hamming_code",
    "historical_bounds",
    "identity_tree",
    "in_neighborhood_stabilizer",
    "in_partition_stabilizer",
    "is_bold",
    "is_component",
    "is_degenerate",
    "is_shifted_component",
    "kernel",
    "kernel_dimension",
    "la_code_count",
    "la_code_count_upper",
    "log2_int",
    "nonequivalence_bounds",
    "puncture",
    "rank",
    "rank_deficiency",
    "realize",
    "sample_rep",
    "sample_tree",
    "seed_words",
    "validate_tree",
    "verify_extended_perfect",
    "verify_perfect",
]
