"""Universal partial cycles: construction, certification and analysis.

A cyclic partial word over a finite alphabet, with a wildcard diamond
standing for every letter at once, is an upcycle when each word of A^n
is covered exactly once.  The package certifies such covers, builds
perfect necklaces and De Bruijn cycles, transforms cycles (alphabet
multiplication, lifting, folding, cross-joins), screens parameters for
nonexistence, measures distribution properties exactly, and searches
for new cycles.
"""

from .words import (
    DIAMOND,
    CapExceeded,
    Complement,
    Frame,
    Permute,
    PWord,
    Reverse,
    Rotate,
    apply_symmetries,
    apply_symmetry,
    canonical_rotation,
    covers,
    diamond_offsets,
    format_word,
    frame_of,
    frame_period,
    parse_word,
    window_frame,
    windows,
)
from .verify import (
    UpcycleParams,
    VerifyReport,
    boundary_words,
    diamondicity,
    equivalent_under_symmetry,
    verify_perfect_necklace,
    verify_upcycle,
    verify_upword,
)
from .necklaces import (
    ContainWord,
    Necklace,
    ZerosPrefix,
    build_astute,
    euler_necklace,
    lex_necklace,
    reflect_expand_necklace,
    rotate_expand_necklace,
    stretch_necklace,
)
from .multiplier import alphabet_multiply, alphabet_multiply_lex, filler_params, onion
from .liftfold import (
    enumerate_debruijn_lifts,
    is_lift,
    lift,
    lift_filler_params,
    try_fold,
)
from .graphs import (
    EdgePairSet,
    LabeledDigraph,
    cover_graph,
    export_dot,
    perfect_factor,
    tour_pairs,
)
from .pseudorandom import (
    CycloInt,
    FiniteField,
    agreements,
    autocorrelation,
    balance,
    check_psd,
    check_r3,
    check_runs,
    expected_multiplicity,
    puncture,
    run_counts,
    window_class_counts,
)
from .nonexistence import (
    CurtainAudit,
    FeasibilityRow,
    FeasibilityVerdict,
    curtain_audit,
    curtain_threshold,
    feasibility,
    feasibility_table,
    is_curtained,
    is_k_curtained,
)
from .search import SearchSpec, cross_join, find_cross_join_pairs, search_upcycles

__version__ = "0.1.0"

__all__ = [
    "DIAMOND",
    "CapExceeded",
    "Complement",
    "Frame",
    "Permute",
    "PWord",
    "Reverse",
    "Rotate",
    "apply_symmetries",
    "apply_symmetry",
    "canonical_rotation",
    "covers",
    "diamond_offsets",
    "format_word",
    "frame_of",
    "frame_period",
    "parse_word",
    "window_frame",
    "windows",
    "UpcycleParams",
    "VerifyReport",
    "boundary_words",
    "diamondicity",
    "equivalent_under_symmetry",
    "verify_perfect_necklace",
    "verify_upcycle",
    "verify_upword",
    "ContainWord",
    "Necklace",
    "ZerosPrefix",
    "build_astute",
    "euler_necklace",
    "lex_necklace",
    "reflect_expand_necklace",
    "rotate_expand_necklace",
    "stretch_necklace",
    "alphabet_multiply",
    "alphabet_multiply_lex",
    "filler_params",
    "onion",
    "enumerate_debruijn_lifts",
    "is_lift",
    "lift",
    "lift_filler_params",
    "try_fold",
    "EdgePairSet",
    "LabeledDigraph",
    "cover_graph",
    "export_dot",
    "perfect_factor",
    "tour_pairs",
    "CycloInt",
    "FiniteField",
    "agreements",
    "autocorrelation",
    "balance",
    "check_psd",
    "check_r3",
    "check_runs",
    "expected_multiplicity",
    "puncture",
    "run_counts",
    "window_class_counts",
    "CurtainAudit",
    "FeasibilityRow",
    "FeasibilityVerdict",
    "curtain_audit",
    "curtain_threshold",
    "feasibility",
    "feasibility_table",
    "is_curtained",
    "is_k_curtained",
    "SearchSpec",
    "cross_join",
    "find_cross_join_pairs",
    "search_upcycles",
    "__version__",
]
