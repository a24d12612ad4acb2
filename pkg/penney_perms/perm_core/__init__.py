from .permutation import (
    Permutation,
    VincularPattern,
    PatternLike,
    as_pattern,
    avoids,
    complement,
    consecutive_occurrences,
    contains,
    ends_with_occurrence,
    occurrences,
    permutations,
    rank_tuple,
    standardize,
)
from .overlap import (
    OverlapSet,
    incomparable,
    non_j_overlapping,
    non_j_self_overlapping,
    overlap_set,
    require_incomparable,
)

__all__ = [
    "Permutation",
    "VincularPattern",
    "PatternLike",
    "as_pattern",
    "avoids",
    "complement",
    "consecutive_occurrences",
    "contains",
    "ends_with_occurrence",
    "occurrences",
    "permutations",
    "rank_tuple",
    "standardize",
    "OverlapSet",
    "incomparable",
    "non_j_overlapping",
    "non_j_self_overlapping",
    "overlap_set",
    "require_incomparable",
]
