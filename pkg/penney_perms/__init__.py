from penney_perms.errors import (
    PenneyError,
    InvalidPatternError,
    DistinctValuesError,
    ComparablePatternsError,
    CeilingExceededError,
    UnsupportedError,
    MembershipError,
    EmptyCountTableError,
)
from penney_perms.perm_core import Permutation, VincularPattern, standardize
from penney_perms.analytic import ProbEstimate, prob_precedes, expected_T, variance_T

__all__ = [
    "PenneyError",
    "InvalidPatternError",
    "DistinctValuesError",
    "ComparablePatternsError",
    "CeilingExceededError",
    "UnsupportedError",
    "MembershipError",
    "EmptyCountTableError",
    "Permutation",
    "VincularPattern",
    "standardize",
    "ProbEstimate",
    "prob_precedes",
    "expected_T",
    "variance_T",
]
