from .matrix import ProbabilityMatrix, prob_matrix, sign_of
from .beaters import BeaterEdge, BeaterGraph, beater_graph, find_cycles
from .conjecture import (
    ConjectureRecord,
    ConjectureReport,
    ConjectureStatus,
    check_conjecture,
)

__all__ = [
    "ProbabilityMatrix",
    "prob_matrix",
    "sign_of",
    "BeaterEdge",
    "BeaterGraph",
    "beater_graph",
    "find_cycles",
    "ConjectureRecord",
    "ConjectureReport",
    "ConjectureStatus",
    "check_conjecture",
]
