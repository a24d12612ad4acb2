from .operations import (
    Operation,
    OperationType,
    Probability,
    ExpectedT,
    ExpectedI,
    ExpectedFIota,
    Race,
    Matrix,
    Beaters,
    Conjecture,
    Ties,
    WordsProbability,
    WordsExpectedT,
    VerifyBijections,
)
from .finding import Finding
from .graph_of_operations import GraphOfOperations

__all__ = [
    "Operation",
    "OperationType",
    "Probability",
    "ExpectedT",
    "ExpectedI",
    "ExpectedFIota",
    "Race",
    "Matrix",
    "Beaters",
    "Conjecture",
    "Ties",
    "WordsProbability",
    "WordsExpectedT",
    "VerifyBijections",
    "Finding",
    "GraphOfOperations",
]
