from .words import Word, bifix_values, conway_prob, nielsen_ET, require_incomparable_words
from .markov import MarkovChainOracle, markov_ET, markov_race

__all__ = [
    "Word",
    "bifix_values",
    "conway_prob",
    "nielsen_ET",
    "require_incomparable_words",
    "MarkovChainOracle",
    "markov_ET",
    "markov_race",
]
