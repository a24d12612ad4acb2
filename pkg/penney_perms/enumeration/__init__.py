from .count_table import CountTable, CountCache
from .oracle import BruteForceOracle, ConsecutiveQuery, EnumerationPlan, window_codes
from .automaton import SweepResult, WindowAutomaton
from .prefix_search import count_pattern_avoiders, iter_pattern_avoiders
from .counting import (
    METHODS,
    PatternCounter,
    RaceTables,
    count_avoiders,
    count_end_with,
    count_start_with_avoiding,
    default_counter,
    unconstrained_start_count,
)
from .recurrences import (
    RecurrenceFamily,
    a_sequence,
    b_sequence,
    d_table,
    family_for_pair,
    recurrence_count_table,
    recurrence_counts,
    recurrence_table,
    s_table,
    t_table,
)

__all__ = [
    "CountTable",
    "CountCache",
    "BruteForceOracle",
    "ConsecutiveQuery",
    "EnumerationPlan",
    "window_codes",
    "SweepResult",
    "WindowAutomaton",
    "count_pattern_avoiders",
    "iter_pattern_avoiders",
    "METHODS",
    "PatternCounter",
    "RaceTables",
    "count_avoiders",
    "count_end_with",
    "count_start_with_avoiding",
    "default_counter",
    "unconstrained_start_count",
    "RecurrenceFamily",
    "a_sequence",
    "b_sequence",
    "d_table",
    "family_for_pair",
    "recurrence_count_table",
    "recurrence_counts",
    "recurrence_table",
    "s_table",
    "t_table",
]
