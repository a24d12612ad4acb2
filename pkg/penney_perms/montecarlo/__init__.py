from .simulator import (
    RaceEstimates,
    RaceSimulator,
    SimEstimate,
    SimStatistic,
    block_generator,
    fresh_seed,
    ks_critical_value,
    ks_distance,
    sample_hit_times,
    simulate_initial,
    simulate_race,
    simulate_T,
)

__all__ = [
    "RaceEstimates",
    "RaceSimulator",
    "SimEstimate",
    "SimStatistic",
    "block_generator",
    "fresh_seed",
    "ks_critical_value",
    "ks_distance",
    "sample_hit_times",
    "simulate_initial",
    "simulate_race",
    "simulate_T",
]
