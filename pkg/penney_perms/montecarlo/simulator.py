# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.

from __future__ import annotations
import logging
import math
from dataclasses import dataclass
from enum import Enum
from multiprocessing import Pool
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy import stats

from penney_perms.config import Settings
from penney_perms.enumeration.oracle import pattern_code, window_codes
from penney_perms.perm_core import PatternLike, Permutation, as_pattern, require_incomparable

# rows per window_codes call, bounds the temporary rank arrays
ROW_CHUNK = 4096

Transform = Optional[Callable[[np.ndarray], np.ndarray]]


class SimStatistic(Enum):
    HIT_TIME_MEAN = "hit-time mean"
    HIT_TIME_VARIANCE = "hit-time variance"
    WIN_PROBABILITY = "win probability"
    F_MEAN = "F-mean"
    I_MEAN = "I-mean"


@dataclass(frozen=True)
class SimEstimate:
    """
    A Monte Carlo estimate with its standard error and the seed that reproduces it.
    """

    statistic: SimStatistic
    value: float
    stderr: float
    trials: int
    seed: int
    label: str = ""

    def within(self, expected: float, sigmas: float = 4.0) -> bool:
        """
        Whether expected lies within the given number of standard errors.
        """
        return abs(self.value - expected) <= sigmas * self.stderr

    def to_json(self) -> Dict:
        return {
            "statistic": self.statistic.value,
            "label": self.label,
            "value": self.value,
            "stderr": self.stderr,
            "trials": self.trials,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class RaceEstimates:
    """
    Estimates from one batch of races between sigma and tau.
    """

    sigma: Permutation
    tau: Permutation
    win: SimEstimate
    f_sigma_tau: SimEstimate
    f_tau_sigma: SimEstimate

    def to_json(self) -> Dict:
        return {
            "sigma": str(self.sigma),
            "tau": str(self.tau),
            "win": self.win.to_json(),
            "f_sigma_tau": self.f_sigma_tau.to_json(),
            "f_tau_sigma": self.f_tau_sigma.to_json(),
        }


def fresh_seed() -> int:
    """
    Draw a 63-bit seed from operating system entropy.
    """
    state = np.random.SeedSequence().generate_state(1, dtype=np.uint64)[0]
    return int(state >> np.uint64(1))


def block_generator(seed: int, block: int) -> np.random.Generator:
    """
    The random stream of one block of trials, a function of (seed, block) only.
    """
    return np.random.Generator(
        np.random.Philox(np.random.SeedSequence(seed, spawn_key=(block,)))
    )


def _codes(values: np.ndarray, k: int) -> np.ndarray:
    if values.shape[0] <= ROW_CHUNK:
        return window_codes(values, k)
    return np.vstack(
        [
            window_codes(values[begin : begin + ROW_CHUNK], k)
            for begin in range(0, values.shape[0], ROW_CHUNK)
        ]
    )


def _planted_prefix(
    rng: np.random.Generator, count: int, sigma: Permutation, transform: Transform
) -> np.ndarray:
    # rejection sampling of initial windows that standardize to sigma
    k = len(sigma)
    target = pattern_code(sigma)
    accepted: List[np.ndarray] = []
    missing = count
    batch = max(count, 1) * math.factorial(k)
    while missing > 0:
        draws = rng.random((batch, k))
        if transform is not None:
            draws = transform(draws)
        keep = draws[window_codes(draws, k)[:, 0] == target][:missing]
        accepted.append(keep)
        missing -= keep.shape[0]
    return np.vstack(accepted)


def _first_hits(
    rng: np.random.Generator,
    count: int,
    patterns: Sequence[Permutation],
    horizon: int,
    planted: Optional[Permutation] = None,
    transform: Transform = None,
) -> np.ndarray:
    """
    First occurrence times (1-based draw counts) of every pattern, for count trials.

    With a planted pattern the first draws are conditioned to form it and
    only occurrences ending after them are counted.
    """
    widths = [len(p) for p in patterns]
    codes = [pattern_code(p) for p in patterns]
    overlap = max(widths) - 1
    times = np.zeros((count, len(patterns)), dtype=np.int64)
    earliest = 0
    window = rng.random((count, horizon))
    if transform is not None:
        window = transform(window)
    if planted is not None:
        earliest = len(planted)
        window = np.hstack([_planted_prefix(rng, count, planted, transform), window])
    active = np.arange(count)
    offset = 0
    while active.size > 0:
        for q, (k, code) in enumerate(zip(widths, codes)):
            if window.shape[1] < k:
                continue
            ends = offset + np.arange(window.shape[1] - k + 1) + k
            hits = (_codes(window, k) == code) & (ends > earliest)[None, :]
            found = hits.any(axis=1)
            fresh = found & (times[active, q] == 0)
            rows = active[fresh]
            times[rows, q] = ends[np.argmax(hits[fresh], axis=1)]
        unfinished = (times[active] == 0).any(axis=1)
        active = active[unfinished]
        if active.size == 0:
            break
        carried = window[unfinished][:, window.shape[1] - overlap :] if overlap else window[unfinished][:, :0]
        extension = rng.random((active.size, horizon))
        if transform is not None:
            extension = transform(extension)
        offset += window.shape[1] - overlap
        window = np.hstack([carried, extension])
    return times


def _simulate_block(job: Tuple) -> np.ndarray:
    seed, block, size, patterns, horizon, planted, transform = job
    rng = block_generator(seed, block)
    return _first_hits(rng, size, patterns, horizon, planted, transform)


def _mean_estimate(
    samples: np.ndarray, statistic: SimStatistic, seed: int, label: str
) -> SimEstimate:
    n = samples.size
    if n == 0:
        return SimEstimate(statistic, math.nan, math.nan, 0, seed, label)
    std = float(samples.std(ddof=1)) if n > 1 else 0.0
    return SimEstimate(statistic, float(samples.mean()), std / math.sqrt(n), n, seed, label)


def _variance_estimate(samples: np.ndarray, seed: int, label: str) -> SimEstimate:
    n = samples.size
    centred = samples - samples.mean()
    variance = float(centred.var(ddof=1)) if n > 1 else 0.0
    fourth = float(np.mean(centred**4))
    stderr = math.sqrt(max(fourth - variance**2, 0.0) / n)
    return SimEstimate(SimStatistic.HIT_TIME_VARIANCE, variance, stderr, n, seed, label)


def _proportion_estimate(hits: np.ndarray, seed: int, label: str) -> SimEstimate:
    n = hits.size
    p = float(hits.mean())
    return SimEstimate(
        SimStatistic.WIN_PROBABILITY, p, math.sqrt(p * (1 - p) / n), n, seed, label
    )


class RaceSimulator:
    """
    Simulation of i.i.d. uniform draws, split into blocks with their own
    counter-based random streams so that results do not depend on the number
    of worker processes.
    """

    def __init__(self, settings: Optional[Settings] = None) -> None:
        """
        Initialize the simulator.

        :param settings: Block size, horizon and worker count. Defaults to Settings().
        :type settings: Optional[Settings]
        """
        self.logger = logging.getLogger(self.__class__.__name__)
        self.settings = settings if settings is not None else Settings()

    def hit_times(
        self,
        patterns: Sequence[Permutation],
        trials: int,
        seed: int,
        planted: Optional[Permutation] = None,
        transform: Transform = None,
    ) -> np.ndarray:
        """
        First occurrence times of every pattern, one row per trial.

        :param patterns: Consecutive patterns.
        :type patterns: Sequence[Permutation]
        :param trials: Number of independent trials.
        :type trials: int
        :param seed: Seed of the block streams.
        :type seed: int
        :param planted: Pattern forced on the first draws.
        :type planted: Optional[Permutation]
        :param transform: Strictly increasing map applied to every draw (picklable when workers > 1).
        :type transform: Optional[Callable]
        :return: Array of shape (trials, len(patterns)).
        :rtype: np.ndarray
        """
        assert trials >= 1, "At least one trial is needed"
        block = self.settings.mc_block_trials
        jobs = [
            (
                seed,
                index,
                min(block, trials - begin),
                tuple(patterns),
                self.settings.mc_horizon,
                planted,
                transform,
            )
            for index, begin in enumerate(range(0, trials, block))
        ]
        self.logger.debug("Simulating %d trials in %d blocks", trials, len(jobs))
        if self.settings.workers == 1 or len(jobs) == 1:
            results = [_simulate_block(job) for job in jobs]
        else:
            with Pool(processes=self.settings.workers) as pool:
                results = pool.map(_simulate_block, jobs)
        return np.vstack(results)

    def simulate_T(
        self, pattern: PatternLike, trials: int, seed: int
    ) -> Tuple[SimEstimate, SimEstimate]:
        """
        Mean and variance of the first occurrence time of a consecutive pattern.
        """
        samples = self.sample_hit_times(pattern, trials, seed).astype(np.float64)
        label = str(as_pattern(pattern))
        return (
            _mean_estimate(samples, SimStatistic.HIT_TIME_MEAN, seed, label),
            _variance_estimate(samples, seed, label),
        )

    def sample_hit_times(
        self, pattern: PatternLike, trials: int, seed: int, transform: Transform = None
    ) -> np.ndarray:
        pattern = as_pattern(pattern)
        assert pattern.is_consecutive, "Only consecutive patterns can be simulated"
        return self.hit_times([pattern.base], trials, seed, transform=transform)[:, 0]

    def simulate_race(
        self, sigma: Permutation, tau: Permutation, trials: int, seed: int
    ) -> RaceEstimates:
        """
        Pr(sigma before tau), and the further draws F from the winner's first
        occurrence until the loser's first occurrence, for each winner.

        :raises ComparablePatternsError: If the patterns are comparable.
        """
        require_incomparable(sigma, tau)
        times = self.hit_times([sigma, tau], trials, seed)
        sigma_first = times[:, 0] < times[:, 1]
        label = f"{sigma} vs {tau}"
        gaps = (times[:, 1] - times[:, 0]).astype(np.float64)
        race = RaceEstimates(
            sigma,
            tau,
            _proportion_estimate(sigma_first, seed, label),
            _mean_estimate(gaps[sigma_first], SimStatistic.F_MEAN, seed, f"{sigma}->{tau}"),
            _mean_estimate(-gaps[~sigma_first], SimStatistic.F_MEAN, seed, f"{tau}->{sigma}"),
        )
        self.logger.info("Race %s: %.4f +- %.4f", label, race.win.value, race.win.stderr)
        return race

    def simulate_initial(
        self, sigma: Permutation, tau: Permutation, trials: int, seed: int
    ) -> SimEstimate:
        """
        Mean of I_{sigma->tau}: further draws until tau, given that the first draws form sigma.

        sigma == tau is allowed and waits for the next occurrence of sigma.
        """
        if sigma != tau:
            require_incomparable(sigma, tau)
        times = self.hit_times([tau], trials, seed, planted=sigma)[:, 0]
        samples = (times - len(sigma)).astype(np.float64)
        return _mean_estimate(samples, SimStatistic.I_MEAN, seed, f"{sigma}->{tau}")


def ks_distance(first: np.ndarray, second: np.ndarray) -> Tuple[float, float]:
    """
    Two-sample Kolmogorov-Smirnov statistic and p-value.
    """
    result = stats.ks_2samp(first, second)
    return float(result.statistic), float(result.pvalue)


def ks_critical_value(n: int, m: int, alpha: float = 1e-3) -> float:
    """
    Asymptotic two-sided critical value of the KS statistic at level alpha.
    """
    return math.sqrt(-math.log(alpha / 2) / 2) * math.sqrt((n + m) / (n * m))


def simulate_T(
    pattern: PatternLike, trials: int, seed: int, settings: Optional[Settings] = None
) -> Tuple[SimEstimate, SimEstimate]:
    return RaceSimulator(settings).simulate_T(pattern, trials, seed)


def simulate_race(
    sigma: Permutation, tau: Permutation, trials: int, seed: int, settings: Optional[Settings] = None
) -> RaceEstimates:
    return RaceSimulator(settings).simulate_race(sigma, tau, trials, seed)


def simulate_initial(
    sigma: Permutation, tau: Permutation, trials: int, seed: int, settings: Optional[Settings] = None
) -> SimEstimate:
    return RaceSimulator(settings).simulate_initial(sigma, tau, trials, seed)


def sample_hit_times(
    pattern: PatternLike, trials: int, seed: int, settings: Optional[Settings] = None
) -> np.ndarray:
    return RaceSimulator(settings).sample_hit_times(pattern, trials, seed)
