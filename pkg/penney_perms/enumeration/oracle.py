# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.

from __future__ import annotations
import itertools
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from multiprocessing import Pool
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from penney_perms.perm_core import Permutation

# Largest suffix enumerated as one numpy block; longer permutations get more Lehmer digits fixed.
MAX_BLOCK = 8
CHUNK_ROWS = 1 << 16


@dataclass(frozen=True)
class EnumerationPlan:
    """
    Split of S_n into work units that fix the first `depth` Lehmer-code digits.
    """

    n: int
    depth: int
    workers: int = 1

    @classmethod
    def choose(cls, n: int, workers: int = 1) -> EnumerationPlan:
        """
        Pick the smallest depth giving at least 64 units per worker, and deep
        enough that the remaining suffix fits a block of MAX_BLOCK entries.

        :param n: Permutation length.
        :type n: int
        :param workers: Number of worker processes.
        :type workers: int
        :return: The plan.
        :rtype: EnumerationPlan
        """
        target = 64 * workers
        depth = 0
        units = 1
        while depth < n and units < target:
            units *= n - depth
            depth += 1
        depth = max(depth, n - MAX_BLOCK, 0)
        return cls(n, min(depth, n), workers)

    def work_units(self) -> List[Tuple[int, ...]]:
        """
        All Lehmer-code prefixes of length depth, in lexicographic order.
        """
        return list(
            itertools.product(*[range(self.n - i) for i in range(self.depth)])
        )

    @property
    def unit_count(self) -> int:
        return math.perm(self.n, self.depth) if self.depth else 1


def decode_prefix(n: int, digits: Tuple[int, ...]) -> Tuple[Tuple[int, ...], List[int]]:
    """
    Turn leading Lehmer digits into the leading entries and the unused values.
    """
    available = list(range(1, n + 1))
    prefix = tuple(available.pop(digit) for digit in digits)
    return prefix, available


@lru_cache(maxsize=4)
def _index_block(m: int) -> np.ndarray:
    # all permutations of 0..m-1 in lexicographic order, one per row
    if m == 0:
        return np.zeros((1, 0), dtype=np.int8)
    sub = _index_block(m - 1)
    parts = []
    for head in range(m):
        rest = (sub + (sub >= head)).astype(np.int8)
        column = np.full((sub.shape[0], 1), head, dtype=np.int8)
        parts.append(np.hstack([column, rest]))
    return np.vstack(parts)


def unit_rows(n: int, digits: Tuple[int, ...]) -> np.ndarray:
    """
    All permutations of one work unit as an (m!, n) array, in Lehmer order.
    """
    prefix, remaining = decode_prefix(n, digits)
    block = np.asarray(remaining, dtype=np.int8)[_index_block(len(remaining))]
    rows = np.empty((block.shape[0], n), dtype=np.int8)
    rows[:, : len(prefix)] = prefix
    rows[:, len(prefix) :] = block
    return rows


def pattern_code(sigma: Permutation) -> int:
    k = len(sigma)
    return sum((entry - 1) * k ** (k - 1 - i) for i, entry in enumerate(sigma.entries))


def window_codes(rows: np.ndarray, k: int) -> np.ndarray:
    """
    Encode the standardization of every length-k window of every row as a base-k number.

    Ties are broken by position (stable sorts), which only matters for real-valued draws.

    :param rows: Array of shape (R, n).
    :type rows: np.ndarray
    :param k: Window length.
    :type k: int
    :return: Array of shape (R, n-k+1) of codes comparable with pattern_code.
    :rtype: np.ndarray
    """
    count, n = rows.shape
    if n < k:
        return np.zeros((count, 0), dtype=np.int64)
    windows = sliding_window_view(rows, k, axis=1)
    ranks = np.argsort(np.argsort(windows, axis=-1, kind="stable"), axis=-1, kind="stable")
    weights = k ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return ranks @ weights


@dataclass(frozen=True)
class ConsecutiveQuery:
    """
    A membership test on S_n expressed through consecutive patterns.

    A row is accepted when the listed endpoint and window constraints hold and
    no pattern of `avoid` occurs, except that an `end` pattern is allowed at
    the final window.
    """

    avoid: Tuple[Permutation, ...] = ()
    end: Optional[Permutation] = None
    start: Optional[Permutation] = None
    first: Optional[int] = None
    last: Optional[int] = None

    def mask(self, rows: np.ndarray) -> np.ndarray:
        count, n = rows.shape
        keep = np.ones(count, dtype=bool)
        if n == 0:
            if self.first is not None or self.last is not None:
                keep[:] = False
            if self.end is not None or self.start is not None:
                keep[:] = False
            return keep
        if self.first is not None:
            keep &= rows[:, 0] == self.first
        if self.last is not None:
            keep &= rows[:, n - 1] == self.last
        codes: Dict[int, np.ndarray] = {}

        def codes_of(k: int) -> np.ndarray:
            if k not in codes:
                codes[k] = window_codes(rows, k)
            return codes[k]

        for required, position in ((self.end, "end"), (self.start, "start")):
            if required is None:
                continue
            k = len(required)
            if n < k:
                keep[:] = False
                return keep
            column = n - k if position == "end" else 0
            keep &= codes_of(k)[:, column] == pattern_code(required)
        for pattern in self.avoid:
            k = len(pattern)
            if n < k:
                continue
            hits = codes_of(k) == pattern_code(pattern)
            if self.end is not None and pattern == self.end:
                hits[:, n - k] = False
            keep &= ~hits.any(axis=1)
        return keep


def _count_unit(job: Tuple[int, Tuple[int, ...], ConsecutiveQuery]) -> int:
    n, digits, query = job
    rows = unit_rows(n, digits)
    total = 0
    for begin in range(0, rows.shape[0], CHUNK_ROWS):
        total += int(query.mask(rows[begin : begin + CHUNK_ROWS]).sum())
    return total


class BruteForceOracle:
    """
    Exhaustive enumeration of S_n in Lehmer-code order, the ground truth for all counts.
    """

    def __init__(self, workers: int = 1) -> None:
        """
        Initialize the oracle.

        :param workers: Number of worker processes used for counting.
        :type workers: int
        """
        self.logger = logging.getLogger(self.__class__.__name__)
        self.workers = workers
        self.visited: int = 0

    def count(self, n: int, query: ConsecutiveQuery) -> int:
        """
        Count the permutations of length n accepted by a query.

        :param n: Permutation length.
        :type n: int
        :param query: The membership test.
        :type query: ConsecutiveQuery
        :return: The exact count.
        :rtype: int
        """
        plan = EnumerationPlan.choose(n, self.workers)
        jobs = [(n, digits, query) for digits in plan.work_units()]
        self.logger.debug(
            "Enumerating S_%d in %d units of depth %d", n, len(jobs), plan.depth
        )
        if self.workers == 1 or len(jobs) == 1:
            results = [_count_unit(job) for job in jobs]
        else:
            with Pool(processes=self.workers) as pool:
                results = pool.map(_count_unit, jobs)
        self.visited += math.factorial(n)
        # summed in unit order so the result never depends on scheduling
        total = 0
        for result in results:
            total += result
        return total

    def members(self, n: int, query: ConsecutiveQuery) -> Iterator[Tuple[int, ...]]:
        """
        Yield the accepted permutations of length n in lexicographic order.
        """
        plan = EnumerationPlan.choose(n, 1)
        for digits in plan.work_units():
            rows = unit_rows(n, digits)
            for begin in range(0, rows.shape[0], CHUNK_ROWS):
                chunk = rows[begin : begin + CHUNK_ROWS]
                for row in chunk[query.mask(chunk)]:
                    yield tuple(int(value) for value in row)
        self.visited += math.factorial(n)
