# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.

from __future__ import annotations
import logging
import math
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from penney_perms.config import Settings
from penney_perms.enumeration.automaton import WindowAutomaton
from penney_perms.enumeration.count_table import CountCache, CountTable
from penney_perms.enumeration.oracle import BruteForceOracle, ConsecutiveQuery
from penney_perms.enumeration.prefix_search import (
    count_pattern_avoiders,
    iter_pattern_avoiders,
)
from penney_perms.errors import CeilingExceededError, PenneyError
from penney_perms.perm_core import (
    PatternLike,
    Permutation,
    VincularPattern,
    as_pattern,
    require_incomparable,
)

METHODS = ("auto", "oracle", "automaton")


@dataclass(frozen=True)
class RaceTables:
    """
    The three count families behind a race between sigma and tau, for n = 0..N.
    """

    sigma: Permutation
    tau: Permutation
    N: int
    sigma_end: CountTable
    tau_end: CountTable
    avoiders: CountTable


def _avoiders_key(patterns: Iterable[VincularPattern]) -> str:
    return "+".join(sorted(str(p) for p in patterns))


def _canonical_pair(sigma: Permutation, tau: Permutation) -> Tuple[Permutation, Permutation, bool]:
    # a pair and its complement image have identical counts
    flipped = (sigma.complement(), tau.complement())
    if (str(flipped[0]), str(flipped[1])) < (str(sigma), str(tau)):
        return flipped[0], flipped[1], True
    return sigma, tau, False


class PatternCounter:
    """
    Exact counting service for every enumeration kind, backed by the
    brute-force oracle, the rank-state automaton and a CountTable cache.
    """

    def __init__(
        self, settings: Optional[Settings] = None, cache: Optional[CountCache] = None
    ) -> None:
        """
        Initialize the counter.

        :param settings: Ceilings, worker count and cache directory. Defaults to Settings().
        :type settings: Optional[Settings]
        :param cache: Table cache. Defaults to a cache in settings.cache_dir.
        :type cache: Optional[CountCache]
        """
        self.logger = logging.getLogger(self.__class__.__name__)
        self.settings = settings if settings is not None else Settings()
        self.cache = cache if cache is not None else CountCache(self.settings.cache_dir)
        self.oracle = BruteForceOracle(self.settings.workers)
        self._endpoint_memo: Dict[Tuple, Dict[Tuple[int, int], int]] = {}

    @property
    def visited(self) -> int:
        """
        Number of permutations visited by the brute-force oracle so far.
        """
        return self.oracle.visited

    def check_ceiling(self, n: int, patterns: Iterable[PatternLike]) -> None:
        """
        :raises CeilingExceededError: If n is above the ceiling for these patterns.
        """
        vincular = any(not as_pattern(p).is_consecutive for p in patterns)
        ceiling = (
            self.settings.ceiling_vincular
            if vincular
            else self.settings.ceiling_consecutive
        )
        if n > ceiling:
            raise CeilingExceededError(
                f"n={n} exceeds the enumeration ceiling {ceiling}"
                f"{' for vincular patterns' if vincular else ''}"
            )

    def _use_oracle(self, N: int, method: str) -> bool:
        if method not in METHODS:
            raise PenneyError(f"Unknown counting method '{method}'")
        if method == "auto":
            return N <= self.settings.oracle_max_n
        return method == "oracle"

    def avoiders_table(
        self, patterns: Iterable[PatternLike], N: int, method: str = "auto"
    ) -> CountTable:
        """
        Counts alpha_n of permutations avoiding every pattern, for n = 0..N.

        :param patterns: Consecutive, vincular or classical patterns.
        :type patterns: Iterable[PatternLike]
        :param N: Largest length.
        :type N: int
        :param method: "auto", "oracle" or "automaton" (consecutive patterns only).
        :type method: str
        :return: The table.
        :rtype: CountTable
        """
        patterns = [as_pattern(p) for p in patterns]
        self.check_ceiling(N, patterns)
        parameters = _avoiders_key(patterns)
        cached = self.cache.get("avoiders", parameters)
        if cached is not None and cached.covers(N):
            return cached.truncated(N)
        if len(patterns) == 0:
            counts = {n: math.factorial(n) for n in range(N + 1)}
        elif any(not p.is_consecutive for p in patterns):
            self.logger.info("Counting avoiders of %s up to n=%d by prefix search", parameters, N)
            counts = count_pattern_avoiders(N, patterns)
        elif self._use_oracle(N, method):
            self.logger.info("Counting avoiders of %s up to n=%d by brute force", parameters, N)
            query = ConsecutiveQuery(avoid=tuple(p.base for p in patterns))
            counts = {n: self.oracle.count(n, query) for n in range(N + 1)}
        else:
            self.logger.info("Counting avoiders of %s up to n=%d by automaton", parameters, N)
            counts = WindowAutomaton([p.base for p in patterns]).sweep(N).avoiding
        table = CountTable("avoiders", parameters, dict(counts))
        self.cache.put(table)
        return table

    def count_avoiders(
        self, n: int, patterns: Iterable[PatternLike], method: str = "auto"
    ) -> int:
        assert n >= 0, "The length has to be nonnegative"
        return self.avoiders_table(patterns, n, method)[n]

    def race_table(
        self, sigma: Permutation, tau: Permutation, N: int, method: str = "auto"
    ) -> RaceTables:
        """
        Counts |Av_n^sigma(sigma,tau)|, |Av_n^tau(sigma,tau)| and the avoiders of both, for n = 0..N.

        :param sigma: First pattern.
        :type sigma: Permutation
        :param tau: Second pattern, incomparable with sigma.
        :type tau: Permutation
        :param N: Largest length.
        :type N: int
        :param method: "auto", "oracle" or "automaton".
        :type method: str
        :return: The three tables.
        :rtype: RaceTables
        :raises ComparablePatternsError: If the patterns are comparable.
        """
        require_incomparable(sigma, tau)
        self.check_ceiling(N, [sigma, tau])
        first, second, flipped = _canonical_pair(sigma, tau)
        keys = (
            ("end_with", f"{first}_vs_{second}"),
            ("end_with", f"{second}_vs_{first}"),
            ("avoiders", _avoiders_key([as_pattern(first), as_pattern(second)])),
        )
        tables = [self.cache.get(kind, parameters) for kind, parameters in keys]
        if not all(table is not None and table.covers(N) for table in tables):
            if self._use_oracle(N, method):
                self.logger.info("Race %s vs %s up to n=%d by brute force", first, second, N)
                both = (first, second)
                queries = (
                    ConsecutiveQuery(avoid=both, end=first),
                    ConsecutiveQuery(avoid=both, end=second),
                    ConsecutiveQuery(avoid=both),
                )
                columns = [
                    {n: self.oracle.count(n, query) for n in range(N + 1)}
                    for query in queries
                ]
            else:
                self.logger.info("Race %s vs %s up to n=%d by automaton", first, second, N)
                sweep = WindowAutomaton([first, second]).sweep(N)
                columns = [sweep.ending[first], sweep.ending[second], sweep.avoiding]
            tables = [
                CountTable(kind, parameters, dict(column))
                for (kind, parameters), column in zip(keys, columns)
            ]
            for table in tables:
                self.cache.put(table)
        tables = [table.truncated(N) for table in tables]
        if flipped:
            self.logger.debug("Using complement counts of %s vs %s", first, second)
        return RaceTables(sigma, tau, N, tables[0], tables[1], tables[2])

    def endpoint_counts(
        self, n: int, sigma: Permutation, tau: Permutation, method: str = "auto"
    ) -> Dict[Tuple[int, int], int]:
        """
        Split |Av_n^sigma(sigma,tau)| by the pair (first entry, last entry).
        """
        require_incomparable(sigma, tau)
        self.check_ceiling(n, [sigma, tau])
        memo_key = (n, sigma, tau, self._use_oracle(n, method))
        if memo_key not in self._endpoint_memo:
            counts: Dict[Tuple[int, int], int] = {}
            if memo_key[-1]:
                query = ConsecutiveQuery(avoid=(sigma, tau), end=sigma)
                for row in self.oracle.members(n, query):
                    counts[(row[0], row[-1])] = counts.get((row[0], row[-1]), 0) + 1
            else:
                sweep = WindowAutomaton([sigma, tau], track_endpoints=True).sweep(n)
                counts = dict(sweep.ending_endpoints[sigma][n])
            self._endpoint_memo[memo_key] = counts
        return self._endpoint_memo[memo_key]

    def count_end_with(
        self,
        n: int,
        sigma: Permutation,
        tau: Permutation,
        first: Optional[int] = None,
        last: Optional[int] = None,
        method: str = "auto",
    ) -> int:
        """
        Count |Av_n^sigma(sigma,tau)|, optionally with pi_1 = first and pi_n = last.

        :param n: Permutation length.
        :type n: int
        :param sigma: Pattern the permutations end with.
        :type sigma: Permutation
        :param tau: Pattern avoided everywhere.
        :type tau: Permutation
        :param first: Required first entry.
        :type first: Optional[int]
        :param last: Required last entry.
        :type last: Optional[int]
        :param method: "auto", "oracle" or "automaton".
        :type method: str
        :return: The exact count.
        :rtype: int
        """
        assert n >= 0, "The length has to be nonnegative"
        for value in (first, last):
            if value is not None and not 1 <= value <= n:
                raise PenneyError(f"Endpoint value {value} is outside 1..{n}")
        if first is None and last is None:
            return self.race_table(sigma, tau, n, method).sigma_end[n]
        counts = self.endpoint_counts(n, sigma, tau, method)
        return sum(
            count
            for (a, b), count in counts.items()
            if (first is None or a == first) and (last is None or b == last)
        )

    def start_table(
        self, sigma: Permutation, tau: Permutation, N: int, method: str = "auto"
    ) -> CountTable:
        """
        Counts of permutations starting with an occurrence of sigma and avoiding tau, for n = 0..N.
        """
        require_incomparable(sigma, tau)
        self.check_ceiling(N, [sigma, tau])
        parameters = f"{sigma}_avoiding_{tau}"
        cached = self.cache.get("start_avoiding", parameters)
        if cached is not None and cached.covers(N):
            return cached.truncated(N)
        if self._use_oracle(N, method):
            query = ConsecutiveQuery(avoid=(tau,), start=sigma)
            counts = {n: self.oracle.count(n, query) for n in range(N + 1)}
        else:
            counts = WindowAutomaton([tau], start=sigma).sweep(N).avoiding
        table = CountTable("start_avoiding", parameters, dict(counts))
        self.cache.put(table)
        return table

    def count_start_with_avoiding(
        self, n: int, sigma: Permutation, tau: Permutation, method: str = "auto"
    ) -> int:
        assert n >= len(sigma), "The length has to be at least the pattern length"
        return self.start_table(sigma, tau, n, method)[n]

    def iter_query(self, n: int, query: ConsecutiveQuery) -> Iterator[Permutation]:
        """
        Yield the members of S_n accepted by a query, in lexicographic order.
        """
        patterns: List[Permutation] = list(query.avoid)
        patterns += [p for p in (query.end, query.start) if p is not None]
        self.check_ceiling(n, patterns)
        if n == 0:
            return
        for row in self.oracle.members(n, query):
            yield Permutation(row)

    def iter_end_with(
        self, n: int, sigma: Permutation, tau: Permutation
    ) -> Iterator[Permutation]:
        """
        Yield the members of Av_n^sigma(sigma,tau) in lexicographic order.
        """
        require_incomparable(sigma, tau)
        return self.iter_query(n, ConsecutiveQuery(avoid=(sigma, tau), end=sigma))

    def iter_avoiders(self, n: int, patterns: Iterable[PatternLike]) -> List[Permutation]:
        """
        List the permutations of length n avoiding every pattern, sorted lexicographically.
        """
        patterns = [as_pattern(p) for p in patterns]
        self.check_ceiling(n, patterns)
        if n == 0:
            return []
        if all(p.is_consecutive for p in patterns):
            query = ConsecutiveQuery(avoid=tuple(p.base for p in patterns))
            return [Permutation(row) for row in self.oracle.members(n, query)]
        return sorted(Permutation(row) for row in iter_pattern_avoiders(n, patterns))


def unconstrained_start_count(n: int, k: int) -> int:
    """
    Number of permutations of length n whose first k entries form a fixed pattern: n!/k!.
    """
    assert n >= k >= 0, "Need n >= k >= 0"
    return math.factorial(n) // math.factorial(k)


_default_counter: Optional[PatternCounter] = None


def default_counter() -> PatternCounter:
    """
    Shared counter built from the default settings.
    """
    global _default_counter
    if _default_counter is None:
        _default_counter = PatternCounter()
    return _default_counter


def count_avoiders(
    n: int, patterns: Iterable[PatternLike], counter: Optional[PatternCounter] = None
) -> int:
    return (counter or default_counter()).count_avoiders(n, patterns)


def count_end_with(
    n: int,
    sigma: Permutation,
    tau: Permutation,
    first: Optional[int] = None,
    last: Optional[int] = None,
    counter: Optional[PatternCounter] = None,
) -> int:
    return (counter or default_counter()).count_end_with(n, sigma, tau, first, last)


def count_start_with_avoiding(
    n: int, sigma: Permutation, tau: Permutation, counter: Optional[PatternCounter] = None
) -> int:
    return (counter or default_counter()).count_start_with_avoiding(n, sigma, tau)
