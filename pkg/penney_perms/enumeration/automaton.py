# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.

from __future__ import annotations
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple

from penney_perms.perm_core import Permutation, rank_tuple


@dataclass
class SweepResult:
    """
    Counts produced by one automaton sweep, for every length 0..N.

    `avoiding[n]` counts permutations without any occurrence (and starting
    with the start pattern, if one was given); `ending[p][n]` counts
    permutations whose only occurrence of any pattern is a final occurrence
    of p; `ending_endpoints[p][n][(a, b)]` refines the latter by the first
    and last entries.
    """

    N: int
    avoiding: Dict[int, int] = field(default_factory=dict)
    ending: Dict[Permutation, Dict[int, int]] = field(default_factory=dict)
    ending_endpoints: Dict[Permutation, Dict[int, Dict[Tuple[int, int], int]]] = field(
        default_factory=dict
    )


class WindowAutomaton:
    """
    Exact counter for consecutive patterns that grows permutations one entry
    at a time and only remembers the ranks of the last entries.

    A state is (rank of the first entry, ranks of the last w entries), where
    w+1 is the longest pattern length, so the count of every state is exact.
    """

    def __init__(
        self,
        patterns: Sequence[Permutation],
        start: Optional[Permutation] = None,
        track_endpoints: bool = False,
    ) -> None:
        """
        Initialize the automaton.

        :param patterns: Consecutive patterns that end a permutation when they occur.
        :type patterns: Sequence[Permutation]
        :param start: Optional pattern the first entries must form.
        :type start: Optional[Permutation]
        :param track_endpoints: Whether to record first/last entries of the ending permutations.
        :type track_endpoints: bool
        """
        self.logger = logging.getLogger(self.__class__.__name__)
        self.patterns: Tuple[Permutation, ...] = tuple(patterns)
        assert len(self.patterns) > 0, "The automaton needs at least one pattern"
        self.start = start
        self.track_endpoints = track_endpoints
        lengths = [len(p) for p in self.patterns]
        if start is not None:
            lengths.append(len(start))
        self.width = max(lengths) - 1
        self.transitions: int = 0

    def _occurring(self, window: Tuple[int, ...]) -> Tuple[Permutation, ...]:
        return tuple(
            p
            for p in self.patterns
            if len(window) >= len(p) and rank_tuple(window[-len(p) :]) == p.entries
        )

    def sweep(self, N: int) -> SweepResult:
        """
        Count all lengths 0..N in one pass.

        :param N: Largest length.
        :type N: int
        :return: The counts.
        :rtype: SweepResult
        """
        result = SweepResult(N)
        for p in self.patterns:
            result.ending[p] = {0: 0}
            result.ending_endpoints[p] = {0: {}}
        result.avoiding[0] = 1 if self.start is None else 0
        states: Dict[Tuple[int, Tuple[int, ...]], int] = {(0, ()): 1}
        for m in range(N):
            size = m + 1
            following: Dict[Tuple[int, Tuple[int, ...]], int] = defaultdict(int)
            ending = {p: 0 for p in self.patterns}
            endpoints = {p: defaultdict(int) for p in self.patterns}
            for (first, window), count in states.items():
                for r in range(1, size + 1):
                    grown = tuple(x + (x >= r) for x in window) + (r,)
                    if size == 1:
                        new_first = 1
                    elif self.track_endpoints:
                        new_first = first + (first >= r)
                    else:
                        new_first = 0
                    self.transitions += 1
                    if (
                        self.start is not None
                        and size == len(self.start)
                        and rank_tuple(grown) != self.start.entries
                    ):
                        continue
                    hits = self._occurring(grown)
                    if hits:
                        # two simultaneous final occurrences exclude each other
                        if len(hits) == 1:
                            ending[hits[0]] += count
                            if self.track_endpoints:
                                endpoints[hits[0]][(new_first, r)] += count
                        continue
                    kept = grown[max(0, len(grown) - self.width) :] if self.width else ()
                    following[(new_first if self.track_endpoints else 0, kept)] += count
            states = dict(following)
            if self.start is not None and size < len(self.start):
                result.avoiding[size] = 0
            else:
                result.avoiding[size] = sum(states.values())
            for p in self.patterns:
                result.ending[p][size] = ending[p]
                result.ending_endpoints[p][size] = dict(endpoints[p])
            self.logger.debug("Length %d: %d live states", size, len(states))
        return result
