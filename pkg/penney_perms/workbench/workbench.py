# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.

from __future__ import annotations
import logging
from typing import Dict, Optional, Tuple

from penney_perms.config import Settings
from penney_perms.enumeration import PatternCounter
from penney_perms.game import ProbabilityMatrix, prob_matrix
from penney_perms.montecarlo import RaceSimulator


class Workbench:
    """
    Shared computation context of one run: settings, the pattern counter with
    its count cache, the simulator and the probability matrices computed so far.
    """

    def __init__(self, settings: Optional[Settings] = None) -> None:
        """
        Initialize the workbench.

        :param settings: Runtime settings. Defaults to Settings().
        :type settings: Optional[Settings]
        """
        self.logger = logging.getLogger(self.__class__.__name__)
        self.settings = settings if settings is not None else Settings()
        self.counter = PatternCounter(self.settings)
        self.simulator = RaceSimulator(self.settings)
        self._matrices: Dict[Tuple[int, int], ProbabilityMatrix] = {}

    def resolve_N(self, N: Optional[int]) -> int:
        return N if N is not None else self.settings.default_N

    def matrix(self, k: int, N: Optional[int] = None) -> ProbabilityMatrix:
        """
        The probability matrix of S_k truncated at N, computed once per (k, N).
        """
        key = (k, self.resolve_N(N))
        if key not in self._matrices:
            self.logger.info("Computing probability matrix k=%d, N=%d", *key)
            self._matrices[key] = prob_matrix(key[0], key[1], self.counter)
        else:
            self.logger.debug("Reusing probability matrix k=%d, N=%d", *key)
        return self._matrices[key]

    @property
    def visited(self) -> int:
        """
        Permutations visited by the brute-force oracle so far.
        """
        return self.counter.visited
