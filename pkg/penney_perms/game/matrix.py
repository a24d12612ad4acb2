# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.

from __future__ import annotations
import logging
from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Set, Tuple

import pandas as pd

from penney_perms.analytic import ProbEstimate, prob_precedes
from penney_perms.enumeration import PatternCounter, default_counter
from penney_perms.perm_core import Permutation, permutations

logger = logging.getLogger(__name__)

Pair = Tuple[Permutation, Permutation]


def sign_of(estimate: ProbEstimate) -> str:
    """
    "<", "=" or ">" comparing Pr(sigma before tau) with 1/2 under truncation at N.
    """
    return {"sigma": ">", "tau": "<", None: "="}[estimate.favours]


@dataclass
class ProbabilityMatrix:
    """
    Pr(row before column) for all ordered pairs of distinct patterns of length k.
    """

    k: int
    N: int
    patterns: List[Permutation]
    cells: Dict[Pair, ProbEstimate] = field(default_factory=dict)

    def cell(self, sigma: Permutation, tau: Permutation) -> ProbEstimate:
        return self.cells[(sigma, tau)]

    def to_frame(self) -> pd.DataFrame:
        """
        Normalised estimates with patterns as row and column labels; the diagonal is empty.
        """
        labels = [str(p) for p in self.patterns]
        frame = pd.DataFrame(index=labels, columns=labels, dtype=float)
        for (sigma, tau), estimate in self.cells.items():
            frame.loc[str(sigma), str(tau)] = estimate.estimate
        frame.index.name = "sigma"
        return frame

    def to_csv(self, path: Optional[str] = None, decimals: int = 3) -> str:
        """
        The matrix in the layout of a printed table, rounded to the given number of decimals.

        :param path: File to write as well. Defaults to None.
        :type path: Optional[str]
        :param decimals: Decimals kept. Defaults to 3.
        :type decimals: int
        :return: The CSV text.
        :rtype: str
        """
        text = self.to_frame().round(decimals).to_csv(na_rep="")
        if path is not None:
            with open(path, "w") as f:
                f.write(text)
        return text

    def signs(self) -> Dict[Pair, str]:
        return {pair: sign_of(estimate) for pair, estimate in self.cells.items()}

    def sign_rows(self) -> List[str]:
        """
        One line per row pattern: the pattern, a space, then one sign per column ("." on the diagonal).
        """
        signs = self.signs()
        return [
            f"{sigma} "
            + "".join("." if sigma == tau else signs[(sigma, tau)] for tau in self.patterns)
            for sigma in self.patterns
        ]

    def certified_cells(self) -> Set[Pair]:
        return {pair for pair, estimate in self.cells.items() if estimate.certified}

    def tied_pairs(self) -> Set[frozenset]:
        return {
            frozenset(pair) for pair, estimate in self.cells.items() if estimate.favours is None
        }

    def to_json(self) -> Dict:
        return {
            "k": self.k,
            "N": self.N,
            "cells": [self.cells[pair].to_json() for pair in sorted(self.cells)],
        }


def prob_matrix(
    k: int, N: Optional[int] = None, counter: Optional[PatternCounter] = None
) -> ProbabilityMatrix:
    """
    Compute the probability matrix of S_k, each complement class of pairs once.

    :param k: Pattern length, 3 to 5.
    :type k: int
    :param N: Truncation length. Defaults to the configured N.
    :type N: Optional[int]
    :param counter: Counter providing the race counts. Defaults to the shared counter.
    :type counter: Optional[PatternCounter]
    :return: The matrix.
    :rtype: ProbabilityMatrix
    """
    assert 3 <= k <= 5, "Probability matrices are supported for 3 <= k <= 5"
    counter = counter or default_counter()
    N = N if N is not None else counter.settings.default_N
    counter.check_ceiling(N, [Permutation.identity(k)])
    patterns = list(permutations(k))
    matrix = ProbabilityMatrix(k, N, patterns)
    computed = 0
    for sigma in patterns:
        for tau in patterns:
            if sigma == tau or (sigma, tau) in matrix.cells:
                continue
            estimate = prob_precedes(sigma, tau, N, counter)
            mirrored = replace(estimate, sigma=sigma.complement(), tau=tau.complement())
            for cell in (estimate, estimate.swapped(), mirrored, mirrored.swapped()):
                matrix.cells[(cell.sigma, cell.tau)] = cell
            computed += 1
    logger.info(
        "Probability matrix k=%d, N=%d: %d cells from %d computed pairs",
        k,
        N,
        len(matrix.cells),
        computed,
    )
    return matrix
