# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.

from __future__ import annotations
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional

from penney_perms.analytic import ProbEstimate, Verdict, prob_precedes
from penney_perms.enumeration import PatternCounter, default_counter
from penney_perms.game.matrix import ProbabilityMatrix
from penney_perms.perm_core import Permutation, incomparable, permutations

logger = logging.getLogger(__name__)


class ConjectureStatus(Enum):
    CERTIFIED = "certified"
    ESTIMATED = "estimated"
    FAILED = "failed"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class ConjectureRecord:
    """
    Whether the rotation tau = sigma_k sigma_1 ... sigma_{k-1} beats sigma.
    """

    sigma: Permutation
    tau: Permutation
    estimate: Optional[ProbEstimate]
    status: ConjectureStatus
    note: str = ""

    def to_json(self) -> Dict:
        return {
            "sigma": str(self.sigma),
            "tau": str(self.tau),
            "status": self.status.value,
            "estimate": self.estimate.to_json() if self.estimate is not None else None,
            "note": self.note,
        }


@dataclass
class ConjectureReport:
    k: int
    N: int
    records: List[ConjectureRecord] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(
            record.status in (ConjectureStatus.CERTIFIED, ConjectureStatus.ESTIMATED)
            for record in self.records
        )

    @property
    def certified(self) -> bool:
        return all(record.status == ConjectureStatus.CERTIFIED for record in self.records)

    def to_json(self) -> Dict:
        return {
            "k": self.k,
            "N": self.N,
            "holds": self.holds,
            "certified": self.certified,
            "records": [record.to_json() for record in self.records],
        }


def _status(estimate: ProbEstimate) -> ConjectureStatus:
    if estimate.verdict == Verdict.TAU_CERTIFIED:
        return ConjectureStatus.CERTIFIED
    if estimate.verdict == Verdict.UNDETERMINED and estimate.estimate < 0.5:
        return ConjectureStatus.ESTIMATED
    return ConjectureStatus.FAILED


def check_conjecture(
    k: int,
    N: Optional[int] = None,
    counter: Optional[PatternCounter] = None,
    matrix: Optional[ProbabilityMatrix] = None,
) -> ConjectureReport:
    """
    Check, for every sigma in S_k, that Pr(sigma before its rotation) < 1/2.

    :param k: Pattern length, at least 3.
    :type k: int
    :param N: Truncation length. Defaults to the matrix N, then to the configured N.
    :type N: Optional[int]
    :param counter: Counter providing the race counts. Defaults to the shared counter.
    :type counter: Optional[PatternCounter]
    :param matrix: Precomputed probability matrix of S_k to read the cells from.
    :type matrix: Optional[ProbabilityMatrix]
    :return: One record per pattern.
    :rtype: ConjectureReport
    """
    assert k >= 3, "The rotation strategy is defined for k >= 3"
    counter = counter or default_counter()
    if N is None:
        N = matrix.N if matrix is not None else counter.settings.default_N
    if matrix is not None:
        assert matrix.k == k and matrix.N == N, "The matrix does not match k and N"
    report = ConjectureReport(k, N)
    for sigma in permutations(k):
        tau = sigma.rotate()
        if not incomparable(sigma, tau):
            report.records.append(
                ConjectureRecord(sigma, tau, None, ConjectureStatus.SKIPPED, "rotation is comparable")
            )
            continue
        if matrix is not None:
            estimate = matrix.cell(sigma, tau)
        else:
            estimate = prob_precedes(sigma, tau, N, counter)
        report.records.append(ConjectureRecord(sigma, tau, estimate, _status(estimate)))
    logger.info("Rotation strategy for k=%d at N=%d holds: %s", k, N, report.holds)
    return report
