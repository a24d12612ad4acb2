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
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from penney_perms.enumeration import PatternCounter, default_counter
from penney_perms.perm_core import Permutation
from penney_perms.ties.certificates import CertificateKind, known_certificate

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


class Verdict(Enum):
    """
    Outcome of a truncated comparison of Pr(sigma before tau) with 1/2.
    """

    SIGMA_CERTIFIED = "SigmaCertified"
    TAU_CERTIFIED = "TauCertified"
    TIE_CERTIFIED_BY_COUNTS = "TieCertifiedByCounts"
    UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class ProbEstimate:
    """
    Certified bounds on Pr(sigma before tau) from the race counts up to length N.

    sigma_mass and tau_mass are the exact probabilities that sigma (resp. tau)
    occurs first within N draws; undecided is the probability that neither
    occurs within N draws.
    """

    sigma: Permutation
    tau: Permutation
    N: int
    sigma_mass: Fraction
    tau_mass: Fraction
    undecided: Fraction
    verdict: Verdict
    certificate: Optional[CertificateKind] = None

    @property
    def interval(self) -> Tuple[Fraction, Fraction]:
        """
        Certified interval containing Pr(sigma before tau).
        """
        return self.sigma_mass, self.sigma_mass + self.undecided

    @property
    def estimate(self) -> float:
        """
        The normalised truncated value sigma_mass / (sigma_mass + tau_mass).
        """
        decided = self.sigma_mass + self.tau_mass
        if decided == 0:
            return 0.5
        return float(self.sigma_mass / decided)

    @property
    def exact(self) -> Optional[Fraction]:
        """
        The exact probability, when known: no undecided mass, or a certified tie.
        """
        if self.undecided == 0:
            return self.sigma_mass
        if self.verdict == Verdict.TIE_CERTIFIED_BY_COUNTS:
            return HALF
        return None

    @property
    def certified(self) -> bool:
        return self.verdict != Verdict.UNDETERMINED

    @property
    def favours(self) -> Optional[str]:
        """
        "sigma", "tau" or None (tie), by verdict and otherwise by estimate.
        """
        if self.verdict == Verdict.SIGMA_CERTIFIED:
            return "sigma"
        if self.verdict == Verdict.TAU_CERTIFIED:
            return "tau"
        if self.verdict == Verdict.TIE_CERTIFIED_BY_COUNTS:
            return None
        if self.sigma_mass > self.tau_mass:
            return "sigma"
        if self.tau_mass > self.sigma_mass:
            return "tau"
        return None

    def swapped(self) -> ProbEstimate:
        """
        The estimate for Pr(tau before sigma), from the same counts.
        """
        verdict = {
            Verdict.SIGMA_CERTIFIED: Verdict.TAU_CERTIFIED,
            Verdict.TAU_CERTIFIED: Verdict.SIGMA_CERTIFIED,
        }.get(self.verdict, self.verdict)
        return ProbEstimate(
            self.tau,
            self.sigma,
            self.N,
            self.tau_mass,
            self.sigma_mass,
            self.undecided,
            verdict,
            self.certificate,
        )

    def to_json(self) -> Dict:
        return {
            "sigma": str(self.sigma),
            "tau": str(self.tau),
            "N": self.N,
            "sigma_mass": str(self.sigma_mass),
            "tau_mass": str(self.tau_mass),
            "undecided": str(self.undecided),
            "verdict": self.verdict.value,
            "estimate": round(self.estimate, 6),
        }


def _verdict(
    sigma_mass: Fraction, tau_mass: Fraction, tie_by_counts: bool, certificate: Optional[CertificateKind]
) -> Verdict:
    if sigma_mass > HALF:
        return Verdict.SIGMA_CERTIFIED
    if tau_mass > HALF:
        return Verdict.TAU_CERTIFIED
    if tie_by_counts and certificate is not None:
        return Verdict.TIE_CERTIFIED_BY_COUNTS
    return Verdict.UNDETERMINED


def masses(
    sigma_counts: List[int], tau_counts: List[int], avoiders: int, N: int
) -> Tuple[Fraction, Fraction, Fraction]:
    """
    Exact probability masses from race counts indexed by n = 0..N.
    """
    sigma_mass = sum(
        (Fraction(c, math.factorial(n)) for n, c in enumerate(sigma_counts)), Fraction(0)
    )
    tau_mass = sum(
        (Fraction(c, math.factorial(n)) for n, c in enumerate(tau_counts)), Fraction(0)
    )
    undecided = Fraction(avoiders, math.factorial(N))
    assert sigma_mass + tau_mass + undecided == 1, (
        "Race masses do not add up to 1, the counts are inconsistent"
    )
    return sigma_mass, tau_mass, undecided


def prob_precedes(
    sigma: Permutation,
    tau: Permutation,
    N: Optional[int] = None,
    counter: Optional[PatternCounter] = None,
    method: str = "auto",
) -> ProbEstimate:
    """
    Bound Pr(sigma before tau) by the exact race counts up to length N.

    :param sigma: First pattern.
    :type sigma: Permutation
    :param tau: Second pattern, incomparable with sigma.
    :type tau: Permutation
    :param N: Truncation length. Defaults to the configured N.
    :type N: Optional[int]
    :param counter: Counter providing the race counts. Defaults to the shared counter.
    :type counter: Optional[PatternCounter]
    :param method: Counting method passed to the counter.
    :type method: str
    :return: The estimate with its verdict.
    :rtype: ProbEstimate
    :raises ComparablePatternsError: If the patterns are comparable.
    :raises CeilingExceededError: If N is above the enumeration ceiling.
    """
    counter = counter or default_counter()
    N = N if N is not None else counter.settings.default_N
    tables = counter.race_table(sigma, tau, N, method)
    sigma_counts = [tables.sigma_end[n] for n in range(N + 1)]
    tau_counts = [tables.tau_end[n] for n in range(N + 1)]
    sigma_mass, tau_mass, undecided = masses(
        sigma_counts, tau_counts, tables.avoiders[N], N
    )
    tie_by_counts = sigma_counts == tau_counts
    certificate = known_certificate(sigma, tau) if tie_by_counts else None
    if tie_by_counts and certificate is None:
        logger.warning(
            "%s and %s have equal counts up to n=%d but no tie certificate", sigma, tau, N
        )
    verdict = _verdict(sigma_mass, tau_mass, tie_by_counts, certificate)
    logger.debug("Pr(%s before %s) at N=%d: %s", sigma, tau, N, verdict.value)
    return ProbEstimate(
        sigma, tau, N, sigma_mass, tau_mass, undecided, verdict, certificate
    )
