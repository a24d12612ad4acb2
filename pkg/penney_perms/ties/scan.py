# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.

from __future__ import annotations
import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from penney_perms.enumeration import PatternCounter, default_counter
from penney_perms.perm_core import Permutation, permutations
from penney_perms.ties.certificates import (
    CertificateKind,
    known_certificate,
    theorem_certificate,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TieCertificate:
    """
    A pair with equal race counts for every n <= N, labelled by the theorem explaining the tie.
    """

    sigma: Permutation
    tau: Permutation
    kind: CertificateKind
    N: int
    counts: Tuple[Tuple[int, int, int], ...] = field(default_factory=tuple)
    detail: str = ""

    @property
    def pair(self) -> frozenset:
        return frozenset({self.sigma, self.tau})

    def to_json(self) -> Dict:
        return {
            "sigma": str(self.sigma),
            "tau": str(self.tau),
            "kind": self.kind.value,
            "detail": self.detail,
            "N": self.N,
            "counts": [list(row) for row in self.counts],
        }


def tie_scan(
    k: int, N: int, counter: Optional[PatternCounter] = None
) -> List[TieCertificate]:
    """
    Find every unordered pair of S_k with equal race counts up to N.

    :param k: Pattern length, 3 to 5.
    :type k: int
    :param N: Largest length compared.
    :type N: int
    :param counter: Counter providing the race tables. Defaults to the shared counter.
    :type counter: Optional[PatternCounter]
    :return: The tied pairs in lexicographic order, labelled CountsOnly when no theorem applies.
    :rtype: List[TieCertificate]
    """
    assert 3 <= k <= 5, "Tie scans are supported for 3 <= k <= 5"
    counter = counter or default_counter()
    found: List[TieCertificate] = []
    for sigma, tau in itertools.combinations(permutations(k), 2):
        tables = counter.race_table(sigma, tau, N)
        rows = tuple(
            (n, tables.sigma_end[n], tables.tau_end[n]) for n in range(k, N + 1)
        )
        if any(row[1] != row[2] for row in rows):
            continue
        kind = known_certificate(sigma, tau)
        theorem = theorem_certificate(sigma, tau)
        if kind is None:
            logger.warning(
                "Pair %s, %s has equal counts up to n=%d but no known theorem", sigma, tau, N
            )
            kind = CertificateKind.COUNTS_ONLY
        detail = str(theorem) if theorem is not None else kind.value
        found.append(TieCertificate(sigma, tau, kind, N, rows, detail))
    logger.info("Found %d tied pairs of length %d up to n=%d", len(found), k, N)
    return found
