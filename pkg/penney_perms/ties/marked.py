# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.

from __future__ import annotations
import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

import numpy as np

from penney_perms.enumeration.oracle import (
    EnumerationPlan,
    pattern_code,
    unit_rows,
    window_codes,
)
from penney_perms.errors import MembershipError
from penney_perms.perm_core import Permutation, consecutive_occurrences

logger = logging.getLogger(__name__)

_P = Permutation.parse

# occurrences marked on the forward side and on the backward side
FORWARD_PAIR = (_P("2134"), _P("3241"))
BACKWARD_PAIR = (_P("2314"), _P("3421"))


def em_positions(sigma: Permutation, tau: Permutation, pi: Sequence[int]) -> Tuple[int, ...]:
    """
    The sorted 1-based start positions of the occurrences of sigma or tau in pi.
    """
    values = tuple(pi)
    return tuple(
        sorted(
            set(consecutive_occurrences(sigma, values))
            | set(consecutive_occurrences(tau, values))
        )
    )


@dataclass(frozen=True)
class MarkedPermutation:
    """
    A permutation with a chosen set of marked occurrences of sigma or tau.
    """

    pi: Permutation
    marks: Tuple[int, ...]
    sigma: Permutation
    tau: Permutation

    def __post_init__(self) -> None:
        marks = tuple(sorted(set(self.marks)))
        object.__setattr__(self, "marks", marks)
        missing = set(marks) - set(em_positions(self.sigma, self.tau, self.pi))
        if missing:
            raise MembershipError(
                f"Positions {sorted(missing)} of {self.pi} are not occurrences of "
                f"{self.sigma} or {self.tau}"
            )

    @property
    def is_tight_cluster(self) -> bool:
        """
        Marks start at 1, end at n-k+1, and adjacent marks overlap in at least two entries.
        """
        k = len(self.sigma)
        if len(self.marks) == 0:
            return False
        return (
            self.marks[0] == 1
            and self.marks[-1] == len(self.pi) - k + 1
            and all(b - a <= k - 2 for a, b in zip(self.marks, self.marks[1:]))
        )


def is_tight_cluster(
    pi: Permutation, marks: Iterable[int], sigma: Permutation, tau: Permutation
) -> bool:
    try:
        return MarkedPermutation(pi, tuple(marks), sigma, tau).is_tight_cluster
    except MembershipError:
        return False


def mark_blocks(marks: Iterable[int]) -> List[Tuple[int, ...]]:
    """
    Split sorted marks into maximal runs with common difference 2.
    """
    blocks: List[List[int]] = []
    for mark in sorted(marks):
        if blocks and mark - blocks[-1][-1] == 2:
            blocks[-1].append(mark)
        else:
            blocks.append([mark])
    return [tuple(block) for block in blocks]


def marked_bijection(
    pi: Permutation, marks: Iterable[int], direction: str = "forward"
) -> Permutation:
    """
    Move marked occurrences of 2134/3241 to marked occurrences of 2314/3421 (forward) or back.

    Within every block {j, j+2, ..., j+2(t-1)} of marks, the entries in positions
    j+2i-1 and j+2i are transposed for i = 1..t. First and last entries are fixed.

    :param pi: The permutation.
    :type pi: Permutation
    :param marks: Marked start positions, a subset of 1..n-3.
    :type marks: Iterable[int]
    :param direction: "forward" or "backward".
    :type direction: str
    :return: The image permutation.
    :rtype: Permutation
    :raises MembershipError: If a mark is not an occurrence of the source pair.
    """
    assert direction in ("forward", "backward"), f"Unknown direction '{direction}'"
    marks = tuple(sorted(set(marks)))
    n = len(pi)
    if any(not 1 <= mark <= n - 3 for mark in marks):
        raise MembershipError(f"Marks {marks} are not contained in 1..{n - 3}")
    sigma, tau = FORWARD_PAIR if direction == "forward" else BACKWARD_PAIR
    MarkedPermutation(pi, marks, sigma, tau)
    entries = list(pi.entries)
    for block in mark_blocks(marks):
        j = block[0]
        for i in range(1, len(block) + 1):
            # 1-based positions j+2i-1 and j+2i
            left, right = j + 2 * i - 2, j + 2 * i - 1
            entries[left], entries[right] = entries[right], entries[left]
    return Permutation(tuple(entries))


def cluster_shapes(t: int) -> Dict[str, Permutation]:
    """
    The four tight-cluster shapes of length 2t+2 with marks {1, 3, ..., 2t-1}.

    "alpha1": all marked occurrences are 3241; "alpha2": the last one is 2134;
    "alpha1_prime": all are 2314; "alpha2_prime": the last one is 3421.
    The transposition bijection maps alpha1 to alpha2_prime and alpha2 to alpha1_prime.
    """
    assert t >= 1, "Clusters need at least one marked occurrence"
    size = 2 * t + 2
    alpha1 = [0] * size
    for i in range(1, t + 2):
        alpha1[2 * i - 2] = t + 1 + i
        alpha1[2 * i - 1] = t + 2 - i
    alpha2 = [0] * size
    for i in range(1, t + 1):
        alpha2[2 * i - 2] = t + i
        alpha2[2 * i - 1] = t + 1 - i
    alpha2[-2], alpha2[-1] = 2 * t + 1, 2 * t + 2
    alpha1_prime = [0] * size
    alpha1_prime[0] = t + 1
    for i in range(1, t + 2):
        alpha1_prime[2 * i - 1] = t + 1 + i
    for i in range(1, t + 1):
        alpha1_prime[2 * i] = t + 1 - i
    alpha2_prime = [0] * size
    alpha2_prime[0] = t + 2
    for i in range(1, t + 1):
        alpha2_prime[2 * i - 1] = t + 2 + i
        alpha2_prime[2 * i] = t + 2 - i
    alpha2_prime[-1] = 1
    return {
        "alpha1": Permutation(tuple(alpha1)),
        "alpha2": Permutation(tuple(alpha2)),
        "alpha1_prime": Permutation(tuple(alpha1_prime)),
        "alpha2_prime": Permutation(tuple(alpha2_prime)),
    }


@dataclass
class InclusionExclusionReport:
    """
    Endpoint-refined counts behind the tie between 2134 and 3241.

    sigma_count / tau_count count Av_n^2134(2134,3241) and Av_n^2314(2314,3421)
    with pi_1 = a and pi_n = b; f_ge / g_ge hold the marked-superset counts
    for every {n-3} <= T <= [n-3], and the Moebius inversions recover the
    two counts from them.
    """

    n: int
    a: int
    b: int
    sigma_count: int
    tau_count: int
    f_ge: Dict[FrozenSet[int], int] = field(default_factory=dict)
    g_ge: Dict[FrozenSet[int], int] = field(default_factory=dict)
    sigma_by_inversion: int = 0
    tau_by_inversion: int = 0

    @property
    def marked_counts_agree(self) -> bool:
        keys = set(self.f_ge) | set(self.g_ge)
        return all(self.f_ge.get(key, 0) == self.g_ge.get(key, 0) for key in keys)

    @property
    def holds(self) -> bool:
        return (
            self.sigma_count == self.tau_count
            and self.marked_counts_agree
            and self.sigma_by_inversion == self.sigma_count
            and self.tau_by_inversion == self.tau_count
        )


def _side_counts(
    n: int, rows: np.ndarray, pair: Tuple[Permutation, Permutation], final: Permutation
) -> Tuple[Dict[Tuple[int, int], int], Dict[Tuple[int, int, FrozenSet[int]], int]]:
    # direct counts and superset counts, keyed by endpoints
    codes = window_codes(rows, 4)
    hits = np.isin(codes, [pattern_code(p) for p in pair])
    ending = codes[:, n - 4] == pattern_code(final)
    direct: Dict[Tuple[int, int], int] = defaultdict(int)
    superset: Dict[Tuple[int, int, FrozenSet[int]], int] = defaultdict(int)
    for index in np.flatnonzero(ending):
        row = rows[index]
        endpoints = (int(row[0]), int(row[-1]))
        em = [int(p) + 1 for p in np.flatnonzero(hits[index])]
        if em == [n - 3]:
            direct[endpoints] += 1
        others = [p for p in em if p != n - 3]
        for size in range(len(others) + 1):
            for chosen in itertools.combinations(others, size):
                superset[endpoints + (frozenset(chosen + (n - 3,)),)] += 1
    return direct, superset


@lru_cache(maxsize=4)
def _inclusion_exclusion_tables(n: int) -> Tuple:
    plan = EnumerationPlan.choose(n, 1)
    f_direct: Dict = defaultdict(int)
    g_direct: Dict = defaultdict(int)
    f_ge: Dict = defaultdict(int)
    g_ge: Dict = defaultdict(int)
    for digits in plan.work_units():
        rows = unit_rows(n, digits)
        for direct, superset, pair, final in (
            (f_direct, f_ge, FORWARD_PAIR, _P("2134")),
            (g_direct, g_ge, BACKWARD_PAIR, _P("2314")),
        ):
            unit_direct, unit_superset = _side_counts(n, rows, pair, final)
            for key, value in unit_direct.items():
                direct[key] += value
            for key, value in unit_superset.items():
                superset[key] += value
    logger.debug("Marked-occurrence tables for n=%d: %d superset keys", n, len(f_ge))
    return dict(f_direct), dict(g_direct), dict(f_ge), dict(g_ge)


def _moebius(superset: Dict[FrozenSet[int], int], n: int) -> int:
    # f_=({n-3}) = sum over T of (-1)^{|T|-1} f_>=(T)
    return sum((-1) ** (len(marks) - 1) * count for marks, count in superset.items())


def inclusion_exclusion_check(n: int, a: int, b: int) -> InclusionExclusionReport:
    """
    Check, by brute force over S_n, that 2134 and 2314 end equally many
    permutations avoiding their partner patterns with pi_1 = a and pi_n = b.

    :param n: Permutation length, at least 4.
    :type n: int
    :param a: First entry.
    :type a: int
    :param b: Last entry.
    :type b: int
    :return: The counts and the marked-superset comparison.
    :rtype: InclusionExclusionReport
    """
    assert n >= 4, "Need n >= 4"
    assert 1 <= a <= n and 1 <= b <= n, "Endpoints have to lie in 1..n"
    f_direct, g_direct, f_ge, g_ge = _inclusion_exclusion_tables(n)
    f_sets = {key[2]: value for key, value in f_ge.items() if key[:2] == (a, b)}
    g_sets = {key[2]: value for key, value in g_ge.items() if key[:2] == (a, b)}
    return InclusionExclusionReport(
        n,
        a,
        b,
        f_direct.get((a, b), 0),
        g_direct.get((a, b), 0),
        f_sets,
        g_sets,
        _moebius(f_sets, n),
        _moebius(g_sets, n),
    )
