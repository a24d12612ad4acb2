# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.

from __future__ import annotations
from dataclasses import dataclass
from typing import FrozenSet

from penney_perms.errors import ComparablePatternsError
from penney_perms.perm_core.permutation import (
    Permutation,
    consecutive_occurrences,
    rank_tuple,
)


@dataclass(frozen=True)
class OverlapSet:
    """
    The lengths i at which the suffix of sigma of length i standardizes like
    the prefix of tau of length i.
    """

    sigma: Permutation
    tau: Permutation
    positions: FrozenSet[int]

    def __contains__(self, i: int) -> bool:
        return i in self.positions

    def within(self, j: int) -> bool:
        """
        Whether every overlap length is at most j.
        """
        return all(i <= j for i in self.positions)

    @property
    def largest(self) -> int:
        return max(self.positions, default=0)


def overlap_set(sigma: Permutation, tau: Permutation) -> OverlapSet:
    """
    Compute the overlap set B_{sigma,tau}.

    :param sigma: The pattern whose suffixes are compared.
    :type sigma: Permutation
    :param tau: The pattern whose prefixes are compared.
    :type tau: Permutation
    :return: The overlap set, with lengths 1 <= i < min(|sigma|, |tau|).
    :rtype: OverlapSet
    """
    k = len(sigma)
    positions = frozenset(
        i
        for i in range(1, min(k, len(tau)))
        if rank_tuple(sigma.entries[k - i :]) == rank_tuple(tau.entries[:i])
    )
    return OverlapSet(sigma, tau, positions)


def non_j_overlapping(sigma: Permutation, tau: Permutation, j: int) -> bool:
    """
    Whether B_{sigma,tau} and B_{tau,sigma} are both contained in {1, ..., j-1}.

    With sigma == tau this is the non-j-self-overlapping condition.

    :param sigma: First pattern.
    :type sigma: Permutation
    :param tau: Second pattern.
    :type tau: Permutation
    :param j: Threshold, at least 2.
    :type j: int
    :return: True if no overlap of length j or more exists.
    :rtype: bool
    """
    assert j >= 2, "The overlap threshold j has to be at least 2"
    return overlap_set(sigma, tau).within(j - 1) and overlap_set(tau, sigma).within(
        j - 1
    )


def non_j_self_overlapping(sigma: Permutation, j: int) -> bool:
    return non_j_overlapping(sigma, sigma, j)


def incomparable(sigma: Permutation, tau: Permutation) -> bool:
    """
    Whether neither pattern occurs consecutively inside the other.
    """
    shorter, longer = sorted((sigma, tau), key=len)
    return len(consecutive_occurrences(shorter, longer.entries)) == 0


def require_incomparable(sigma: Permutation, tau: Permutation) -> None:
    """
    :raises ComparablePatternsError: If one pattern occurs in the other.
    """
    if not incomparable(sigma, tau):
        raise ComparablePatternsError(f"Patterns {sigma} and {tau} are comparable")
