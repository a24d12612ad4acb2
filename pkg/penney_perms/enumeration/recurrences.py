# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.

from __future__ import annotations
import logging
from enum import Enum
from typing import Dict, List, Tuple, Union

from penney_perms.enumeration.count_table import CountTable
from penney_perms.errors import UnsupportedError
from penney_perms.perm_core import Permutation

logger = logging.getLogger(__name__)


class RecurrenceFamily(Enum):
    """
    Enumeration families of length-3 patterns with a known recurrence.

    The value lists the final pattern followed by the avoided patterns.
    """

    B_312 = ("312", "123", "213")
    A_123_213 = ("123", "123", "213")
    D_123_231 = ("123", "123", "231")
    S_132_213 = ("132", "132", "213")
    T_123_312 = ("123", "123", "312")
    E_132_231 = ("132", "132", "231")

    @property
    def end(self) -> Permutation:
        return Permutation.parse(self.value[0])

    @property
    def avoided(self) -> Tuple[Permutation, ...]:
        return tuple(Permutation.parse(text) for text in self.value[1:])

    @property
    def pair(self) -> Tuple[Permutation, Permutation]:
        """
        The race (sigma, tau) whose sigma-end counts the family gives.

        :raises UnsupportedError: For B_312, which ends with a pattern outside its avoided pair.
        """
        if self is RecurrenceFamily.B_312:
            raise UnsupportedError("b_n counts permutations ending with 312, not a race")
        sigma, tau = self.avoided
        return (sigma, tau) if sigma == self.end else (tau, sigma)


def family_for_pair(sigma: Permutation, tau: Permutation) -> RecurrenceFamily:
    """
    Find the family counting Av_n^sigma(sigma, tau).

    :raises UnsupportedError: If no recurrence is known for the ordered pair.
    """
    for family in RecurrenceFamily:
        if family is RecurrenceFamily.B_312:
            continue
        if family.pair == (sigma, tau):
            return family
    raise UnsupportedError(f"No recurrence is known for {sigma} vs {tau}")


def b_sequence(N: int) -> List[int]:
    """
    b_n for n = 0..N, from b_n = b_{n-1} + (n-1) b_{n-2} (n >= 5).
    """
    b = [0, 0, 0, 1, 4][: N + 1]
    for n in range(5, N + 1):
        b.append(b[n - 1] + (n - 1) * b[n - 2])
    return b


def a_sequence(N: int) -> List[int]:
    """
    a_n for n = 0..N, from a_n = a_{n-1} + (n-1) a_{n-2} + b_{n-1} (n >= 5).
    """
    b = b_sequence(N)
    a = [0, 0, 0, 1, 2][: N + 1]
    for n in range(5, N + 1):
        a.append(a[n - 1] + (n - 1) * a[n - 2] + b[n - 1])
    return a


def d_table(N: int) -> Dict[int, Dict[int, int]]:
    """
    d(n, i): permutations in Av_n^123(123, 231) with first entry i, for n = 3..N.
    """
    d: Dict[int, Dict[int, int]] = {
        3: {1: 1, 2: 0, 3: 0},
        4: {1: 0, 2: 1, 3: 1, 4: 1},
    }
    for n in range(5, N + 1):
        d[n] = {
            i: sum(d[n - 1][j] for j in range(1, i))
            + sum((n - 1 - j) * d[n - 2][j] for j in range(i, n - 1))
            for i in range(1, n + 1)
        }
    return {n: row for n, row in d.items() if n <= N}


def _pairs(n: int) -> List[Tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]


def s_table(N: int) -> Dict[int, Dict[Tuple[int, int], int]]:
    """
    s(n; i, j): permutations in Av_n^132(132, 213) starting with i then j, for n = 3..N.
    """
    s = {3: {pair: int(pair == (1, 3)) for pair in _pairs(3)}}
    for n in range(4, N + 1):
        previous = s[n - 1]
        row = {}
        for i, j in _pairs(n):
            if i > j:
                ells = list(range(1, j)) + list(range(j + 1, i))
                row[(i, j)] = sum(previous[(j, ell)] for ell in ells)
            else:
                ells = list(range(1, i)) + list(range(j, n))
                row[(i, j)] = sum(previous[(j - 1, ell)] for ell in ells)
        s[n] = row
    return {n: row for n, row in s.items() if n <= N}


def t_table(N: int) -> Dict[int, Dict[Tuple[int, int], int]]:
    """
    t(n; i, j): permutations in Av_n^123(123, 312) starting with i then j, for n = 3..N.
    """
    t = {3: {pair: int(pair == (1, 2)) for pair in _pairs(3)}}
    for n in range(4, N + 1):
        previous = t[n - 1]
        row = {}
        for i, j in _pairs(n):
            if i > j:
                ells = list(range(1, j)) + list(range(i, n))
                row[(i, j)] = sum(previous[(j, ell)] for ell in ells)
            else:
                row[(i, j)] = sum(previous[(j - 1, ell)] for ell in range(1, j - 1))
        t[n] = row
    return {n: row for n, row in t.items() if n <= N}


FamilyLike = Union[RecurrenceFamily, Tuple[Permutation, Permutation]]


def _resolve(family: FamilyLike) -> RecurrenceFamily:
    if isinstance(family, RecurrenceFamily):
        return family
    return family_for_pair(*family)


def recurrence_table(family: FamilyLike, N: int) -> Dict[int, Union[int, Dict]]:
    """
    The family's table for n = 3..N: plain counts for b, a and 2^(n-1) - n,
    the refined d, s and t tables otherwise.

    :param family: A family or an ordered pattern pair.
    :type family: FamilyLike
    :param N: Largest length, at least 3.
    :type N: int
    :return: Mapping from n to the count or the refined row.
    :rtype: Dict[int, Union[int, Dict]]
    :raises UnsupportedError: If the pair has no recurrence.
    """
    assert N >= 3, "Recurrence tables start at n=3"
    family = _resolve(family)
    logger.debug("Evaluating the %s recurrence up to n=%d", family.name, N)
    if family is RecurrenceFamily.B_312:
        sequence = b_sequence(N)
        return {n: sequence[n] for n in range(3, N + 1)}
    if family is RecurrenceFamily.A_123_213:
        sequence = a_sequence(N)
        return {n: sequence[n] for n in range(3, N + 1)}
    if family is RecurrenceFamily.E_132_231:
        return {n: 2 ** (n - 1) - n for n in range(3, N + 1)}
    if family is RecurrenceFamily.D_123_231:
        return d_table(N)
    if family is RecurrenceFamily.S_132_213:
        return s_table(N)
    return t_table(N)


def recurrence_counts(family: FamilyLike, n: int) -> int:
    """
    Total size of the family at length n (row sums for the refined tables).
    """
    assert n >= 3, "Recurrence counts start at n=3"
    row = recurrence_table(family, n)[n]
    return sum(row.values()) if isinstance(row, dict) else row


def recurrence_count_table(family: FamilyLike, N: int) -> CountTable:
    """
    Totals for n = 0..N as a CountTable, with zeros below n=3.
    """
    family = _resolve(family)
    counts = {n: 0 for n in range(min(N, 2) + 1)}
    if N >= 3:
        for n, row in recurrence_table(family, N).items():
            counts[n] = sum(row.values()) if isinstance(row, dict) else row
    return CountTable("recurrence", family.name, counts)
