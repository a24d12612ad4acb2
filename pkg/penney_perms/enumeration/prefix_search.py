# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.

from typing import Dict, Iterator, Sequence, Tuple

from penney_perms.perm_core import VincularPattern, ends_with_occurrence


def _grow(prefix: Tuple[int, ...], patterns: Sequence[VincularPattern], n: int) -> Iterator[Tuple[int, ...]]:
    size = len(prefix) + 1
    for r in range(1, size + 1):
        grown = tuple(v + (v >= r) for v in prefix) + (r,)
        if any(ends_with_occurrence(p, grown) for p in patterns):
            continue
        if size == n:
            yield grown
        else:
            yield from _grow(grown, patterns, n)


def iter_pattern_avoiders(n: int, patterns: Sequence[VincularPattern]) -> Iterator[Tuple[int, ...]]:
    """
    Yield the permutations of length n avoiding every pattern, by depth-first growth.

    Avoidance is closed under taking prefixes, so a branch is cut as soon as an
    occurrence ends at the newly appended entry.

    :param n: Permutation length.
    :type n: int
    :param patterns: Vincular (or consecutive, or classical) patterns.
    :type patterns: Sequence[VincularPattern]
    :return: The avoiders, as tuples.
    :rtype: Iterator[Tuple[int, ...]]
    """
    if n == 0:
        yield ()
        return
    yield from _grow((), patterns, n)


def count_pattern_avoiders(N: int, patterns: Sequence[VincularPattern]) -> Dict[int, int]:
    """
    Count avoiders of every length 0..N with a single depth-first traversal.
    """
    counts = {n: 0 for n in range(N + 1)}
    counts[0] = 1
    stack = [()]
    while stack:
        prefix = stack.pop()
        size = len(prefix) + 1
        if size > N:
            continue
        for r in range(1, size + 1):
            grown = tuple(v + (v >= r) for v in prefix) + (r,)
            if any(ends_with_occurrence(p, grown) for p in patterns):
                continue
            counts[size] += 1
            stack.append(grown)
    return counts
