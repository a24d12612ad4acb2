# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.

from __future__ import annotations
import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple, Union

from penney_perms.errors import DistinctValuesError, InvalidPatternError


@lru_cache(maxsize=None)
def rank_tuple(values: Tuple) -> Tuple[int, ...]:
    """
    Replace every entry of a tuple of pairwise distinct values by its rank (1-based).

    This is the standardization map on plain tuples. It is cached because the
    enumeration and matching code calls it on the same short windows over and over.

    :param values: Pairwise distinct, mutually comparable values.
    :type values: Tuple
    :return: The ranks of the values, in the original order.
    :rtype: Tuple[int, ...]
    """
    order = sorted(range(len(values)), key=values.__getitem__)
    ranks = [0] * len(values)
    for rank, index in enumerate(order, start=1):
        ranks[index] = rank
    return tuple(ranks)


def _split_entries(text: str) -> List[int]:
    text = text.strip()
    if "," in text:
        tokens = [token.strip() for token in text.split(",")]
    elif any(character.isspace() for character in text):
        tokens = text.split()
    else:
        tokens = list(text)
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise InvalidPatternError(f"Cannot read '{text}' as a sequence of integers")


@dataclass(frozen=True, order=True)
class Permutation:
    """
    A permutation of 1..n in one-line notation.
    """

    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(entry) for entry in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) == 0 or sorted(entries) != list(range(1, len(entries) + 1)):
            raise InvalidPatternError(
                f"{entries} is not a rearrangement of 1..{len(entries)}"
            )

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """
        Read one-line notation: digits without separators, or comma/space separated entries.

        :param text: The textual permutation, e.g. "2134" or "10,2,1,...".
        :type text: str
        :return: The permutation.
        :rtype: Permutation
        :raises InvalidPatternError: If the text is not a permutation.
        """
        return cls(tuple(_split_entries(text)))

    @classmethod
    def identity(cls, k: int) -> Permutation:
        """
        The increasing permutation 12...k.
        """
        return cls(tuple(range(1, k + 1)))

    @classmethod
    def decreasing(cls, k: int) -> Permutation:
        return cls(tuple(range(k, 0, -1)))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index: int) -> int:
        return self.entries[index]

    def __str__(self) -> str:
        if len(self.entries) <= 9:
            return "".join(str(entry) for entry in self.entries)
        return ",".join(str(entry) for entry in self.entries)

    def __repr__(self) -> str:
        return f"Permutation({self})"

    def complement(self) -> Permutation:
        """
        Replace every entry x by n+1-x.
        """
        n = len(self.entries)
        return Permutation(tuple(n + 1 - entry for entry in self.entries))

    def rotate(self) -> Permutation:
        """
        Move the last entry to the front, giving sigma_k sigma_1 ... sigma_{k-1}.
        """
        return Permutation(self.entries[-1:] + self.entries[:-1])

    def is_identity(self) -> bool:
        return self.entries == tuple(range(1, len(self.entries) + 1))

    def window(self, start: int, length: int) -> Tuple[int, ...]:
        """
        Return the entries at the 1-based positions start, ..., start+length-1.
        """
        return self.entries[start - 1 : start - 1 + length]


def standardize(values: Sequence) -> Permutation:
    """
    Relabel pairwise distinct values order-isomorphically onto 1..n.

    :param values: Nonempty sequence of pairwise distinct, comparable values.
    :type values: Sequence
    :return: The standardization st(values).
    :rtype: Permutation
    :raises DistinctValuesError: If two values coincide.
    """
    values = tuple(values)
    if len(values) == 0:
        raise DistinctValuesError("Cannot standardize an empty sequence")
    if len(set(values)) != len(values):
        raise DistinctValuesError(f"Values {values} are not pairwise distinct")
    return Permutation(rank_tuple(values))


def complement(pi: Permutation) -> Permutation:
    return pi.complement()


def permutations(k: int) -> Iterator[Permutation]:
    """
    Yield all permutations of length k in lexicographic order.
    """
    for entries in itertools.permutations(range(1, k + 1)):
        yield Permutation(entries)


@dataclass(frozen=True)
class VincularPattern:
    """
    A pattern together with the positions that are bonded to their right neighbour.

    Position i (1-based) in bonds means that the entries matching base[i] and
    base[i+1] must be adjacent in an occurrence.
    """

    base: Permutation
    bonds: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        bonds = frozenset(int(bond) for bond in self.bonds)
        object.__setattr__(self, "bonds", bonds)
        for bond in bonds:
            if not 1 <= bond <= len(self.base) - 1:
                raise InvalidPatternError(
                    f"Bond {bond} is outside 1..{len(self.base) - 1} for {self.base}"
                )

    @classmethod
    def consecutive(cls, base: Permutation) -> VincularPattern:
        return cls(base, frozenset(range(1, len(base))))

    @classmethod
    def classical(cls, base: Permutation) -> VincularPattern:
        return cls(base, frozenset())

    @classmethod
    def parse(cls, text: str) -> VincularPattern:
        """
        Read dash notation, e.g. "1-23": entries inside a block are adjacent.

        Without dashes the pattern is consecutive. Blocks of patterns longer
        than 9 list their entries separated by commas.

        :param text: The textual pattern.
        :type text: str
        :return: The pattern.
        :rtype: VincularPattern
        :raises InvalidPatternError: If the text does not describe a pattern.
        """
        entries: List[int] = []
        bonds = set()
        for block in text.strip().split("-"):
            if block.strip() == "":
                raise InvalidPatternError(f"Empty block in pattern '{text}'")
            block_entries = _split_entries(block)
            first = len(entries) + 1
            bonds.update(range(first, first + len(block_entries) - 1))
            entries.extend(block_entries)
        return cls(Permutation(tuple(entries)), frozenset(bonds))

    def __len__(self) -> int:
        return len(self.base)

    def __str__(self) -> str:
        separator = "" if len(self.base) <= 9 else ","
        pieces = []
        for start, length in self.blocks():
            entries = self.base.entries[start : start + length]
            pieces.append(separator.join(str(entry) for entry in entries))
        return "-".join(pieces)

    def __repr__(self) -> str:
        return f"VincularPattern({self})"

    @property
    def is_consecutive(self) -> bool:
        return len(self.bonds) == len(self.base) - 1

    @property
    def is_classical(self) -> bool:
        return len(self.bonds) == 0

    def blocks(self) -> Tuple[Tuple[int, int], ...]:
        """
        Maximal bonded runs as (0-based start, length) pairs.
        """
        blocks = []
        start = 0
        for index in range(1, len(self.base) + 1):
            if index == len(self.base) or index not in self.bonds:
                blocks.append((start, index - start))
                start = index
        return tuple(blocks)

    def complement(self) -> VincularPattern:
        return VincularPattern(self.base.complement(), self.bonds)


PatternLike = Union[Permutation, VincularPattern]


def as_pattern(pattern: PatternLike) -> VincularPattern:
    """
    Promote a permutation to the consecutive pattern it stands for.
    """
    if isinstance(pattern, VincularPattern):
        return pattern
    return VincularPattern.consecutive(pattern)


def consecutive_occurrences(sigma: Permutation, values: Sequence) -> Tuple[int, ...]:
    """
    Return the 1-based start positions of the windows of values that standardize to sigma.
    """
    values = tuple(values)
    k = len(sigma)
    return tuple(
        start + 1
        for start in range(len(values) - k + 1)
        if rank_tuple(values[start : start + k]) == sigma.entries
    )


def _find_witness(
    pattern: VincularPattern,
    values: Tuple,
    first: Optional[int] = None,
    last: Optional[int] = None,
) -> bool:
    # first / last pin the 0-based index of the first / last matched entry
    base = pattern.base.entries
    blocks = pattern.blocks()
    n = len(values)
    room = [0] * (len(blocks) + 1)
    for index in range(len(blocks) - 1, -1, -1):
        room[index] = room[index + 1] + blocks[index][1]
    chosen: List = []

    def consistent(q: int, value) -> bool:
        for r in range(q):
            if (value > chosen[r]) != (base[q] > base[r]):
                return False
        return True

    def place(block: int, low: int) -> bool:
        if block == len(blocks):
            return True
        start, length = blocks[block]
        high = n - room[block]
        candidates = range(low, high + 1)
        if block == 0 and first is not None:
            candidates = [first] if low <= first <= high else []
        if block == len(blocks) - 1 and last is not None:
            position = last - length + 1
            candidates = [c for c in candidates if c == position]
        for position in candidates:
            added = 0
            ok = True
            for offset in range(length):
                value = values[position + offset]
                if not consistent(start + offset, value):
                    ok = False
                    break
                chosen.append(value)
                added += 1
            if ok and place(block + 1, position + length):
                del chosen[len(chosen) - added :]
                return True
            del chosen[len(chosen) - added :]
        return False

    return place(0, 0)


def occurrences(pattern: PatternLike, pi: Union[Permutation, Sequence]) -> Tuple[int, ...]:
    """
    Return the 1-based start positions of the occurrences of a pattern in pi.

    For a vincular pattern, a position is reported when some witness
    subsequence respecting the bonds starts there.

    :param pattern: A permutation (read as a consecutive pattern) or a vincular pattern.
    :type pattern: PatternLike
    :param pi: The permutation (or any sequence of distinct values) to search.
    :type pi: Union[Permutation, Sequence]
    :return: The ordered start positions; empty when pi avoids the pattern.
    :rtype: Tuple[int, ...]
    """
    pattern = as_pattern(pattern)
    values = tuple(pi)
    if len(pattern) > len(values):
        return ()
    if pattern.is_consecutive:
        return consecutive_occurrences(pattern.base, values)
    return tuple(
        start + 1
        for start in range(len(values) - len(pattern) + 1)
        if _find_witness(pattern, values, first=start)
    )


def contains(pattern: PatternLike, pi: Union[Permutation, Sequence]) -> bool:
    pattern = as_pattern(pattern)
    values = tuple(pi)
    if len(pattern) > len(values):
        return False
    if pattern.is_consecutive:
        k = len(pattern)
        return any(
            rank_tuple(values[start : start + k]) == pattern.base.entries
            for start in range(len(values) - k + 1)
        )
    return _find_witness(pattern, values)


def avoids(pattern: PatternLike, pi: Union[Permutation, Sequence]) -> bool:
    return not contains(pattern, pi)


def ends_with_occurrence(pattern: PatternLike, values: Tuple) -> bool:
    """
    Check for an occurrence whose last matched entry is the last entry of values.
    """
    pattern = as_pattern(pattern)
    k = len(pattern)
    if k > len(values):
        return False
    if pattern.is_consecutive:
        return rank_tuple(values[-k:]) == pattern.base.entries
    return _find_witness(pattern, values, last=len(values) - 1)
