# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.

from __future__ import annotations
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Tuple

from penney_perms.errors import ComparablePatternsError, InvalidPatternError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Word:
    """
    A nonempty word over the alphabet {0, ..., m-1}.
    """

    letters: Tuple[int, ...]
    m: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(int(letter) for letter in self.letters))
        if not 1 <= self.m <= 10:
            raise InvalidPatternError(f"Alphabet size {self.m} is outside 1..10")
        if len(self.letters) == 0:
            raise InvalidPatternError("Words have to be nonempty")
        if any(not 0 <= letter < self.m for letter in self.letters):
            raise InvalidPatternError(f"Word {self} uses letters outside 0..{self.m - 1}")

    @classmethod
    def parse(cls, text: str, m: int) -> Word:
        """
        Read a digit string such as "100".

        :raises InvalidPatternError: If the text is not a digit string over the alphabet.
        """
        text = text.strip()
        if not text.isdigit():
            raise InvalidPatternError(f"Cannot read '{text}' as a word")
        return cls(tuple(int(char) for char in text), m)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "".join(str(letter) for letter in self.letters)

    def __repr__(self) -> str:
        return f"Word({self}, m={self.m})"

    def is_factor_of(self, other: Word) -> bool:
        k = len(self)
        return any(
            other.letters[i : i + k] == self.letters for i in range(len(other) - k + 1)
        )


def _same_alphabet(v: Word, w: Word) -> int:
    if v.m != w.m:
        raise InvalidPatternError(f"Words {v} and {w} use different alphabets")
    return v.m


def bifix_values(v: Word, w: Word) -> Tuple[FrozenSet[int], int]:
    """
    The correlation of v with w: lengths i for which the i-prefix of w is the
    i-suffix of v, and b(v, w) = sum of m^(i-1) over those lengths.

    bifix_values(w, w) gives the bifix set of w.

    :param v: Word whose suffixes are compared.
    :type v: Word
    :param w: Word whose prefixes are compared.
    :type w: Word
    :return: The set of lengths and its weight.
    :rtype: Tuple[FrozenSet[int], int]
    """
    m = _same_alphabet(v, w)
    lengths = frozenset(
        i
        for i in range(1, min(len(v), len(w)) + 1)
        if w.letters[:i] == v.letters[len(v) - i :]
    )
    return lengths, sum(m ** (i - 1) for i in lengths)


def require_incomparable_words(w: Word, v: Word) -> None:
    if w.is_factor_of(v) or v.is_factor_of(w):
        raise ComparablePatternsError(f"One of the words {w} and {v} is a factor of the other")


def conway_prob(w: Word, v: Word) -> Fraction:
    """
    Probability that w appears before v in uniform random letters.

    :raises ComparablePatternsError: If one word is a factor of the other.
    """
    _same_alphabet(w, v)
    require_incomparable_words(w, v)
    b_vv = bifix_values(v, v)[1]
    b_vw = bifix_values(v, w)[1]
    b_ww = bifix_values(w, w)[1]
    b_wv = bifix_values(w, v)[1]
    return Fraction(b_vv - b_vw, b_vv - b_vw + b_ww - b_wv)


def nielsen_ET(w: Word) -> int:
    """
    Expected number of letters drawn until w first appears: the sum of m^i over the bifix set.
    """
    lengths, _ = bifix_values(w, w)
    return sum(w.m**i for i in lengths)
