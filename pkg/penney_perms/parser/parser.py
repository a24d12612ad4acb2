# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.

from __future__ import annotations
import logging

from penney_perms.errors import InvalidPatternError
from penney_perms.perm_core import Permutation, VincularPattern
from penney_perms.words import Word


class Parser:
    """
    Turns command-line arguments into patterns, words and sizes.
    """

    def __init__(self) -> None:
        self.logger = logging.getLogger(self.__class__.__name__)

    def parse_permutation(self, text: str) -> Permutation:
        """
        Parse a permutation in one-line notation, e.g. "2413" or "1,10,2,...".

        :param text: The argument.
        :type text: str
        :return: The permutation.
        :rtype: Permutation
        :raises InvalidPatternError: If the text is not a permutation.
        """
        if "-" in text:
            raise InvalidPatternError(f"'{text}' is a vincular pattern, a permutation is needed")
        permutation = Permutation.parse(text)
        self.logger.debug("Parsed permutation %s", permutation)
        return permutation

    def parse_pattern(self, text: str) -> VincularPattern:
        """
        Parse a pattern in dash notation: "132" is consecutive, "1-3-2" classical, "12-3" vincular.
        """
        return VincularPattern.parse(text)

    def parse_word(self, text: str, m: int) -> Word:
        return Word.parse(text, m)

    def parse_alphabet(self, text: str) -> int:
        """
        Parse an alphabet size between 1 and 10.

        :raises InvalidPatternError: If the text is not such a size.
        """
        try:
            m = int(text)
        except ValueError:
            raise InvalidPatternError(f"Cannot read '{text}' as an alphabet size")
        if not 1 <= m <= 10:
            raise InvalidPatternError(f"Alphabet size {m} is outside 1..10")
        return m
