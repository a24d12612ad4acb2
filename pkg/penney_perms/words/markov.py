# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.

from __future__ import annotations
import logging
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import sympy

from penney_perms.words.words import Word, require_incomparable_words

Letters = Tuple[int, ...]


def _to_fraction(value: sympy.Rational) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


class MarkovChainOracle:
    """
    Exact absorbing Markov chain for letter races.

    Transient states are the proper prefixes of the target words (the empty
    prefix included); a state moves to the longest suffix of state+letter that
    is a prefix of some target, and a full target word is absorbing. The
    linear systems are solved over the rationals with sympy.
    """

    def __init__(self, targets: Sequence[Word]) -> None:
        """
        Initialize the chain.

        :param targets: Pairwise incomparable words over one alphabet.
        :type targets: Sequence[Word]
        """
        self.logger = logging.getLogger(self.__class__.__name__)
        assert len(targets) >= 1, "At least one target word is needed"
        self.targets = list(targets)
        self.m = self.targets[0].m
        assert all(word.m == self.m for word in self.targets), "Targets need one alphabet"
        for i, first in enumerate(self.targets):
            for second in self.targets[i + 1 :]:
                require_incomparable_words(first, second)
        prefixes = {
            word.letters[:length]
            for word in self.targets
            for length in range(len(word))
        }
        self.states: List[Letters] = sorted(prefixes, key=lambda state: (len(state), state))
        self.index: Dict[Letters, int] = {state: i for i, state in enumerate(self.states)}
        self.absorbing: Dict[Letters, int] = {
            word.letters: i for i, word in enumerate(self.targets)
        }

    def step(self, state: Letters, letter: int) -> Letters:
        extended = state + (letter,)
        for start in range(len(extended) + 1):
            suffix = extended[start:]
            if suffix in self.absorbing or suffix in self.index:
                return suffix
        return ()

    def _solve(self, rhs: Sequence[Sequence[sympy.Rational]], weights: Sequence[Sequence]) -> sympy.Matrix:
        size = len(self.states)
        system = sympy.eye(size)
        constant = sympy.Matrix(rhs)
        share = sympy.Rational(1, self.m)
        for row, state in enumerate(self.states):
            for letter in range(self.m):
                target = self.step(state, letter)
                if target in self.index:
                    system[row, self.index[target]] -= share
                else:
                    for column in range(constant.cols):
                        constant[row, column] += share * weights[self.absorbing[target]][column]
        self.logger.debug("Solving a %d-state absorbing chain", size)
        return system.LUsolve(constant)

    def absorption_probabilities(self) -> List[Fraction]:
        """
        Probability, from the empty prefix, that each target is the first to appear.
        """
        count = len(self.targets)
        rhs = [[sympy.Integer(0)] * count for _ in self.states]
        weights = [[sympy.Integer(int(i == j)) for j in range(count)] for i in range(count)]
        solution = self._solve(rhs, weights)
        return [_to_fraction(solution[0, j]) for j in range(count)]

    def expected_time(self) -> Fraction:
        """
        Expected number of letters until some target appears.
        """
        rhs = [[sympy.Integer(1)] for _ in self.states]
        weights = [[sympy.Integer(0)] for _ in self.targets]
        return _to_fraction(self._solve(rhs, weights)[0, 0])


def markov_race(w: Word, v: Word) -> Fraction:
    """
    Probability that w appears before v, from the absorbing chain.
    """
    return MarkovChainOracle([w, v]).absorption_probabilities()[0]


def markov_ET(w: Word) -> Fraction:
    return MarkovChainOracle([w]).expected_time()
