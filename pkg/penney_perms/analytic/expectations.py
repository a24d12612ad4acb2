# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.

from __future__ import annotations
import logging
import math
from fractions import Fraction
from typing import Dict, Optional, Tuple

from penney_perms.analytic.series import (
    SeriesMethod,
    SeriesValue,
    eval_P,
    eval_P_prime,
    geometric_tail,
    monotone_length,
)
from penney_perms.enumeration import PatternCounter, default_counter
from penney_perms.errors import UnsupportedError
from penney_perms.perm_core import (
    PatternLike,
    Permutation,
    as_pattern,
    require_incomparable,
)

logger = logging.getLogger(__name__)

CLOSED_FORM = "closed-form"
SERIES = "series"

TWENTY_ONE = Permutation.parse("21")
ONE_TWO_THREE = Permutation.parse("123")


def _default_N(counter: PatternCounter, pattern: PatternLike) -> int:
    settings = counter.settings
    if as_pattern(pattern).is_consecutive:
        return min(settings.default_N, settings.ceiling_consecutive)
    return min(settings.default_N, settings.ceiling_vincular)


def _moments(
    pattern: PatternLike,
    method: str,
    N: Optional[int],
    counter: Optional[PatternCounter],
) -> Tuple[SeriesValue, SeriesValue]:
    if method == CLOSED_FORM:
        return eval_P(pattern), eval_P_prime(pattern)
    if method != SERIES:
        raise UnsupportedError(f"Unknown evaluation method '{method}'")
    counter = counter or default_counter()
    N = N if N is not None else _default_N(counter, pattern)
    table = counter.avoiders_table([pattern], N)
    return eval_P(table), eval_P_prime(table)


def expected_T(
    pattern: PatternLike,
    method: str = CLOSED_FORM,
    N: Optional[int] = None,
    counter: Optional[PatternCounter] = None,
) -> SeriesValue:
    """
    Expected number of draws until the first occurrence of a pattern, E T = P(1).

    :param pattern: Consecutive, vincular or classical pattern.
    :type pattern: PatternLike
    :param method: "closed-form" (monotone and 132-class patterns) or "series".
    :type method: str
    :param N: Truncation length of the series. Defaults to the configured N, capped by the ceiling.
    :type N: Optional[int]
    :param counter: Counter used for the series. Defaults to the shared counter.
    :type counter: Optional[PatternCounter]
    :return: The expectation.
    :rtype: SeriesValue
    :raises UnsupportedError: If no closed form is known for the pattern.
    """
    return _moments(pattern, method, N, counter)[0]


def variance_T(
    pattern: PatternLike,
    method: str = CLOSED_FORM,
    N: Optional[int] = None,
    counter: Optional[PatternCounter] = None,
) -> SeriesValue:
    """
    Variance of the first occurrence time, 2 P'(1) + P(1) - P(1)^2.
    """
    P, P_prime = _moments(pattern, method, N, counter)
    value = 2 * P_prime.value + P.value - P.value**2
    error = 2 * P_prime.error_estimate + (1 + 2 * P.value) * P.error_estimate
    method_tag = P.method if P.method == P_prime.method else SeriesMethod.SERIES_TRUNCATION
    return SeriesValue(value, error, method_tag)


def hit_time_pmf(
    pattern: PatternLike, N: int, counter: Optional[PatternCounter] = None
) -> Dict[int, Fraction]:
    """
    Exact distribution Pr(T = i) = alpha_{i-1}/(i-1)! - alpha_i/i! for i = 1..N.
    """
    counter = counter or default_counter()
    table = counter.avoiders_table([pattern], N)
    survival = {n: Fraction(table[n], math.factorial(n)) for n in range(N + 1)}
    return {i: survival[i - 1] - survival[i] for i in range(1, N + 1)}


def _partial_exponential(k: int) -> float:
    return math.fsum(1 / math.factorial(i) for i in range(k))


def _initial_fast_path(sigma: Permutation, tau: Permutation) -> Optional[float]:
    # E I for (iota_k, 21) and (21, 123), up to complementing both patterns
    for first, second in ((sigma, tau), (sigma.complement(), tau.complement())):
        if second == TWENTY_ONE and first.is_identity():
            k = len(first)
            return math.factorial(k) * (math.e - _partial_exponential(k))
        if first == TWENTY_ONE and second == ONE_TWO_THREE:
            angle = math.sqrt(3) / 2 + math.pi / 6
            return math.sqrt(3) * math.tan(angle) - 3
    return None


def expected_I(
    sigma: Permutation,
    tau: Permutation,
    N: Optional[int] = None,
    counter: Optional[PatternCounter] = None,
) -> SeriesValue:
    """
    Expected number of further draws until tau occurs, given that the first
    draws form an occurrence of sigma.

    The value is k! sum_{n >= k} |{pi in S_n starting with sigma, avoiding tau}| / n!,
    truncated at N. With sigma == tau the answer is k!, which is returned
    directly since that case is not a race.

    :param sigma: Pattern planted at the start.
    :type sigma: Permutation
    :param tau: Pattern waited for.
    :type tau: Permutation
    :param N: Truncation length. Defaults to the configured N.
    :type N: Optional[int]
    :param counter: Counter for the series. Defaults to the shared counter.
    :type counter: Optional[PatternCounter]
    :return: The expectation.
    :rtype: SeriesValue
    """
    k = len(sigma)
    if sigma == tau:
        logger.info("E I for %s to itself is k! = %d", sigma, math.factorial(k))
        return SeriesValue(float(math.factorial(k)), 0.0, SeriesMethod.CLOSED_FORM)
    require_incomparable(sigma, tau)
    fast = _initial_fast_path(sigma, tau)
    if fast is not None:
        return SeriesValue(fast, 0.0, SeriesMethod.CLOSED_FORM)
    counter = counter or default_counter()
    N = N if N is not None else _default_N(counter, sigma)
    assert N >= k, "The truncation length has to be at least the pattern length"
    table = counter.start_table(sigma, tau, N)
    terms = [table[n] / math.factorial(n) for n in range(k, N + 1)]
    scale = math.factorial(k)
    return SeriesValue(
        scale * math.fsum(terms),
        scale * geometric_tail(terms),
        SeriesMethod.SERIES_TRUNCATION,
    )


def expected_F_iota(k: int) -> Tuple[SeriesValue, SeriesValue]:
    """
    E F_{iota_k -> 21} and E F_{21 -> iota_k}.

    :param k: Length of the increasing pattern, at least 2.
    :type k: int
    :return: The two expectations.
    :rtype: Tuple[SeriesValue, SeriesValue]
    """
    assert k >= 2, "The increasing pattern needs k >= 2"
    head = _partial_exponential(k)
    factorial = math.factorial(k)
    forward = SeriesValue(factorial * (math.e - head), 0.0, SeriesMethod.CLOSED_FORM)
    P = eval_P(Permutation.identity(k))
    backward = SeriesValue(
        factorial / (factorial - 1) * (P.value - head),
        factorial / (factorial - 1) * P.error_estimate,
        P.method,
    )
    return forward, backward


def _iota_against_21(sigma: Permutation, tau: Permutation) -> Optional[Tuple[int, bool]]:
    # (k, whether sigma is the monotone one)
    for first, second in ((sigma, tau), (sigma.complement(), tau.complement())):
        if second == TWENTY_ONE and first.is_identity():
            return len(first), True
        if first == TWENTY_ONE and second.is_identity():
            return len(second), False
    return None


def prob_via_EF(sigma: Permutation, tau: Permutation) -> SeriesValue:
    """
    Pr(sigma before tau) = (E F_{tau->sigma} + E T_tau - E T_sigma) / (E F_{tau->sigma} + E F_{sigma->tau}).

    :raises UnsupportedError: Unless the pair is a monotone pattern against 21 (or complements).
    """
    shape = _iota_against_21(sigma, tau)
    if shape is None:
        raise UnsupportedError(f"E F closed forms are not available for {sigma} vs {tau}")
    k, sigma_is_iota = shape
    forward, backward = expected_F_iota(k)
    ET_iota = eval_P(Permutation.identity(k))
    ET_21 = math.e
    if sigma_is_iota:
        F_tau_sigma, F_sigma_tau = backward.value, forward.value
        ET_sigma, ET_tau = ET_iota.value, ET_21
    else:
        F_tau_sigma, F_sigma_tau = forward.value, backward.value
        ET_sigma, ET_tau = ET_21, ET_iota.value
    value = (F_tau_sigma + ET_tau - ET_sigma) / (F_tau_sigma + F_sigma_tau)
    error = 2 * (backward.error_estimate + ET_iota.error_estimate) / (
        F_tau_sigma + F_sigma_tau
    )
    method = SeriesMethod.CLOSED_FORM if error == 0.0 else SeriesMethod.SERIES_TRUNCATION
    return SeriesValue(value, error, method)
