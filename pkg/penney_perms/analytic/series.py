# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.

from __future__ import annotations
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Optional, Tuple, Union

import numpy as np
from scipy import integrate, special

from penney_perms.enumeration import CountTable
from penney_perms.errors import EmptyCountTableError, UnsupportedError
from penney_perms.perm_core import PatternLike, Permutation, as_pattern

logger = logging.getLogger(__name__)

QUADRATURE_TOLERANCE = 1e-12
MONOTONE_TERM_CUTOFF = 1e-15


class SeriesMethod(Enum):
    """
    How a SeriesValue was obtained.
    """

    SERIES_TRUNCATION = "series-truncation"
    CLOSED_FORM = "closed-form"
    QUADRATURE = "quadrature"


@dataclass(frozen=True)
class SeriesValue:
    """
    A real number together with an error estimate and the method behind it.
    """

    value: float
    error_estimate: float
    method: SeriesMethod

    def __float__(self) -> float:
        return self.value

    def to_json(self) -> Dict:
        return {
            "value": self.value,
            "error_estimate": self.error_estimate,
            "method": self.method.value,
        }

    def __str__(self) -> str:
        return f"{self.value:.10g} ({self.method.value})"


def _quad(integrand: Callable[[float], float], upper: float) -> Tuple[float, float]:
    value, error = integrate.quad(
        integrand, 0.0, upper, epsabs=QUADRATURE_TOLERANCE, epsrel=0.0, limit=200
    )
    return float(value), float(error)


def gaussian_integral(z: float) -> SeriesValue:
    """
    The integral of exp(-t^2/2) over [0, z], by adaptive quadrature.
    """
    value, error = _quad(lambda t: math.exp(-t * t / 2), z)
    return SeriesValue(value, error, SeriesMethod.QUADRATURE)


def shifted_gaussian_integral(x: float) -> SeriesValue:
    """
    The integral of exp(-t - t^2/2) over [0, x], by adaptive quadrature.
    """
    value, error = _quad(lambda t: math.exp(-t - t * t / 2), x)
    return SeriesValue(value, error, SeriesMethod.QUADRATURE)


def simpson_integral(integrand: Callable[[np.ndarray], np.ndarray], upper: float, intervals: int) -> float:
    """
    Composite Simpson rule on an even number of equal intervals, the fallback rule.
    """
    assert intervals % 2 == 0, "Simpson's rule needs an even number of intervals"
    grid = np.linspace(0.0, upper, intervals + 1)
    return float(integrate.simpson(integrand(grid), x=grid))


def quadrature_self_test(tolerance: float = 1e-10, intervals: int = 2000) -> bool:
    """
    Compare the adaptive quadrature of exp(-t^2/2) on [0, 1] with a ten times
    finer Simpson rule and with the error function.

    :param tolerance: Largest accepted absolute discrepancy.
    :type tolerance: float
    :param intervals: Base number of Simpson intervals, refined tenfold.
    :type intervals: int
    :return: Whether all three values agree.
    :rtype: bool
    """
    adaptive = gaussian_integral(1.0).value
    fallback = simpson_integral(lambda t: np.exp(-t * t / 2), 1.0, 10 * intervals)
    reference = math.sqrt(math.pi / 2) * special.erf(1 / math.sqrt(2))
    worst = max(abs(adaptive - fallback), abs(adaptive - reference))
    logger.debug("Quadrature self-test discrepancy %.3e", worst)
    return worst <= tolerance


def monotone_length(pattern: PatternLike) -> Optional[int]:
    """
    k if the pattern is the consecutive pattern 12...k or k...21, else None.
    """
    pattern = as_pattern(pattern)
    if not pattern.is_consecutive:
        return None
    base = pattern.base
    if base.is_identity() or base.complement().is_identity():
        return len(base)
    return None


_WILF_132 = {Permutation.parse(text) for text in ("132", "213", "231", "312")}


def closed_form_kind(pattern: PatternLike) -> Optional[str]:
    """
    Name of the closed form available for P_pattern: "monotone", "132" or None.
    """
    if monotone_length(pattern) is not None:
        return "monotone"
    pattern = as_pattern(pattern)
    if pattern.is_consecutive and pattern.base in _WILF_132:
        return "132"
    return None


def _monotone_denominator(k: int, z: float) -> Tuple[float, float, float]:
    # sum_j z^{jk}/(jk)! - z^{jk+1}/(jk+1)!, its derivative and the first dropped term
    total = 0.0
    derivative = 0.0
    j = 0
    while True:
        even = z ** (j * k) / math.factorial(j * k)
        odd = z ** (j * k + 1) / math.factorial(j * k + 1)
        if j > 0 and even < MONOTONE_TERM_CUTOFF:
            return total, derivative, even
        total += even - odd
        derivative -= even
        if j > 0:
            derivative += z ** (j * k - 1) / math.factorial(j * k - 1)
        j += 1


def log_derivative_123(z: float) -> float:
    """
    P'_123(z) / P_123(z) = 1/2 + (sqrt(3)/2) tan(sqrt(3) z / 2 + pi/6).
    """
    return 0.5 + math.sqrt(3) / 2 * math.tan(math.sqrt(3) * z / 2 + math.pi / 6)


def _closed_P(pattern: PatternLike, z: float) -> Tuple[SeriesValue, SeriesValue]:
    kind = closed_form_kind(pattern)
    if kind is None:
        raise UnsupportedError(f"No closed form of P is known for {pattern}")
    if kind == "132":
        integral = gaussian_integral(z)
        P = 1 / (1 - integral.value)
        error = integral.error_estimate * P * P
        P_prime = math.exp(-z * z / 2) * P * P
        return (
            SeriesValue(P, error, SeriesMethod.QUADRATURE),
            SeriesValue(P_prime, 2 * P * error, SeriesMethod.QUADRATURE),
        )
    k = monotone_length(pattern)
    if k == 1:
        raise UnsupportedError("The pattern 1 occurs at the first draw")
    if k == 2:
        P = math.exp(z)
        return (
            SeriesValue(P, 0.0, SeriesMethod.CLOSED_FORM),
            SeriesValue(P, 0.0, SeriesMethod.CLOSED_FORM),
        )
    if k == 3:
        P = (
            math.sqrt(3) / 2 * math.exp(z / 2)
            / math.cos(math.sqrt(3) * z / 2 + math.pi / 6)
        )
        return (
            SeriesValue(P, 0.0, SeriesMethod.CLOSED_FORM),
            SeriesValue(P * log_derivative_123(z), 0.0, SeriesMethod.CLOSED_FORM),
        )
    denominator, derivative, dropped = _monotone_denominator(k, z)
    P = 1 / denominator
    return (
        SeriesValue(P, dropped * P * P, SeriesMethod.SERIES_TRUNCATION),
        SeriesValue(-derivative * P * P, dropped * P * P, SeriesMethod.SERIES_TRUNCATION),
    )


def geometric_tail(terms: List[float]) -> float:
    """
    Estimate the sum of the terms after the last one by a geometric series
    whose ratio is the larger of the last two term ratios.

    Returns inf, with a warning, when the ratio is not below 1 or the terms
    do not allow one to be formed.
    """
    tail = [term for term in terms if term != 0.0][-3:]
    if len(tail) < 3:
        logger.warning("Too few nonzero terms for a geometric tail estimate")
        return math.inf
    ratio = max(tail[1] / tail[0], tail[2] / tail[1])
    if not 0.0 <= ratio < 1.0:
        logger.warning("Series terms do not decay (ratio %.4f), no tail estimate", ratio)
        return math.inf
    return abs(tail[2]) * ratio / (1 - ratio)


def series_sum(coefficients: Dict[int, int], z: float, shift: int = 0) -> SeriesValue:
    """
    Sum of coefficients[n + shift] z^n / n! over the available n, with a
    geometric tail estimate.

    :param coefficients: Exact counts indexed by n.
    :type coefficients: Dict[int, int]
    :param z: Evaluation point.
    :type z: float
    :param shift: Index shift, 1 for the derivative series.
    :type shift: int
    :return: The truncated sum.
    :rtype: SeriesValue
    """
    top = max(coefficients)
    terms = [
        coefficients[n + shift] * z**n / math.factorial(n)
        for n in range(0, top - shift + 1)
    ]
    return SeriesValue(
        math.fsum(terms), geometric_tail(terms), SeriesMethod.SERIES_TRUNCATION
    )


def _require_counts(table: CountTable) -> None:
    if len(table) == 0:
        raise EmptyCountTableError(f"No counts available for {table.key}")
    assert table.covers(table.max_n), "Count tables have to cover 0..max_n"


def eval_P(target: Union[PatternLike, CountTable], z: float = 1.0) -> SeriesValue:
    """
    Evaluate the generating function P(z) = sum_n alpha_n z^n / n!.

    :param target: A pattern with a closed form, or a CountTable of avoider counts.
    :type target: Union[PatternLike, CountTable]
    :param z: Evaluation point in [0, 1].
    :type z: float
    :return: The value.
    :rtype: SeriesValue
    :raises UnsupportedError: If the pattern has no closed form.
    :raises EmptyCountTableError: If the table holds no counts.
    """
    assert 0.0 <= z <= 1.0, "P is only evaluated on [0, 1]"
    if isinstance(target, CountTable):
        _require_counts(target)
        return series_sum(target.counts, z)
    return _closed_P(target, z)[0]


def eval_P_prime(target: Union[PatternLike, CountTable], z: float = 1.0) -> SeriesValue:
    """
    Evaluate the derivative P'(z), in the same way as eval_P.
    """
    assert 0.0 <= z <= 1.0, "P is only evaluated on [0, 1]"
    if isinstance(target, CountTable):
        _require_counts(target)
        if target.max_n < 1:
            raise EmptyCountTableError(f"Too few counts in {target.key} for P'")
        return series_sum(target.counts, z, shift=1)
    return _closed_P(target, z)[1]
