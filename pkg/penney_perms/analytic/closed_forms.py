# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.

from __future__ import annotations
import math

from penney_perms.analytic.series import (
    SeriesMethod,
    SeriesValue,
    shifted_gaussian_integral,
)
from penney_perms.errors import UnsupportedError
from penney_perms.perm_core import Permutation

_P = Permutation.parse


def A(x: float) -> SeriesValue:
    """
    Exponential generating function of a_n = |Av_n^123(123, 213)|.
    """
    integral = shifted_gaussian_integral(x)
    growth = math.exp(x + x * x / 2)
    value = growth * ((1 + x) - (2 + x) * integral.value) - 1
    return SeriesValue(value, growth * (2 + x) * integral.error_estimate, SeriesMethod.QUADRATURE)


def B(x: float) -> SeriesValue:
    """
    Exponential generating function of b_n = |Av_n^312(123, 213)|.
    """
    integral = shifted_gaussian_integral(x)
    growth = math.exp(x + x * x / 2)
    value = growth * (1 - integral.value) - 1 - x * x / 2
    return SeriesValue(value, growth * integral.error_estimate, SeriesMethod.QUADRATURE)


def _swap(value: SeriesValue) -> SeriesValue:
    return SeriesValue(1 - value.value, value.error_estimate, value.method)


def closed_form_prob(sigma: Permutation, tau: Permutation) -> SeriesValue:
    """
    Pr(sigma before tau) for the pairs with an explicit formula.

    Supported, together with swapped and complemented versions: a pattern
    against its complement (1/2), 123 vs 213 (A(1)), 132 vs 231
    ((e^2 - 2e - 1)/2) and 12...k vs 21 (1/k!).

    :param sigma: First pattern.
    :type sigma: Permutation
    :param tau: Second pattern.
    :type tau: Permutation
    :return: The probability.
    :rtype: SeriesValue
    :raises UnsupportedError: For any other pair.
    """
    if tau == sigma.complement() and sigma != tau:
        return SeriesValue(0.5, 0.0, SeriesMethod.CLOSED_FORM)
    for first, second in ((sigma, tau), (sigma.complement(), tau.complement())):
        if (first, second) == (_P("123"), _P("213")):
            return A(1.0)
        if (first, second) == (_P("213"), _P("123")):
            return _swap(A(1.0))
        if (first, second) == (_P("132"), _P("231")):
            value = (math.e**2 - 2 * math.e - 1) / 2
            return SeriesValue(value, 0.0, SeriesMethod.CLOSED_FORM)
        if (first, second) == (_P("231"), _P("132")):
            value = 1 - (math.e**2 - 2 * math.e - 1) / 2
            return SeriesValue(value, 0.0, SeriesMethod.CLOSED_FORM)
        if second == _P("21") and first.is_identity() and len(first) >= 2:
            return SeriesValue(1 / math.factorial(len(first)), 0.0, SeriesMethod.CLOSED_FORM)
        if first == _P("21") and second.is_identity() and len(second) >= 2:
            return SeriesValue(
                1 - 1 / math.factorial(len(second)), 0.0, SeriesMethod.CLOSED_FORM
            )
    raise UnsupportedError(f"No closed form is known for Pr({sigma} before {tau})")
