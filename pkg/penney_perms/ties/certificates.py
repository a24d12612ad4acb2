# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.

from __future__ import annotations
import logging
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterator, Optional, Sequence, Tuple

from penney_perms.perm_core import (
    Permutation,
    non_j_overlapping,
    non_j_self_overlapping,
)

logger = logging.getLogger(__name__)


class CertificateKind(Enum):
    """
    The reason a pair of patterns is known to be tied.
    """

    COMPLEMENT = "Complement"
    IOTARHO = "Iotarho"
    NO_OVERLAP = "NoOverlap"
    ONE_K_PATTERN = "OneKPattern"
    MARKED_BIJECTION = "MarkedBijection"
    COUNTS_ONLY = "CountsOnly"


@dataclass(frozen=True)
class Certificate:
    """
    A machine-checked tie theorem for the ordered pair (sigma, tau).

    For IOTARHO, i is the index of the moved entry and iota_first tells
    whether sigma is the monotone side; for NO_OVERLAP, j is the length of
    the shared prefix. complemented means the theorem applies to the
    complements of both patterns.
    """

    kind: CertificateKind
    sigma: Permutation
    tau: Permutation
    j: Optional[int] = None
    i: Optional[int] = None
    iota_first: bool = False
    complemented: bool = False

    def inverse(self) -> Certificate:
        """
        The certificate of the swapped pair, whose bijection undoes this one.
        """
        return replace(
            self, sigma=self.tau, tau=self.sigma, iota_first=not self.iota_first
        )

    def __str__(self) -> str:
        if self.kind == CertificateKind.NO_OVERLAP:
            return f"{self.kind.value}(j={self.j})"
        if self.kind == CertificateKind.IOTARHO:
            return f"{self.kind.value}(i={self.i})"
        return self.kind.value


def iotarho_partner(k: int, i: int) -> Permutation:
    """
    The pattern 12...(i-1)(i+1)...k i, tied with 12...k.
    """
    assert 2 <= i <= k - 1, "The moved entry has to satisfy 2 <= i <= k-1"
    return Permutation(tuple(range(1, i)) + tuple(range(i + 1, k + 1)) + (i,))


def rhorho_pair(k: int, i: int, i_prime: int) -> Tuple[Permutation, Permutation]:
    """
    Two iotarho partners of the same length, tied by the shared-prefix theorem with j=1.
    """
    assert 2 <= i < i_prime <= k - 1, "Need 2 <= i < i' <= k-1"
    return iotarho_partner(k, i), iotarho_partner(k, i_prime)


def skip_two_pair(k: int) -> Tuple[Permutation, Permutation]:
    """
    134...(k-2)k2(k-1) and 134...(k-2)(k-1)2k, tied for every k >= 5.
    """
    assert k >= 5, "The family starts at k=5"
    head = (1,) + tuple(range(3, k - 1))
    return (
        Permutation(head + (k, 2, k - 1)),
        Permutation(head + (k - 1, 2, k)),
    )


def one_k_pair(
    k: int, alpha: Optional[Sequence[int]] = None, beta: Optional[Sequence[int]] = None
) -> Tuple[Permutation, Permutation]:
    """
    1 k alpha (k-2)(k-1) and 1 (k-1) beta (k-2) k.

    :param k: Pattern length, at least 4.
    :type k: int
    :param alpha: Arrangement of 2..k-3. Defaults to increasing.
    :type alpha: Optional[Sequence[int]]
    :param beta: Arrangement of 2..k-3. Defaults to increasing.
    :type beta: Optional[Sequence[int]]
    :return: The two patterns.
    :rtype: Tuple[Permutation, Permutation]
    """
    assert k >= 4, "The family starts at k=4"
    middle = tuple(range(2, k - 2))
    alpha = tuple(alpha) if alpha is not None else middle
    beta = tuple(beta) if beta is not None else middle
    return (
        Permutation((1, k) + alpha + (k - 2, k - 1)),
        Permutation((1, k - 1) + beta + (k - 2, k)),
    )


def _frames(sigma: Permutation, tau: Permutation) -> Iterator[Tuple[Permutation, Permutation, bool]]:
    yield sigma, tau, False
    yield sigma.complement(), tau.complement(), True


def _iotarho(sigma: Permutation, tau: Permutation) -> Optional[Certificate]:
    k = len(sigma)
    for a, b, complemented in _frames(sigma, tau):
        for i in range(2, k):
            rho = iotarho_partner(k, i)
            if a.is_identity() and b == rho:
                return Certificate(
                    CertificateKind.IOTARHO, sigma, tau, i=i, iota_first=True,
                    complemented=complemented,
                )
            if b.is_identity() and a == rho:
                return Certificate(
                    CertificateKind.IOTARHO, sigma, tau, i=i, iota_first=False,
                    complemented=complemented,
                )
    return None


def no_overlap_j(sigma: Permutation, tau: Permutation) -> Optional[int]:
    """
    Smallest j in 1..k-1 such that the patterns share their first j entries,
    are non-(j+1)-overlapping and each is non-(j+1)-self-overlapping.
    """
    k = len(sigma)
    for j in range(1, k):
        if sigma.entries[:j] != tau.entries[:j]:
            return None
        if (
            non_j_overlapping(sigma, tau, j + 1)
            and non_j_self_overlapping(sigma, j + 1)
            and non_j_self_overlapping(tau, j + 1)
        ):
            return j
    return None


def _one_k(sigma: Permutation, tau: Permutation) -> Optional[Certificate]:
    k = len(sigma)
    if k < 4:
        return None

    def shaped(a: Permutation, b: Permutation) -> bool:
        return (
            (a[0], a[1], a[-2], a[-1]) == (1, k, k - 2, k - 1)
            and (b[0], b[1], b[-2], b[-1]) == (1, k - 1, k - 2, k)
        )

    for a, b, complemented in _frames(sigma, tau):
        if shaped(a, b) or shaped(b, a):
            return Certificate(
                CertificateKind.ONE_K_PATTERN, sigma, tau, complemented=complemented
            )
    return None


def theorem_certificate(sigma: Permutation, tau: Permutation) -> Optional[Certificate]:
    """
    Check the tie theorems in a fixed order and return the first that applies.

    The order is: complement pair, iotarho shape, shared prefix without long
    overlaps (smallest j), 1k...(k-2)(k-1) shape.

    :param sigma: First pattern.
    :type sigma: Permutation
    :param tau: Second pattern of the same length k >= 3.
    :type tau: Permutation
    :return: The certificate, or None when no theorem applies.
    :rtype: Optional[Certificate]
    """
    if len(sigma) != len(tau) or sigma == tau:
        return None
    if tau == sigma.complement():
        return Certificate(CertificateKind.COMPLEMENT, sigma, tau)
    certificate = _iotarho(sigma, tau)
    if certificate is not None:
        return certificate
    j = no_overlap_j(sigma, tau)
    if j is not None:
        return Certificate(CertificateKind.NO_OVERLAP, sigma, tau, j=j)
    return _one_k(sigma, tau)


MARKED_PAIRS = frozenset(
    {
        frozenset({Permutation.parse("2134"), Permutation.parse("3241")}),
        frozenset({Permutation.parse("3421"), Permutation.parse("2314")}),
    }
)


def known_certificate(sigma: Permutation, tau: Permutation) -> Optional[CertificateKind]:
    """
    The kind of any proven tie for the pair, including the marked-permutation pairs.
    """
    certificate = theorem_certificate(sigma, tau)
    if certificate is not None:
        return certificate.kind
    if frozenset({sigma, tau}) in MARKED_PAIRS:
        return CertificateKind.MARKED_BIJECTION
    return None
