# Copyright (c) 2024 The penney_perms developers.
#                    All rights reserved.
#
# Use of this source code is governed by a BSD-style license that can be
# found in the LICENSE file.

from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from penney_perms.enumeration import PatternCounter, default_counter
from penney_perms.errors import MembershipError, UnsupportedError
from penney_perms.perm_core import Permutation, consecutive_occurrences
from penney_perms.ties.certificates import (
    Certificate,
    CertificateKind,
    theorem_certificate,
)

logger = logging.getLogger(__name__)


def is_end_member(pi: Permutation, sigma: Permutation, tau: Permutation) -> bool:
    """
    Whether pi is in Av_n^sigma(sigma, tau): its only occurrence of either pattern is a final sigma.
    """
    n = len(pi)
    if n < len(sigma):
        return False
    sigma_hits = consecutive_occurrences(sigma, pi.entries)
    tau_hits = consecutive_occurrences(tau, pi.entries)
    return sigma_hits == (n - len(sigma) + 1,) and tau_hits == ()


def rearrange_tail(entries: Tuple[int, ...], pattern: Permutation) -> Tuple[int, ...]:
    """
    Reorder the last k entries so that they form an occurrence of pattern.
    """
    k = len(pattern)
    head, tail = entries[:-k], sorted(entries[-k:])
    return head + tuple(tail[rank - 1] for rank in pattern.entries)


def _iotarho_map(entries: Tuple[int, ...], certificate: Certificate) -> Tuple[int, ...]:
    k = len(certificate.sigma)
    position = len(entries) - k + certificate.i - 1
    if certificate.iota_first:
        return entries[:position] + entries[position + 1 :] + (entries[position],)
    return entries[:position] + (entries[-1],) + entries[position:-1]


def _complement_entries(entries: Tuple[int, ...]) -> Tuple[int, ...]:
    n = len(entries)
    return tuple(n + 1 - entry for entry in entries)


def apply_tie_bijection(certificate: Certificate, pi: Permutation) -> Permutation:
    """
    Map a member of Av_n^sigma(sigma, tau) to a member of Av_n^tau(sigma, tau).

    :param certificate: Certificate of the ordered pair (sigma, tau).
    :type certificate: Certificate
    :param pi: Member of the source set.
    :type pi: Permutation
    :return: The image, a member of the target set.
    :rtype: Permutation
    :raises MembershipError: If pi is not in the source set.
    :raises UnsupportedError: For certificates without an explicit bijection.
    """
    sigma, tau = certificate.sigma, certificate.tau
    if not is_end_member(pi, sigma, tau):
        raise MembershipError(f"{pi} is not in Av^{sigma}({sigma},{tau})")
    kind = certificate.kind
    if kind == CertificateKind.COMPLEMENT:
        return pi.complement()
    if kind == CertificateKind.IOTARHO:
        entries = pi.entries
        if certificate.complemented:
            entries = _complement_entries(entries)
        entries = _iotarho_map(entries, certificate)
        if certificate.complemented:
            entries = _complement_entries(entries)
        return Permutation(entries)
    if kind in (CertificateKind.NO_OVERLAP, CertificateKind.ONE_K_PATTERN):
        return Permutation(rearrange_tail(pi.entries, tau))
    raise UnsupportedError(f"No direct bijection is implemented for {kind.value} ties")


def invert_tie_bijection(certificate: Certificate, pi: Permutation) -> Permutation:
    """
    Undo apply_tie_bijection: map a member of Av_n^tau(sigma, tau) back.
    """
    return apply_tie_bijection(certificate.inverse(), pi)


@dataclass(frozen=True)
class BijectionReport:
    """
    Result of checking a tie bijection on all of Av_n^sigma(sigma, tau).
    """

    sigma: Permutation
    tau: Permutation
    n: int
    kind: CertificateKind
    source_size: int
    target_size: int
    injective: bool
    complete: bool
    round_trip: bool

    @property
    def ok(self) -> bool:
        return self.injective and self.complete and self.round_trip

    def to_json(self) -> Dict:
        return {
            "sigma": str(self.sigma),
            "tau": str(self.tau),
            "n": self.n,
            "kind": self.kind.value,
            "source_size": self.source_size,
            "target_size": self.target_size,
            "injective": self.injective,
            "complete": self.complete,
            "round_trip": self.round_trip,
        }


def verify_bijection(
    sigma: Permutation,
    tau: Permutation,
    n: int,
    certificate: Optional[Certificate] = None,
    counter: Optional[PatternCounter] = None,
) -> BijectionReport:
    """
    Apply the certificate's bijection to every member of the source set and
    check it against the brute-force target set.

    :param sigma: First pattern.
    :type sigma: Permutation
    :param tau: Second pattern.
    :type tau: Permutation
    :param n: Permutation length.
    :type n: int
    :param certificate: Certificate to check. Defaults to theorem_certificate(sigma, tau).
    :type certificate: Optional[Certificate]
    :param counter: Counter providing the member sets. Defaults to the shared counter.
    :type counter: Optional[PatternCounter]
    :return: The report.
    :rtype: BijectionReport
    :raises UnsupportedError: If the pair has no theorem certificate.
    """
    certificate = certificate or theorem_certificate(sigma, tau)
    if certificate is None:
        raise UnsupportedError(f"No tie theorem applies to {sigma} and {tau}")
    counter = counter or default_counter()
    source = list(counter.iter_end_with(n, sigma, tau))
    target = set(counter.iter_end_with(n, tau, sigma))
    images = [apply_tie_bijection(certificate, pi) for pi in source]
    image_set = set(images)
    back = [
        invert_tie_bijection(certificate, image) if image in target else None
        for image in images
    ]
    report = BijectionReport(
        sigma,
        tau,
        n,
        certificate.kind,
        len(source),
        len(target),
        injective=len(image_set) == len(images),
        complete=image_set == target,
        round_trip=back == source,
    )
    logger.debug(
        "Bijection %s for %s -> %s at n=%d: %d elements, ok=%s",
        certificate, sigma, tau, n, len(source), report.ok,
    )
    return report
