from .certificates import (
    Certificate,
    CertificateKind,
    MARKED_PAIRS,
    iotarho_partner,
    known_certificate,
    no_overlap_j,
    one_k_pair,
    rhorho_pair,
    skip_two_pair,
    theorem_certificate,
)
from .bijections import (
    BijectionReport,
    apply_tie_bijection,
    invert_tie_bijection,
    is_end_member,
    rearrange_tail,
    verify_bijection,
)
from .marked import (
    InclusionExclusionReport,
    MarkedPermutation,
    cluster_shapes,
    em_positions,
    inclusion_exclusion_check,
    is_tight_cluster,
    mark_blocks,
    marked_bijection,
)
from .scan import TieCertificate, tie_scan

__all__ = [
    "Certificate",
    "CertificateKind",
    "MARKED_PAIRS",
    "iotarho_partner",
    "known_certificate",
    "no_overlap_j",
    "one_k_pair",
    "rhorho_pair",
    "skip_two_pair",
    "theorem_certificate",
    "BijectionReport",
    "apply_tie_bijection",
    "invert_tie_bijection",
    "is_end_member",
    "rearrange_tail",
    "verify_bijection",
    "InclusionExclusionReport",
    "MarkedPermutation",
    "cluster_shapes",
    "em_positions",
    "inclusion_exclusion_check",
    "is_tight_cluster",
    "mark_blocks",
    "marked_bijection",
    "TieCertificate",
    "tie_scan",
]
