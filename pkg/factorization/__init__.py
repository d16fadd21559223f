"""Non-factorizability criterion and factorizability certificates."""

from factorization.hm_criterion import (
    HmVerdict,
    NonUnitDiagonalError,
    NOT_FACTORIZABLE,
    INCONCLUSIVE,
    hm_verdict,
    assert_mutually_exclusive,
)
from factorization.certificate import (
    Certificate,
    CertificateResult,
    DIRECT,
    TRANSPOSED,
    verify_certificate,
    certificate_from_measure,
    certificate_from_json,
)

__all__ = [
    "HmVerdict",
    "NonUnitDiagonalError",
    "NOT_FACTORIZABLE",
    "INCONCLUSIVE",
    "hm_verdict",
    "assert_mutually_exclusive",
    "Certificate",
    "CertificateResult",
    "DIRECT",
    "TRANSPOSED",
    "verify_certificate",
    "certificate_from_measure",
    "certificate_from_json",
]
