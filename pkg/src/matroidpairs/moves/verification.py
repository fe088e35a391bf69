# moves/verification.py
"""Checking a move certificate against the matroid it names."""
from typing import Callable, Dict, Tuple

from ..errors import InvalidCertificateError, MatroidError, UnknownCertificateKindError
from ..matroids.connectivity import is_44S_connected
from ..matroids.core import BinaryMatroid
from ..matroids.isomorphism import is_isomorphic
from ..matroids.zoo import parse_name
from ..utils.logging import setup_logger
from .certificates import (
    AugmentedWheelCertificate,
    BowtieRingCertificate,
    CertificateKind,
    LadderCertificate,
    MoveCertificate,
    RotorChainCertificate,
    VerificationReport,
)
from .ladders import compress_ladder, ladder_conditions
from .rings import find_bowtie_rings, ring_conditions

logger = setup_logger()

Verifier = Callable[[BinaryMatroid, MoveCertificate, BinaryMatroid, VerificationReport], None]


def _check_result(
    report: VerificationReport, result: BinaryMatroid, claim: str, expected: BinaryMatroid
) -> None:
    report.check(
        f"result is isomorphic to {claim}",
        is_isomorphic(result, expected),
        f"size {result.size}, rank {result.rows}",
    )


def _verify_ring(
    matroid: BinaryMatroid,
    certificate: MoveCertificate,
    claim: BinaryMatroid,
    report: VerificationReport,
) -> None:
    if certificate.labels is None:
        rings = find_bowtie_rings(matroid)
        report.check("ring found", bool(rings), f"{len(rings)} rings")
        for ring in rings:
            trimmed = matroid.delete(list(ring.deleted))
            if is_isomorphic(trimmed, claim):
                labels = ",".join(str(label) for label in ring.labels)
                report.check(f"trimming a ring gives {certificate.claim}", True, labels)
                return
        report.check(f"trimming a ring gives {certificate.claim}", False)
        return
    ring = BowtieRingCertificate.from_labels(certificate.labels)
    report.conditions.extend(ring_conditions(matroid, ring))
    if not report.passed:
        return
    trimmed = matroid.delete(list(ring.deleted))
    report.check("rank preserved", trimmed.rows == matroid.rows)
    _check_result(report, trimmed, certificate.claim, claim)


def _verify_rotor(
    matroid: BinaryMatroid,
    certificate: MoveCertificate,
    claim: BinaryMatroid,
    report: VerificationReport,
) -> None:
    if certificate.labels is None:
        raise InvalidCertificateError("shape", "a rotor chain needs explicit labels")
    rotor = RotorChainCertificate(certificate.labels)
    positions = [matroid.resolve_label(label) for label in rotor.labels]
    report.check("distinct", len(set(positions)) == len(positions))
    for i, triangle in enumerate(rotor.triangles(), 1):
        report.check(f"T{i} triangle", matroid.is_triangle(list(triangle)), f"{list(triangle)}")
    for i, quad in enumerate(rotor.cocircuits()):
        report.check(f"D{i} cocircuit", matroid.is_cocircuit(list(quad)), f"{list(quad)}")
    if report.passed:
        _check_result(report, matroid.delete(list(rotor.deleted)), certificate.claim, claim)


def _verify_ladder(
    matroid: BinaryMatroid,
    certificate: MoveCertificate,
    claim: BinaryMatroid,
    report: VerificationReport,
) -> None:
    if certificate.labels is None:
        raise InvalidCertificateError("shape", "a ladder needs explicit labels")
    ladder = LadderCertificate(certificate.labels)
    report.conditions.extend(ladder_conditions(matroid, ladder))
    if report.passed:
        _check_result(report, compress_ladder(matroid, ladder), certificate.claim, claim)


def _verify_wheel(
    matroid: BinaryMatroid,
    certificate: MoveCertificate,
    claim: BinaryMatroid,
    report: VerificationReport,
) -> None:
    if certificate.central is None:
        raise InvalidCertificateError("shape", "an augmented 4-wheel needs central=...")
    wheel = AugmentedWheelCertificate(certificate.central, certificate.labels)
    central = matroid.subset(wheel.central)
    if wheel.labels is not None:
        positions = [matroid.resolve_label(label) for label in wheel.labels]
        report.check("distinct", len(set(positions)) == 10)
        report.check(
            "central cocircuit among the labels",
            all(matroid.resolve_label(label) in positions for label in wheel.central),
        )
    report.check("central cocircuit", matroid.is_cocircuit(central), f"{list(wheel.central)}")
    if wheel.e is not None:
        report.check(
            f"deleting {wheel.e} leaves a (4,4,S)-connected matroid",
            is_44S_connected(matroid.delete([wheel.e])),
        )
    if report.passed:
        _check_result(report, matroid.delete(central), certificate.claim, claim)


_VERIFIERS: Dict[CertificateKind, Tuple[Verifier, bool]] = {
    CertificateKind.RING: (_verify_ring, False),
    CertificateKind.ROTOR: (_verify_rotor, True),
    CertificateKind.LADDER: (_verify_ladder, True),
    CertificateKind.WHEEL4: (_verify_wheel, True),
}


def verify_certificate(
    matroid: BinaryMatroid, certificate: MoveCertificate, claim: BinaryMatroid
) -> VerificationReport:
    """Check every stated condition of ``certificate`` and that the move produces ``claim``.

    Only ring certificates are checked in full; the other structures are
    defined by drawings, so their reports are marked partial.
    """
    if certificate.kind not in _VERIFIERS:
        raise UnknownCertificateKindError(f"unknown certificate kind {certificate.kind!r}")
    verifier, partial = _VERIFIERS[certificate.kind]
    report = VerificationReport(certificate.name, partial=partial)
    try:
        verifier(matroid, certificate, claim, report)
    except InvalidCertificateError as e:
        report.check(e.condition, False, e.detail)
    except MatroidError as e:
        report.check("labels", False, str(e))
    return report


def run_certificate(certificate: MoveCertificate) -> VerificationReport:
    """Resolve the named matroids and verify."""
    logger.debug(f"Verifying {certificate.line()}")
    matroid = parse_name(certificate.matroid)
    claim = parse_name(certificate.claim)
    return verify_certificate(matroid, certificate, claim)
