from .certificates import (
    AugmentedWheelCertificate,
    BowtieRingCertificate,
    CertificateKind,
    Condition,
    LadderCertificate,
    MoveCertificate,
    RotorChainCertificate,
    VerificationReport,
    load_certificates,
)
from .ladders import (
    compress_ladder,
    ladder_conditions,
    mobius_ladder_compression,
    quartic_ladder_compression,
)
from .rings import find_bowtie_rings, ring_conditions, trim_bowtie_ring
from .verification import run_certificate, verify_certificate

__all__ = [
    "AugmentedWheelCertificate",
    "BowtieRingCertificate",
    "CertificateKind",
    "Condition",
    "LadderCertificate",
    "MoveCertificate",
    "RotorChainCertificate",
    "VerificationReport",
    "compress_ladder",
    "find_bowtie_rings",
    "ladder_conditions",
    "load_certificates",
    "mobius_ladder_compression",
    "quartic_ladder_compression",
    "ring_conditions",
    "run_certificate",
    "trim_bowtie_ring",
    "verify_certificate",
]
