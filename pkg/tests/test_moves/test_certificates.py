import pytest

from matroidpairs.errors import InvalidCertificateError, UnknownCertificateKindError
from matroidpairs.moves import (
    BowtieRingCertificate,
    CertificateKind,
    LadderCertificate,
    MoveCertificate,
    RotorChainCertificate,
    VerificationReport,
    load_certificates,
)


class TestCertificateLines:
    def test_parse_ring(self):
        line = "CERT kind=ring matroid=B1* labels=1,3,12,0,6,11,5,9,13,7,8,14 claim=P*"
        certificate = MoveCertificate.from_line(line)
        assert certificate.kind == CertificateKind.RING
        assert certificate.labels[:3] == ("1", "3", "12")
        assert certificate.central is None
        assert certificate.line() == line
        assert certificate.name == "ring:B1*->P*"

    def test_parse_auto_and_central(self):
        certificate = MoveCertificate.from_line(
            "CERT kind=wheel4 matroid=H2 labels=auto claim=K33 central=16,26,36,46"
        )
        assert certificate.labels is None
        assert certificate.central == ("16", "26", "36", "46")

    def test_missing_fields(self):
        with pytest.raises(InvalidCertificateError) as excinfo:
            MoveCertificate.from_line("CERT kind=ring matroid=H1")
        assert excinfo.value.condition == "format"

    def test_not_a_cert_line(self):
        with pytest.raises(InvalidCertificateError):
            MoveCertificate.from_line("PAIR kind=ring")

    def test_unknown_kind(self):
        with pytest.raises(UnknownCertificateKindError):
            MoveCertificate.from_line("CERT kind=fan matroid=H1 labels=auto claim=K33")

    def test_packaged_fixture(self):
        certificates = load_certificates()
        assert len(certificates) == 23
        kinds = {certificate.kind for certificate in certificates}
        assert kinds == set(CertificateKind)

    def test_comments_and_blank_lines_skipped(self, temp_dir):
        path = temp_dir / "certificates.txt"
        path.write_text("# header\n\nCERT kind=ring matroid=H1 labels=auto claim=K33\n")
        assert [c.matroid for c in load_certificates(path)] == ["H1"]


class TestStructures:
    def test_ring_cocircuits_wrap_around(self):
        ring = BowtieRingCertificate.from_labels(list("abcdefghi"))
        assert ring.cocircuits()[-1] == ("h", "i", "a", "b")
        assert ring.deleted == ("c", "f", "i")

    def test_ring_needs_three_triangles(self):
        with pytest.raises(InvalidCertificateError):
            BowtieRingCertificate.from_labels(list("abcdef"))

    def test_ladder_move_sets(self):
        ladder = LadderCertificate(tuple("abcdefghijkl"))
        assert ladder.deleted == ("g", "k")
        assert ladder.contracted == ("h", "j")

    def test_rotor_chain_shape(self):
        rotor = RotorChainCertificate(tuple("bcABCDEFGHI"))
        assert rotor.links[0] == ("b", "c")
        assert len(rotor.triangles()) == 3
        assert rotor.cocircuits()[0] == ("b", "c", "A", "B")
        assert rotor.deleted == ("c", "C", "F", "I")
        with pytest.raises(InvalidCertificateError):
            RotorChainCertificate(tuple("bcABCDEF"))

    def test_report_lines(self):
        report = VerificationReport("ring:X->Y", partial=True)
        assert not report.passed
        report.check("distinct", True)
        report.check("T0 triangle", False, "[1, 2, 3]")
        assert report.first_failure().name == "T0 triangle"
        assert report.lines() == [
            "VERIFY ring:X->Y fail partial",
            "  [ok] distinct",
            "  [FAIL] T0 triangle [1, 2, 3]",
        ]
