# moves/certificates.py
"""Move certificates and the ``CERT`` fixture format.

One certificate per line::

    CERT kind=<ring|ladder|rotor|wheel4> matroid=<name> labels=<a,b,...|auto> claim=<name>

Augmented-wheel certificates also carry ``central=<w,x,y,z>``.
"""
import re
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import List, NamedTuple, Optional, Sequence, Tuple

from ..config import certificates_path
from ..errors import InvalidCertificateError, UnknownCertificateKindError
from ..matroids.core import Label

_FIELD = re.compile(r"(\w+)=(\S+)")
AUTO = "auto"


class CertificateKind(str, Enum):
    RING = "ring"
    LADDER = "ladder"
    ROTOR = "rotor"
    WHEEL4 = "wheel4"


def _split(text: str) -> Tuple[str, ...]:
    return tuple(token.strip() for token in text.split(",") if token.strip())


@dataclass(frozen=True)
class MoveCertificate:
    """A fixture line: which structure, in which matroid, and what removing it gives."""

    kind: CertificateKind
    matroid: str
    labels: Optional[Tuple[str, ...]]
    claim: str
    central: Optional[Tuple[str, ...]] = None

    @classmethod
    def from_line(cls, line: str) -> "MoveCertificate":
        tokens = line.split()
        if not tokens or tokens[0] != "CERT":
            raise InvalidCertificateError("format", f"not a CERT line: {line!r}")
        matches = (_FIELD.fullmatch(token) for token in tokens[1:])
        fields = dict(match.groups() for match in matches if match)
        missing = [key for key in ("kind", "matroid", "labels", "claim") if key not in fields]
        if missing:
            raise InvalidCertificateError("format", f"missing {', '.join(missing)} in {line!r}")
        try:
            kind = CertificateKind(fields["kind"])
        except ValueError as e:
            raise UnknownCertificateKindError(f"unknown certificate kind {fields['kind']!r}") from e
        labels = None if fields["labels"] == AUTO else _split(fields["labels"])
        central = _split(fields["central"]) if "central" in fields else None
        return cls(kind, fields["matroid"], labels, fields["claim"], central)

    def line(self) -> str:
        labels = AUTO if self.labels is None else ",".join(self.labels)
        text = (
            f"CERT kind={self.kind.value} matroid={self.matroid} "
            f"labels={labels} claim={self.claim}"
        )
        if self.central is not None:
            text += f" central={','.join(self.central)}"
        return text

    @property
    def name(self) -> str:
        return f"{self.kind.value}:{self.matroid}->{self.claim}"


def load_certificates(path: Optional[Path] = None) -> List[MoveCertificate]:
    """Read the packaged certificate fixture, skipping blank lines and ``#`` comments."""
    path = Path(path) if path is not None else certificates_path()
    certificates = []
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            certificates.append(MoveCertificate.from_line(line))
    return certificates


@dataclass(frozen=True)
class BowtieRingCertificate:
    """Triangles ``(a_i, b_i, c_i)``.

    The sets ``{b_i, c_i, a_{i+1}, b_{i+1}}`` are cocircuits, indices taken cyclically.
    """

    triangles: Tuple[Tuple[Label, Label, Label], ...]

    @classmethod
    def from_labels(cls, labels: Sequence[Label]) -> "BowtieRingCertificate":
        if len(labels) % 3 or len(labels) < 9:
            raise InvalidCertificateError(
                "shape", f"a ring needs at least three triangles, got {len(labels)} labels"
            )
        triangles = zip(labels[0::3], labels[1::3], labels[2::3])
        return cls(tuple(triangles))

    @property
    def labels(self) -> Tuple[Label, ...]:
        return tuple(label for triangle in self.triangles for label in triangle)

    def cocircuits(self) -> List[Tuple[Label, Label, Label, Label]]:
        count = len(self.triangles)
        quads = []
        for i, (_, b, c) in enumerate(self.triangles):
            a_next, b_next, _ = self.triangles[(i + 1) % count]
            quads.append((b, c, a_next, b_next))
        return quads

    @property
    def deleted(self) -> Tuple[Label, ...]:
        return tuple(c for _, _, c in self.triangles)


@dataclass(frozen=True)
class LadderCertificate:
    """``(a0, b0, c0, d0, a1, b1, c1, d1, a2, b2, c2, d2)``.

    The move deletes ``c1, c2`` and contracts ``d1, b2``.
    """

    labels: Tuple[Label, ...]

    def __post_init__(self) -> None:
        if len(self.labels) != 12:
            raise InvalidCertificateError(
                "shape", f"a ladder segment has 12 labels, got {len(self.labels)}"
            )

    @property
    def deleted(self) -> Tuple[Label, Label]:
        return self.labels[6], self.labels[10]

    @property
    def contracted(self) -> Tuple[Label, Label]:
        return self.labels[7], self.labels[9]


@dataclass(frozen=True)
class RotorChainCertificate:
    """``(b0, c0, a1, b1, c1, ..., ak, bk, ck)`` with ``k >= 3``; the ``c_i`` are dashed."""

    labels: Tuple[Label, ...]

    def __post_init__(self) -> None:
        if len(self.labels) < 11 or (len(self.labels) - 2) % 3:
            raise InvalidCertificateError(
                "shape",
                f"an open rotor chain needs 2 + 3k labels with k >= 3, got {len(self.labels)}",
            )

    @property
    def links(self) -> List[Tuple[Label, ...]]:
        """``(b0, c0)`` followed by the triples ``(a_i, b_i, c_i)``."""
        rest = self.labels[2:]
        return [self.labels[:2]] + [rest[i : i + 3] for i in range(0, len(rest), 3)]

    def triangles(self) -> List[Tuple[Label, ...]]:
        return self.links[1:]

    def cocircuits(self) -> List[Tuple[Label, Label, Label, Label]]:
        links = self.links
        quads = []
        for current, following in zip(links, links[1:]):
            b, c = current[-2], current[-1]
            quads.append((b, c, following[0], following[1]))
        return quads

    @property
    def deleted(self) -> Tuple[Label, ...]:
        return tuple(link[-1] for link in self.links)


@dataclass(frozen=True)
class AugmentedWheelCertificate:
    """``(e, s, a0, b0, c0, a1, b1, c1, a2, b2)`` and the central cocircuit.

    Without the ten labels only the central cocircuit and its deletion are checked.
    """

    central: Tuple[Label, ...]
    labels: Optional[Tuple[Label, ...]] = None

    def __post_init__(self) -> None:
        if len(self.central) != 4:
            raise InvalidCertificateError(
                "shape", f"the central cocircuit has 4 labels, got {len(self.central)}"
            )
        if self.labels is not None and len(self.labels) != 10:
            raise InvalidCertificateError(
                "shape", f"an augmented 4-wheel has 10 labels, got {len(self.labels)}"
            )

    @property
    def e(self) -> Optional[Label]:
        return self.labels[0] if self.labels is not None else None


class Condition(NamedTuple):
    """One checked statement about a certificate."""

    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    """Per-condition outcome of one certificate or move."""

    name: str
    conditions: List[Condition] = field(default_factory=list)
    partial: bool = False

    @property
    def passed(self) -> bool:
        return bool(self.conditions) and all(condition.passed for condition in self.conditions)

    def check(self, name: str, passed: bool, detail: str = "") -> bool:
        self.conditions.append(Condition(name, passed, detail))
        return passed

    def first_failure(self) -> Optional[Condition]:
        return next((condition for condition in self.conditions if not condition.passed), None)

    def lines(self) -> List[str]:
        status = "pass" if self.passed else "fail"
        header = f"VERIFY {self.name} {status}" + (" partial" if self.partial else "")
        body = [
            f"  [{'ok' if condition.passed else 'FAIL'}] {condition.name}"
            + (f" {condition.detail}" if condition.detail else "")
            for condition in self.conditions
        ]
        return [header, *body]
