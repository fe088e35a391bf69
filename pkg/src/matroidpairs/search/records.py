# search/records.py
"""Pair records, their duality reduction and the report format."""
import re
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Tuple

from ..errors import CatalogueFormatError
from ..generation.storage import canonical, decode_matroid, encode_matroid
from ..matroids.core import BinaryMatroid
from ..matroids.isomorphism import is_isomorphic
from ..matroids.zoo import identify, parse_name

_PAIR = re.compile(
    r"PAIR kind=(?P<kind>\w+) big=(?P<big>\S+) small=(?P<small>\S+) dual_of=(?P<dual>\d+|none)"
)

SMALL_PAIRS = (
    ("K5", "K4"),
    ("Q3", "K4"),
    ("Upsilon6", "F7"),
    ("Upsilon6*", "F7"),
    ("H1", "K33"),
    ("H2", "K33"),
    ("H3", "K33"),
    ("QML7", "K33"),
)


class PairKind(str, Enum):
    FASCINATING = "fascinating"
    INTERESTING = "interesting"


def matroid_name(matroid: BinaryMatroid) -> str:
    """Zoo name of the class, or its compact encoding when it has none."""
    return identify(matroid) or encode_matroid(canonical(matroid))


def resolve_name(text: str) -> BinaryMatroid:
    if text.startswith("r") and ":" in text:
        return decode_matroid(text)
    return parse_name(text)


@dataclass(frozen=True)
class PairRecord:
    """``small`` is a minor of ``big``; ``witness`` sits strictly between them."""

    big: BinaryMatroid
    small: BinaryMatroid
    kind: PairKind
    witness: Optional[BinaryMatroid] = None

    @property
    def sizes(self) -> Tuple[int, int]:
        return self.small.size, self.big.size

    def same_class(self, other: "PairRecord") -> bool:
        return is_isomorphic(self.big, other.big) and is_isomorphic(self.small, other.small)

    def dual(self) -> "PairRecord":
        witness = self.witness.dual() if self.witness is not None else None
        return PairRecord(self.big.dual(), self.small.dual(), self.kind, witness)


def small_fascinating_pairs() -> List[PairRecord]:
    """The eight pairs with at most thirteen elements, in their usual order."""
    return [
        PairRecord(parse_name(big), parse_name(small), PairKind.FASCINATING)
        for big, small in SMALL_PAIRS
    ]


@dataclass
class PairRegistry:
    """Pairs resolved by isomorphism class; a pair and its dual pair count once."""

    records: List[PairRecord] = field(default_factory=list)
    dual_of: List[Optional[int]] = field(default_factory=list)

    def add(self, record: PairRecord) -> Optional[int]:
        """Register ``record``; returns its id, or None when its class is already present."""
        if any(record.same_class(existing) for existing in self.records):
            return None
        dual = record.dual()
        partner = next(
            (
                index
                for index, existing in enumerate(self.records)
                if self.dual_of[index] is None and dual.same_class(existing)
            ),
            None,
        )
        self.records.append(record)
        self.dual_of.append(partner)
        return len(self.records) - 1

    def extend(self, records: Iterable[PairRecord]) -> List[Optional[int]]:
        return [self.add(record) for record in records]

    def reduced(self) -> List[PairRecord]:
        """One record per pair up to duality."""
        return [record for record, partner in zip(self.records, self.dual_of) if partner is None]

    def redundant(self) -> int:
        return sum(1 for partner in self.dual_of if partner is not None)

    def of_kind(self, kind: PairKind) -> List[PairRecord]:
        return [record for record in self.reduced() if record.kind == kind]

    def pair_table(self) -> Dict[Tuple[int, int], int]:
        """Counts by ``(|E(small)|, |E(big)|)`` up to duality."""
        return dict(sorted(Counter(record.sizes for record in self.reduced()).items()))

    def lines(self) -> List[str]:
        return [
            f"PAIR kind={record.kind.value} big={matroid_name(record.big)} "
            f"small={matroid_name(record.small)} "
            f"dual_of={'none' if partner is None else partner}"
            for record, partner in zip(self.records, self.dual_of)
        ]

    def write(self, path: Path) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text("".join(line + "\n" for line in self.lines()), encoding="utf-8")

    @classmethod
    def read(cls, path: Path) -> "PairRegistry":
        """Rebuild a registry from a report; duality is recomputed, not trusted."""
        registry = cls()
        for number, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
            if not line.strip() or line.startswith("#"):
                continue
            match = _PAIR.fullmatch(line.strip())
            if not match:
                raise CatalogueFormatError(f"{path}:{number}: not a PAIR line: {line!r}")
            registry.add(
                PairRecord(
                    resolve_name(match["big"]),
                    resolve_name(match["small"]),
                    PairKind(match["kind"]),
                )
            )
        return registry
