# generation/catalogue.py
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, List, Set, Tuple

from ..errors import GenerationOrderError
from ..matroids.core import BinaryMatroid
from ..matroids.zoo import wheel
from ..utils.logging import setup_logger
from .storage import RANKS, Cells, canonical, read_catalogue, write_catalogue

logger = setup_logger()

MIN_SIZE = 6
MAX_SIZE = 15
# the size of every wheel the generation starts from: W3 at 6 up to W7 at 14
WHEEL_SIZES = (6, 8, 10, 12, 14)


@dataclass
class Catalogue:
    """Cells ``(n, r)`` of 3-connected binary matroids, one per isomorphism class."""

    cells: Cells = field(default_factory=dict)
    completed: Set[int] = field(default_factory=set)

    @classmethod
    def seeded(cls) -> "Catalogue":
        """A catalogue holding only the wheel on six elements."""
        catalogue = cls()
        catalogue.seed_wheel(MIN_SIZE)
        catalogue.completed.add(MIN_SIZE)
        return catalogue

    @classmethod
    def load(cls, path: Path) -> "Catalogue":
        cells, sizes = read_catalogue(path)
        logger.debug(f"Loaded sizes {sorted(sizes)} from {path}")
        return cls(cells, set(sizes))

    def save(self, path: Path) -> None:
        write_catalogue(path, self.cells, sorted(self.completed))
        logger.debug(f"Saved sizes {sorted(self.completed)} to {path}")

    def seed_wheel(self, n: int) -> None:
        """Place the wheel with ``n`` elements in its cell unless it is already there."""
        if n not in WHEEL_SIZES:
            return
        member = canonical(wheel(n // 2))
        cell = self.cells.setdefault((n, n // 2), [])
        if member not in cell:
            cell.append(member)

    def cell(self, n: int, r: int) -> List[BinaryMatroid]:
        return self.cells.get((n, r), [])

    def members(self, n: int) -> Iterator[Tuple[int, int, BinaryMatroid]]:
        """``(rank, index, matroid)`` over every cell of size ``n``."""
        for r in RANKS:
            for index, matroid in enumerate(self.cell(n, r)):
                yield r, index, matroid

    def counts(self, n: int) -> List[int]:
        return [len(self.cell(n, r)) for r in RANKS]

    def require(self, n: int) -> None:
        if n not in self.completed:
            raise GenerationOrderError(
                f"size {n} is not complete; completed sizes are {sorted(self.completed)}"
            )

    @property
    def largest(self) -> int:
        return max(self.completed, default=MIN_SIZE - 1)

