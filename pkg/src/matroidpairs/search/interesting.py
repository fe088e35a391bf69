# search/interesting.py
from typing import List

from ..generation.catalogue import MIN_SIZE, Catalogue
from ..matroids.core import BinaryMatroid
from ..utils.logging import setup_logger
from .fascinating import has_ifc_between
from .records import PairKind, PairRecord

logger = setup_logger()

# an interesting pair has no internally 4-connected minor removing at most this many elements
REMOVAL_LIMIT = 3


def generate_interesting(
    matroid: BinaryMatroid, minor: BinaryMatroid, ifc: Catalogue
) -> List[BinaryMatroid]:
    """Catalogue matroids ``T`` below ``minor`` for which ``(matroid, T)`` is interesting.

    ``T`` is reported when no internally 4-connected minor of ``matroid`` removing
    one to three elements keeps a ``T``-minor.
    """
    found = []
    for n in range(MIN_SIZE, minor.size):
        ifc.require(n)
        for r in range(max(0, minor.rows - (minor.size - n)), minor.rows + 1):
            for i, candidate in enumerate(ifc.cell(n, r)):
                if not minor.has_minor(candidate):
                    continue
                max_rank = min(matroid.rows - candidate.rows, REMOVAL_LIMIT)
                if not has_ifc_between(matroid, candidate, max_rank, REMOVAL_LIMIT + 1):
                    logger.info(f"Interesting: {(n, r, i)}")
                    found.append(candidate)
    return found


def interesting_records(
    matroid: BinaryMatroid, minor: BinaryMatroid, ifc: Catalogue
) -> List[PairRecord]:
    return [
        PairRecord(matroid, found, PairKind.INTERESTING, witness=minor)
        for found in generate_interesting(matroid, minor, ifc)
    ]
