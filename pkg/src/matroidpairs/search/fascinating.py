# search/fascinating.py
"""Fascinating pairs: internally 4-connected minor pairs with nothing internally
4-connected strictly between them."""
from dataclasses import dataclass
from functools import partial
from typing import Dict, List, Sequence, Tuple

from ..generation.catalogue import Catalogue
from ..generation.extensions import Mapper, inline_map
from ..matroids.connectivity import is_3connected, is_internally_4connected
from ..matroids.core import BinaryMatroid
from ..matroids.gf2 import masks_by_size, popcount
from ..utils.logging import setup_logger
from .records import PairKind, PairRecord
from .targets import TargetMinorMatrix

logger = setup_logger()


def has_ifc_between(
    matroid: BinaryMatroid, minor: BinaryMatroid, max_rank: int, budget: int
) -> bool:
    """Is there an internally 4-connected ``M / F \\ D`` with a ``minor``-minor?

    ``F`` runs over the flats of rank at most ``max_rank`` and ``D`` over the
    sets avoiding ``F`` with ``|F| + |D| < budget``; when ``F`` is empty, ``D``
    is not.
    """
    for rank in range(max_rank + 1):
        for flat in matroid.flats(rank):
            size = popcount(flat)
            if size >= budget:
                continue
            contracted = matroid.contract(flat)
            if not contracted.has_minor(minor):
                continue
            lower = 1 if rank == 0 else 0
            groups = masks_by_size(contracted.size)
            for deleted_size in range(lower, budget - size):
                for deleted in groups[deleted_size]:
                    test = contracted.delete(deleted)
                    if (
                        test.has_minor(minor)
                        and is_3connected(test)
                        and is_internally_4connected(test)
                    ):
                        logger.debug(
                            f"Intermediate minor: contract {matroid.labels_of(flat)}, "
                            f"delete {contracted.labels_of(deleted)}"
                        )
                        return True
    return False


def is_fascinating(matroid: BinaryMatroid, minor: BinaryMatroid) -> bool:
    size_gap = matroid.size - minor.size
    if size_gap <= 3 or not matroid.has_minor(minor):
        return False
    return not has_ifc_between(matroid, minor, matroid.rows - minor.rows, size_gap)


@dataclass(frozen=True)
class SearchContext:
    """Read-only data shared by every search worker."""

    targets: Tuple[BinaryMatroid, ...]
    cells: Dict[Tuple[int, int], List[BinaryMatroid]]
    bits: Dict[Tuple[int, int], List[int]]
    floor: int


def surviving_targets(
    member: Tuple[int, int, BinaryMatroid], context: SearchContext
) -> List[Tuple[int, int, int]]:
    """``(r, i, k)`` for every target ``k`` that no intermediate catalogue member covers."""
    r, i, matroid = member
    possibles = 0
    for k, target in enumerate(context.targets):
        if target.size + 3 < matroid.size and matroid.has_minor(target):
            possibles |= 1 << k
    for size in range(matroid.size - 1, context.floor - 1, -1):
        if not possibles:
            break
        for rank in range(r, max(r - (matroid.size - size), 0) - 1, -1):
            if not possibles:
                break
            rows = context.bits.get((size, rank), [])
            for j, intermediate in enumerate(context.cells.get((size, rank), [])):
                if rows[j] & possibles and matroid.has_minor(intermediate):
                    possibles &= ~rows[j]
                    if not possibles:
                        break
    return [(r, i, k) for k in range(len(context.targets)) if (possibles >> k) & 1]


def find_fascinating(
    ifc: Catalogue,
    matrix: TargetMinorMatrix,
    size: int,
    floor: int = 11,
    mapper: Mapper = inline_map,
) -> List[PairRecord]:
    """One record per surviving (member of size ``size``, target) combination."""
    ifc.require(size)
    sizes = range(floor, size)
    for n in sizes:
        ifc.require(n)
    context = SearchContext(
        targets=tuple(matrix.targets),
        cells={key: cell for key, cell in ifc.cells.items() if key[0] in sizes},
        bits={key: rows for key, rows in matrix.bits.items() if key[0] in sizes},
        floor=floor,
    )
    members: Sequence[Tuple[int, int, BinaryMatroid]] = list(ifc.members(size))
    logger.info(f"Searching {len(members)} matroids of size {size}")
    records = []
    for survivors in mapper(partial(surviving_targets, context=context), members):
        for r, i, k in survivors:
            logger.info(f"Survivor {(size, r, i, k)}")
            records.append(
                PairRecord(ifc.cell(size, r)[i], matrix.targets[k], PairKind.FASCINATING)
            )
    return records
