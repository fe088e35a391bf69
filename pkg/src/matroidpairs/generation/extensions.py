# generation/extensions.py
"""Isomorph-free generation of the catalogue, one size at a time.

Every 3-connected binary matroid on at least six elements other than a wheel
has a single-element deletion or contraction that is again 3-connected. Size
``n`` is therefore built from the simple extensions and cosimple coextensions
of size ``n - 1``, with the wheels seeded separately.

The worker functions below are module level so a process pool can pickle them.
"""
from typing import Callable, Dict, Hashable, List, Sequence, Tuple

from ..errors import GenerationOrderError, UnsupportedSizeError
from ..matroids.connectivity import is_ifc
from ..matroids.core import BinaryMatroid
from ..matroids.isomorphism import Fingerprint, dedupe, fingerprint, is_isomorphic, quick_invariant
from ..utils.logging import setup_logger
from .catalogue import MAX_SIZE, MIN_SIZE, Catalogue
from .storage import RANKS, Cells, canonical, matrix_line

logger = setup_logger()

Mapper = Callable[[Callable, Sequence], List]

EXTEND = "extend"
COEXTEND = "coextend"


def inline_map(fn: Callable, items: Sequence) -> List:
    return [fn(item) for item in items]


def simple_extensions(matroid: BinaryMatroid) -> List[BinaryMatroid]:
    """One canonical representative per class of simple single-element extensions."""
    used = set(matroid.columns)
    candidates = [
        canonical(matroid.extend(vector))
        for vector in range(1, 1 << matroid.rows)
        if vector not in used
    ]
    return dedupe(candidates)


def cosimple_coextensions(matroid: BinaryMatroid) -> List[BinaryMatroid]:
    """Duals of the simple extensions of the dual."""
    return [canonical(extension.dual()) for extension in simple_extensions(matroid.dual())]


def expand_parent(job: Tuple[str, BinaryMatroid]) -> List[Tuple[Hashable, BinaryMatroid]]:
    kind, parent = job
    if kind == EXTEND:
        children = simple_extensions(parent)
    elif kind == COEXTEND:
        children = cosimple_coextensions(parent)
    else:
        raise ValueError(f"unknown expansion {kind!r}")
    return [(quick_invariant(child), child) for child in children]


def reduce_bucket(bucket: List[BinaryMatroid]) -> List[BinaryMatroid]:
    """First occurrence of each isomorphism class, in bucket order."""
    kept: List[BinaryMatroid] = []
    for candidate in bucket:
        if not any(is_isomorphic(candidate, other) for other in kept):
            kept.append(candidate)
    return kept


def sort_key(matroid: BinaryMatroid) -> Tuple[Fingerprint, str]:
    return fingerprint(matroid), matrix_line(matroid)


def expansion_jobs(catalogue: Catalogue, n: int) -> List[Tuple[str, BinaryMatroid]]:
    """Parents of size ``n - 1`` that can produce a member of rank at most 7."""
    jobs = []
    for r in RANKS:
        jobs.extend((EXTEND, parent) for parent in catalogue.cell(n - 1, r))
        if r > 0:
            jobs.extend((COEXTEND, parent) for parent in catalogue.cell(n - 1, r - 1))
    return jobs


def populate(catalogue: Catalogue, n: int, mapper: Mapper = inline_map) -> List[int]:
    """Fill every rank cell of size ``n`` and return their counts."""
    if not MIN_SIZE < n <= MAX_SIZE:
        raise UnsupportedSizeError(f"populate covers sizes {MIN_SIZE + 1}..{MAX_SIZE}, not {n}")
    catalogue.require(n - 1)
    if n in catalogue.completed:
        raise GenerationOrderError(f"size {n} is already complete")
    catalogue.seed_wheel(n)

    buckets: Dict[Hashable, List[BinaryMatroid]] = {}
    for r in RANKS:
        for seed in catalogue.cell(n, r):
            buckets.setdefault(quick_invariant(seed), []).append(seed)
    jobs = expansion_jobs(catalogue, n)
    logger.debug(f"Expanding {len(jobs)} parents of size {n - 1}")
    for children in mapper(expand_parent, jobs):
        for key, child in children:
            buckets.setdefault(key, []).append(child)

    logger.debug(f"Reducing {len(buckets)} invariant buckets at size {n}")
    cells: Cells = {}
    for representatives in mapper(reduce_bucket, list(buckets.values())):
        for matroid in representatives:
            cells.setdefault((n, matroid.rows), []).append(matroid)
    for r in RANKS:
        catalogue.cells[(n, r)] = sorted(cells.get((n, r), []), key=sort_key)
    catalogue.completed.add(n)
    counts = catalogue.counts(n)
    logger.info(f"Populate({n}): {counts}")
    return counts


def filter_ifc(
    catalogue: Catalogue, ifc: Catalogue, n: int, mapper: Mapper = inline_map
) -> List[int]:
    """Copy the internally 4-connected members of size ``n`` into ``ifc``, keeping their order."""
    catalogue.require(n)
    for r in RANKS:
        cell = catalogue.cell(n, r)
        flags = mapper(is_ifc, cell)
        ifc.cells[(n, r)] = [matroid for matroid, flag in zip(cell, flags) if flag]
    ifc.completed.add(n)
    counts = ifc.counts(n)
    logger.info(f"PopulateIFC({n}): {counts}")
    return counts
