# matroids/isomorphism.py
"""Isomorphism tests and isomorph rejection for binary matroids."""
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Hashable, List, Sequence, Tuple

from .core import BinaryMatroid
from .embedding import embeds, triangle_counts
from .gf2 import popcount_table


@dataclass(frozen=True, order=True)
class Fingerprint:
    """Whitney numbers: ``whitney[i][j]`` counts subsets of size ``i`` and rank ``j``."""

    size: int
    rank: int
    whitney: Tuple[Tuple[int, ...], ...]


@lru_cache(maxsize=8192)
def _fingerprint(rows: int, columns: Tuple[int, ...]) -> Fingerprint:
    n = len(columns)
    counts = popcount_table(n)
    table = BinaryMatroid(rows, columns, tuple(range(n))).rank_table()
    tally = Counter(zip(counts, table))
    whitney = tuple(tuple(tally[(i, j)] for j in range(rows + 1)) for i in range(n + 1))
    return Fingerprint(n, rows, whitney)


def fingerprint(matroid: BinaryMatroid) -> Fingerprint:
    return _fingerprint(matroid.rows, matroid.columns)


def quick_invariant(matroid: BinaryMatroid) -> Hashable:
    """Cheap isomorphism invariant used to bucket generated candidates.

    Per point: multiplicity, triangles through it and 4-circuits through it.
    """
    counts = Counter(matroid.columns)
    points = sorted(p for p in counts if p)
    triangles = triangle_counts(points)
    sums: Counter = Counter(p ^ q for i, p in enumerate(points) for q in points[i + 1 :])
    profile = []
    for p in points:
        # each 4-circuit {p, q, s, t} is seen once per pair among q, s, t
        quads = sum(sums[p ^ t] - 1 for t in points if t != p) // 3
        profile.append((counts[p], triangles[p], quads))
    return (matroid.size, matroid.rows, counts.get(0, 0), tuple(sorted(profile)))


def is_isomorphic(
    first: BinaryMatroid, second: BinaryMatroid, check_fingerprint: bool = True
) -> bool:
    if first.size != second.size or first.rows != second.rows:
        return False
    first_points = [c for c in first.columns if c]
    second_points = [c for c in second.columns if c]
    if len(first_points) != len(second_points):
        return False
    if check_fingerprint and fingerprint(first) != fingerprint(second):
        return False
    return embeds(first_points, second_points, exact=True)


def dedupe(matroids: Sequence[BinaryMatroid]) -> List[BinaryMatroid]:
    """One representative per isomorphism class, sorted by fingerprint then first occurrence."""
    buckets: Dict[Fingerprint, List[Tuple[int, BinaryMatroid]]] = {}
    for position, matroid in enumerate(matroids):
        bucket = buckets.setdefault(fingerprint(matroid), [])
        if not any(is_isomorphic(matroid, kept, check_fingerprint=False) for _, kept in bucket):
            bucket.append((position, matroid))
    ordered = sorted(
        (key, position, matroid) for key, bucket in buckets.items() for position, matroid in bucket
    )
    return [matroid for _, _, matroid in ordered]
