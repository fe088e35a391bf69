# matroids/connectivity.py
"""Connectivity function and the connectivity predicates used by the searches."""
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .core import BinaryMatroid, ElementSet
from .gf2 import bits, masks_by_size, popcount


class SeparationKind(str, Enum):
    ONE_SEP = "one_sep"
    TWO_SEP = "two_sep"
    THREE_SEP_BIG_SIDES = "three_sep_big_sides"


@dataclass(frozen=True)
class SeparationReport:
    side: ElementSet
    lambda_value: int
    kind: SeparationKind


def lambda_value(matroid: BinaryMatroid, elements: ElementSet) -> int:
    """r(X) + r(E - X) - r(M)."""
    return matroid.rank(elements) + matroid.rank(matroid.ground & ~elements) - matroid.rows


def is_3connected(matroid: BinaryMatroid) -> bool:
    n = matroid.size
    columns = matroid.columns
    if n >= 2 and not all(columns):
        return False
    if n >= 4 and len(set(columns)) < n:
        return False
    table = matroid.rank_table()
    full, rank = matroid.ground, matroid.rows
    groups = masks_by_size(n)
    for size in range(1, n // 2 + 1):
        bound = 1 if size == 1 else 2
        for mask in groups[size]:
            if table[mask] + table[full ^ mask] - rank < bound:
                return False
    return True


def is_internally_4connected(matroid: BinaryMatroid) -> bool:
    """No 3-separation with both sides larger than four; true below eight elements.

    Does not check 3-connectivity; see :func:`is_ifc`.
    """
    n = matroid.size
    if n <= 7:
        return True
    table = matroid.rank_table()
    full, rank = matroid.ground, matroid.rows
    groups = masks_by_size(n)
    for size in range(4, n // 2 + 1):
        for mask in groups[size]:
            if table[mask] + table[full ^ mask] - rank <= 2:
                return False
    return True


def is_ifc(matroid: BinaryMatroid) -> bool:
    """3-connected and internally 4-connected."""
    return is_3connected(matroid) and is_internally_4connected(matroid)


def _special_side(table: bytes, full: int, rank: int, side: ElementSet) -> bool:
    """Is ``side`` a triangle, a triad or a 4-element fan?"""

    def triangle(mask: int) -> bool:
        return table[mask] == 2 and all(table[mask & ~(1 << i)] == 2 for i in bits(mask))

    def triad(mask: int) -> bool:
        rest = full & ~mask
        return table[rest] == rank - 1 and all(table[rest | (1 << i)] == rank for i in bits(mask))

    size = popcount(side)
    if size == 3:
        return triangle(side) or triad(side)
    if size != 4:
        return False
    members = bits(side)
    for x4 in members:
        if not triangle(side & ~(1 << x4)):
            continue
        for x1 in members:
            if x1 != x4 and triad(side & ~(1 << x1)):
                return True
    return False


def is_44S_connected(matroid: BinaryMatroid) -> bool:
    """Every 3-separation has a side that is a triangle, a triad or a 4-element fan."""
    if not is_3connected(matroid):
        return False
    n = matroid.size
    table = matroid.rank_table()
    full, rank = matroid.ground, matroid.rows
    groups = masks_by_size(n)
    for size in range(3, n // 2 + 1):
        for mask in groups[size]:
            if table[mask] + table[full ^ mask] - rank > 2:
                continue
            other = full ^ mask
            if not (
                _special_side(table, full, rank, mask) or _special_side(table, full, rank, other)
            ):
                return False
    return True


def find_separation(matroid: BinaryMatroid, k: int) -> Optional[SeparationReport]:
    """First partition with lambda below ``k`` and both sides of at least ``k`` elements.

    For ``k == 3`` both sides must have at least four elements, so the result
    witnesses a failure of internal 4-connectivity.
    """
    if k not in (1, 2, 3):
        raise ValueError(f"separation order must be 1, 2 or 3, got {k}")
    kinds = {
        1: SeparationKind.ONE_SEP,
        2: SeparationKind.TWO_SEP,
        3: SeparationKind.THREE_SEP_BIG_SIDES,
    }
    smallest = 4 if k == 3 else k
    n = matroid.size
    table = matroid.rank_table()
    full, rank = matroid.ground, matroid.rows
    groups = masks_by_size(n)
    for size in range(smallest, n // 2 + 1):
        for mask in groups[size]:
            value = table[mask] + table[full ^ mask] - rank
            if value < k:
                return SeparationReport(mask, value, kinds[k])
    return None
