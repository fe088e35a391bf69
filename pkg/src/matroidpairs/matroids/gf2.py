# matroids/gf2.py
"""Bit-packed GF(2) linear algebra.

A vector is a Python int: bit ``i`` holds the entry in row ``i`` and row 0 is
the least significant bit. A *pivot basis* is a list indexed by leading bit,
holding either 0 or a vector whose leading bit is that index.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

from ..errors import UnsupportedSizeError

MAX_DIMENSION = 15


def popcount(value: int) -> int:
    return bin(value).count("1")


@lru_cache(maxsize=None)
def popcount_table(n: int) -> Tuple[int, ...]:
    """Popcounts of every ``n``-bit mask."""
    table = [0] * (1 << n)
    for mask in range(1, 1 << n):
        table[mask] = table[mask >> 1] + (mask & 1)
    return tuple(table)


@lru_cache(maxsize=None)
def masks_by_size(n: int) -> Tuple[Tuple[int, ...], ...]:
    """All ``n``-bit masks grouped by popcount, ascending within a group."""
    groups: List[List[int]] = [[] for _ in range(n + 1)]
    counts = popcount_table(n)
    for mask in range(1 << n):
        groups[counts[mask]].append(mask)
    return tuple(tuple(group) for group in groups)


def bits(mask: int) -> List[int]:
    """Positions of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def reduce_vector(vector: int, pivots: Sequence[int]) -> int:
    """Reduce ``vector`` until its leading bit has no pivot; 0 means it is in the span."""
    while vector:
        pivot = pivots[vector.bit_length() - 1]
        if not pivot:
            break
        vector ^= pivot
    return vector


def insert_vector(vector: int, pivots: List[int]) -> bool:
    """Add ``vector`` to the pivot basis; return whether the rank went up."""
    vector = reduce_vector(vector, pivots)
    if vector:
        pivots[vector.bit_length() - 1] = vector
        return True
    return False


def fully_reduce(vector: int, pivots: Sequence[int]) -> int:
    """Clear every pivot position of ``vector``.

    The result is the same for all vectors in one coset of the span, so this is
    the projection used for contraction.
    """
    for lead in range(len(pivots) - 1, -1, -1):
        pivot = pivots[lead]
        if pivot and (vector >> lead) & 1:
            vector ^= pivot
    return vector


def dimension_of(vectors: Iterable[int]) -> int:
    """Number of rows needed to hold every vector."""
    return max((v.bit_length() for v in vectors), default=0)


def coordinates(vectors: Sequence[int]) -> Tuple[int, Tuple[int, ...], Tuple[int, ...]]:
    """Express ``vectors`` in the basis chosen greedily from them.

    Returns ``(rank, coords, basis)`` where ``basis`` lists the positions of the
    chosen vectors in order, the ``k``-th of which gets coordinate ``1 << k``,
    and ``coords[i]`` is the coordinate vector of ``vectors[i]``.
    """
    dim = dimension_of(vectors)
    # pivot slot -> (reduced vector, combination of basis indices equal to it)
    pivots: List[Optional[Tuple[int, int]]] = [None] * dim
    basis: List[int] = []
    coords: List[int] = []
    for position, vector in enumerate(vectors):
        reduced, combination = vector, 0
        while reduced:
            entry = pivots[reduced.bit_length() - 1]
            if entry is None:
                break
            reduced ^= entry[0]
            combination ^= entry[1]
        if reduced:
            index = len(basis)
            basis.append(position)
            pivots[reduced.bit_length() - 1] = (reduced, combination ^ (1 << index))
            coords.append(1 << index)
        else:
            coords.append(combination)
    return len(basis), tuple(coords), tuple(basis)


@dataclass(frozen=True)
class Gf2Matrix:
    """A GF(2) matrix stored column by column."""

    rows: int
    cols: int
    data: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows > MAX_DIMENSION or self.cols > MAX_DIMENSION:
            raise UnsupportedSizeError(
                f"{self.rows}x{self.cols} matrix exceeds {MAX_DIMENSION} rows or columns"
            )
        if len(self.data) != self.cols:
            raise ValueError(f"expected {self.cols} columns, got {len(self.data)}")
        limit = 1 << self.rows
        for column in self.data:
            if not 0 <= column < limit:
                raise ValueError(f"column {column:#x} does not fit in {self.rows} rows")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Gf2Matrix":
        height = len(rows)
        width = len(rows[0]) if rows else 0
        data = []
        for j in range(width):
            column = 0
            for i, row in enumerate(rows):
                if len(row) != width:
                    raise ValueError("ragged matrix rows")
                if row[j] & 1:
                    column |= 1 << i
            data.append(column)
        return cls(height, width, tuple(data))

    def to_rows(self) -> List[List[int]]:
        return [[(column >> i) & 1 for column in self.data] for i in range(self.rows)]

    def stack(self, other: "Gf2Matrix") -> "Gf2Matrix":
        """Append the rows of ``other`` below these rows."""
        if other.cols != self.cols:
            raise ValueError("stacked matrices need the same number of columns")
        shifted = tuple(a | (b << self.rows) for a, b in zip(self.data, other.data))
        return Gf2Matrix(self.rows + other.rows, self.cols, shifted)

    def augment(self, column: Sequence[int]) -> "Gf2Matrix":
        """Append one column given as a list of row entries."""
        if len(column) != self.rows:
            raise ValueError("augmented column has the wrong height")
        packed = sum(1 << i for i, entry in enumerate(column) if entry & 1)
        return Gf2Matrix(self.rows, self.cols + 1, self.data + (packed,))

    def __str__(self) -> str:
        return "\n".join(" ".join(str(entry) for entry in row) for row in self.to_rows())
