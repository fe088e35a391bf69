# matroids/core.py
"""Binary matroids with bit-packed columns.

Every constructor funnels through :meth:`BinaryMatroid.from_columns`, which
rewrites the columns in coordinates of the greedily chosen basis. Two
representations of the same labelled matroid therefore compare equal.
"""
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from ..errors import UnknownLabelError, UnsupportedSizeError
from .embedding import embeds
from .gf2 import (
    Gf2Matrix,
    bits,
    coordinates,
    fully_reduce,
    insert_vector,
    popcount,
    reduce_vector,
)

MAX_ELEMENTS = 15

Label = Union[int, str]
ElementSet = int


@lru_cache(maxsize=256)
def subset_ranks(rows: int, columns: Tuple[int, ...]) -> bytes:
    """Rank of every subset of ``columns``, indexed by bitmask.

    Walks the subsets in Gray-code order. ``levels[j]`` holds the pivot basis
    and rank of the current subset restricted to elements ``>= j``, so flipping
    element ``i`` only rebuilds levels ``i`` down to 0.
    """
    n = len(columns)
    table = bytearray(1 << n)
    empty: Tuple[List[int], int] = ([0] * rows, 0)
    levels = [empty] * (n + 1)
    current = 0
    for step in range(1, 1 << n):
        flipped = (step & -step).bit_length() - 1
        current ^= 1 << flipped
        for j in range(flipped, -1, -1):
            pivots, rank = levels[j + 1]
            if (current >> j) & 1:
                reduced = reduce_vector(columns[j], pivots)
                if reduced:
                    pivots = list(pivots)
                    pivots[reduced.bit_length() - 1] = reduced
                    rank += 1
            levels[j] = (pivots, rank)
        table[current] = levels[0][1]
    return bytes(table)


@lru_cache(maxsize=4096)
def _flats(rows: int, columns: Tuple[int, ...], rank: int) -> Tuple[ElementSet, ...]:
    matroid = BinaryMatroid(rows, columns, tuple(range(len(columns))))
    level = {matroid.closure(0)}
    for _ in range(rank):
        ascent = set()
        for flat in level:
            outside = matroid.ground & ~flat
            while outside:
                low = outside & -outside
                closed = matroid.closure(flat | low)
                ascent.add(closed)
                outside &= ~closed
        level = ascent
    return tuple(sorted(level, key=lambda f: (popcount(f), f)))


@lru_cache(maxsize=65536)
def _has_minor(
    m_rows: int, m_columns: Tuple[int, ...], n_rows: int, n_columns: Tuple[int, ...]
) -> bool:
    size, small = len(m_columns), len(n_columns)
    if size < small or m_rows < n_rows or size - m_rows < small - n_rows:
        return False
    points = [c for c in n_columns if c]
    loops = small - len(points)
    k = m_rows - n_rows
    for flat in _flats(m_rows, m_columns, k):
        flat_size = popcount(flat)
        if flat_size - k < loops or size - flat_size < len(points):
            continue
        pivots = [0] * m_rows
        quotient = []
        for position, column in enumerate(m_columns):
            if (flat >> position) & 1:
                insert_vector(column, pivots)
        for position, column in enumerate(m_columns):
            if not (flat >> position) & 1:
                quotient.append(fully_reduce(column, pivots))
        _, projected, _ = coordinates(quotient)
        if embeds(points, projected):
            return True
    return False


@dataclass(frozen=True)
class BinaryMatroid:
    """A labelled binary matroid.

    ``columns[i]`` is the GF(2) vector of element ``labels[i]`` over ``rows``
    coordinates, with ``rows`` equal to the rank.
    """

    rows: int
    columns: Tuple[int, ...]
    labels: Tuple[Label, ...]

    @classmethod
    def from_columns(
        cls, columns: Sequence[int], labels: Optional[Sequence[Label]] = None
    ) -> "BinaryMatroid":
        if len(columns) > MAX_ELEMENTS:
            raise UnsupportedSizeError(f"{len(columns)} elements exceed {MAX_ELEMENTS}")
        if labels is None:
            labels = range(len(columns))
        labels = tuple(labels)
        if len(labels) != len(columns):
            raise ValueError("one label per column required")
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate labels in {labels}")
        rank, coords, _ = coordinates(list(columns))
        return cls(rank, coords, labels)

    @classmethod
    def from_reduced_matrix(
        cls, matrix: Gf2Matrix, labels: Optional[Sequence[Label]] = None
    ) -> "BinaryMatroid":
        """The matroid represented by ``[I | A]``."""
        if matrix.rows + matrix.cols > MAX_ELEMENTS:
            raise UnsupportedSizeError(
                f"{matrix.rows}x{matrix.cols} matrix exceeds {MAX_ELEMENTS} elements"
            )
        identity = [1 << i for i in range(matrix.rows)]
        return cls.from_columns(identity + list(matrix.data), labels)

    @classmethod
    def from_graph(
        cls, edges: Sequence[Tuple[int, int]], labels: Optional[Sequence[Label]] = None
    ) -> "BinaryMatroid":
        """Cycle matroid; element ``i`` is ``edges[i]``."""
        if len(edges) > MAX_ELEMENTS:
            raise UnsupportedSizeError(f"{len(edges)} edges exceed {MAX_ELEMENTS}")
        vertices: Dict[int, int] = {}
        for u, v in edges:
            vertices.setdefault(u, len(vertices))
            vertices.setdefault(v, len(vertices))
        columns = [(1 << vertices[u]) ^ (1 << vertices[v]) for u, v in edges]
        return cls.from_columns(columns, labels)

    # ground set

    @property
    def size(self) -> int:
        return len(self.columns)

    @property
    def ground(self) -> ElementSet:
        return (1 << len(self.columns)) - 1

    @cached_property
    def _index(self) -> Dict[Label, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def resolve_label(self, token: Label) -> int:
        """Position of a label given either as stored or in its string/int form."""
        index = self._index
        if token in index:
            return index[token]
        if isinstance(token, str) and token.lstrip("-").isdigit() and int(token) in index:
            return index[int(token)]
        if isinstance(token, int) and str(token) in index:
            return index[str(token)]
        raise UnknownLabelError(f"{token!r} is not an element of this matroid")

    def subset(self, labels: Iterable[Label]) -> ElementSet:
        mask = 0
        for label in labels:
            mask |= 1 << self.resolve_label(label)
        return mask

    def labels_of(self, elements: ElementSet) -> List[Label]:
        return [self.labels[i] for i in bits(elements)]

    def _mask(self, elements: Union[ElementSet, Iterable[Label], None]) -> ElementSet:
        if elements is None:
            return self.ground
        if isinstance(elements, int):
            if elements & ~self.ground:
                raise UnknownLabelError(f"mask {elements:#x} is not a subset of the ground set")
            return elements
        return self.subset(elements)

    # rank and closure

    def rank(self, elements: Union[ElementSet, Iterable[Label], None] = None) -> int:
        mask = self._mask(elements)
        if mask == self.ground:
            return self.rows
        pivots = [0] * self.rows
        return sum(1 for i in bits(mask) if insert_vector(self.columns[i], pivots))

    def rank_table(self) -> bytes:
        return subset_ranks(self.rows, self.columns)

    def closure(self, elements: Union[ElementSet, Iterable[Label]]) -> ElementSet:
        mask = self._mask(elements)
        pivots = [0] * self.rows
        for i in bits(mask):
            insert_vector(self.columns[i], pivots)
        closed = mask
        for i, column in enumerate(self.columns):
            if not reduce_vector(column, pivots):
                closed |= 1 << i
        return closed

    def flats(self, rank: int) -> Tuple[ElementSet, ...]:
        """Closed sets of the given rank, smallest first."""
        if not 0 <= rank <= self.rows:
            return ()
        return _flats(self.rows, self.columns, rank)

    @cached_property
    def basis_positions(self) -> Tuple[int, ...]:
        return coordinates(list(self.columns))[2]

    # minors and duality

    def delete(self, elements: Union[ElementSet, Iterable[Label]]) -> "BinaryMatroid":
        mask = self._mask(elements)
        keep = [i for i in range(self.size) if not (mask >> i) & 1]
        return BinaryMatroid.from_columns(
            [self.columns[i] for i in keep], [self.labels[i] for i in keep]
        )

    def contract(self, elements: Union[ElementSet, Iterable[Label]]) -> "BinaryMatroid":
        mask = self._mask(elements)
        pivots = [0] * self.rows
        for i in bits(mask):
            insert_vector(self.columns[i], pivots)
        keep = [i for i in range(self.size) if not (mask >> i) & 1]
        return BinaryMatroid.from_columns(
            [fully_reduce(self.columns[i], pivots) for i in keep],
            [self.labels[i] for i in keep],
        )

    def minor(
        self,
        contract: Union[ElementSet, Iterable[Label]] = 0,
        delete: Union[ElementSet, Iterable[Label]] = 0,
    ) -> "BinaryMatroid":
        """``M / contract \\ delete`` with both sets named against this matroid."""
        contracted = self._mask(contract)
        deleted = self._mask(delete)
        if contracted & deleted:
            raise ValueError("contracted and deleted sets must be disjoint")
        labels = self.labels_of(deleted)
        return self.contract(contracted).delete(labels)

    def dual(self) -> "BinaryMatroid":
        basis = self.basis_positions
        row_of = {position: k for k, position in enumerate(basis)}
        others = [i for i in range(self.size) if i not in row_of]
        dual_columns = [0] * self.size
        for k, position in enumerate(others):
            dual_columns[position] = 1 << k
            coords = self.columns[position]
            for row in bits(coords):
                dual_columns[basis[row]] |= 1 << k
        return BinaryMatroid.from_columns(dual_columns, self.labels)

    # circuits and cocircuits

    def is_circuit(self, elements: Union[ElementSet, Iterable[Label]]) -> bool:
        mask = self._mask(elements)
        size = popcount(mask)
        if not mask or self.rank(mask) != size - 1:
            return False
        return all(self.rank(mask & ~(1 << i)) == size - 1 for i in bits(mask))

    def is_cocircuit(self, elements: Union[ElementSet, Iterable[Label]]) -> bool:
        """True when the complement is a hyperplane."""
        mask = self._mask(elements)
        rest = self.ground & ~mask
        if not mask or self.rank(rest) != self.rows - 1:
            return False
        return all(self.rank(rest | (1 << i)) == self.rows for i in bits(mask))

    def is_triangle(self, elements: Union[ElementSet, Iterable[Label]]) -> bool:
        mask = self._mask(elements)
        return popcount(mask) == 3 and self.is_circuit(mask)

    def is_triad(self, elements: Union[ElementSet, Iterable[Label]]) -> bool:
        mask = self._mask(elements)
        return popcount(mask) == 3 and self.is_cocircuit(mask)

    def is_cocycle(self, elements: Union[ElementSet, Iterable[Label]]) -> bool:
        """True when the set is a disjoint union of cocircuits."""
        mask = self._mask(elements)
        functional = 0
        for k, position in enumerate(self.basis_positions):
            if (mask >> position) & 1:
                functional |= 1 << k
        return all(
            popcount(functional & column) % 2 == (mask >> i) & 1
            for i, column in enumerate(self.columns)
        )

    def triangles(self) -> List[ElementSet]:
        found = []
        columns = self.columns
        for i in range(self.size):
            for j in range(i + 1, self.size):
                if not columns[i] or not columns[j] or columns[i] == columns[j]:
                    continue
                target = columns[i] ^ columns[j]
                for k in range(j + 1, self.size):
                    if columns[k] == target:
                        found.append((1 << i) | (1 << j) | (1 << k))
        return found

    def loops(self) -> ElementSet:
        return sum(1 << i for i, column in enumerate(self.columns) if not column)

    def is_simple(self) -> bool:
        return all(self.columns) and len(set(self.columns)) == self.size

    def has_minor(self, other: "BinaryMatroid") -> bool:
        """True when some ``M / C \\ D`` is isomorphic to ``other``."""
        return _has_minor(self.rows, self.columns, other.rows, other.columns)

    # representations

    def permute(self, order: Sequence[int]) -> "BinaryMatroid":
        if sorted(order) != list(range(self.size)):
            raise ValueError(f"{order} is not a permutation of the ground set")
        return BinaryMatroid.from_columns(
            [self.columns[i] for i in order], [self.labels[i] for i in order]
        )

    def relabel(self, labels: Union[Sequence[Label], Dict[Label, Label]]) -> "BinaryMatroid":
        if isinstance(labels, dict):
            labels = [labels.get(label, label) for label in self.labels]
        return BinaryMatroid.from_columns(self.columns, labels)

    def extend(self, column: int, label: Optional[Label] = None) -> "BinaryMatroid":
        """Add one element represented by ``column`` in the current coordinates."""
        if column >> self.rows:
            raise ValueError(f"column {column:#x} does not fit in rank {self.rows}")
        if label is None:
            label = self.size
        return BinaryMatroid.from_columns(self.columns + (column,), self.labels + (label,))

    def standard_form(self, relabel: bool = False) -> "BinaryMatroid":
        """Reorder so the basis comes first, making the representation ``[I | A]``."""
        basis = self.basis_positions
        chosen = set(basis)
        order = list(basis) + [i for i in range(self.size) if i not in chosen]
        permuted = self.permute(order)
        if relabel:
            return BinaryMatroid(permuted.rows, permuted.columns, tuple(range(self.size)))
        return permuted

    def reduced_matrix(self) -> Gf2Matrix:
        """``A`` of the standard form ``[I | A]``."""
        standard = self.standard_form()
        return Gf2Matrix(standard.rows, self.size - self.rows, standard.columns[self.rows :])

    def __str__(self) -> str:
        return f"BinaryMatroid(rank={self.rows}, size={self.size})"
