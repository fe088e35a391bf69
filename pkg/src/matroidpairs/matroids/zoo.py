# matroids/zoo.py
"""Constructors for the named graphs and matroids of the catalogue.

Graphic matroids label each edge ``uv`` with ``u < v``. Wheels label their
spokes ``x0, x1, ...`` and rims ``y0, y1, ...``, with rim ``yi`` in a triangle
with ``xi`` and ``x(i+1)``. The augmenting element of the Möbius
constructions is ``g``.
"""
import re
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple

import networkx as nx

from ..config import load_named_matrices
from ..errors import (
    NonBinaryUniformError,
    NonSimpleMatroidError,
    NotATriangleError,
    UnknownMatroidError,
    UnsupportedSizeError,
)
from .core import MAX_ELEMENTS, BinaryMatroid, Label
from .gf2 import Gf2Matrix
from .isomorphism import is_isomorphic

GAMMA = "g"

# aliases between the published names of the base matroids and their matrices
MATRIX_ALIASES = {"P": "B", "Q": "C", "R": "D", "S": "E"}


def edge_label(u: int, v: int, wide: bool = False) -> str:
    u, v = min(u, v), max(u, v)
    return f"{u}-{v}" if wide else f"{u}{v}"


def graph_matroid(graph: nx.Graph) -> BinaryMatroid:
    """Cycle matroid with edges in sorted order."""
    edges = sorted((min(u, v), max(u, v)) for u, v in graph.edges())
    wide = any(v >= 10 for _, v in edges)
    return BinaryMatroid.from_graph(edges, [edge_label(u, v, wide) for u, v in edges])


def wheel(r: int) -> BinaryMatroid:
    if not 3 <= r <= 7:
        raise UnsupportedSizeError(f"wheels are built for ranks 3..7, got {r}")
    spokes = [1 << i for i in range(r)]
    rims = [(1 << i) | (1 << ((i + 1) % r)) for i in range(r)]
    labels = [f"x{i}" for i in range(r)] + [f"y{i}" for i in range(r)]
    return BinaryMatroid.from_columns(spokes + rims, labels)


def mobius_extension(n: int) -> BinaryMatroid:
    """The rank-n wheel extended by ``g`` whose fundamental circuit is the spokes plus ``g``."""
    return wheel(n).extend((1 << n) - 1, GAMMA)


def triadic_mobius(r: int) -> BinaryMatroid:
    """Rank-r triadic Möbius matroid, the dual of ``mobius_extension(r - 1)``."""
    if r % 2:
        raise ValueError(f"triadic Möbius matroids have even rank, got {r}")
    if not 4 <= r <= 8:
        raise UnsupportedSizeError(f"triadic Möbius matroids are built for ranks 4..8, got {r}")
    return mobius_extension(r - 1).dual()


def fano() -> BinaryMatroid:
    return BinaryMatroid.from_columns(list(range(1, 8)))


def triangular_mobius(r: int) -> BinaryMatroid:
    """Rank-r triangular Möbius matroid.

    For ``r >= 4`` with ``n = r - 1``: take the cycle ``0..n-1`` joined to two
    apex vertices ``u = n`` and ``w = n + 1`` that are adjacent through ``g``,
    delete the cycle edge ``01`` and add ``e`` in a circuit with ``w0`` and ``u1``.
    """
    if r == 3:
        return fano()
    if not 4 <= r <= 5:
        raise UnsupportedSizeError(f"triangular Möbius matroids are built for ranks 3..5, got {r}")
    n = r - 1
    u, w = n, n + 1
    edges: List[Tuple[int, int]] = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, u) for i in range(n)] + [(i, w) for i in range(n)]
    labels: List[Label] = [edge_label(a, b) for a, b in edges]
    edges.append((u, w))
    labels.append(GAMMA)

    def incidence(a: int, b: int) -> int:
        return (1 << a) ^ (1 << b)

    columns = [incidence(a, b) for a, b in edges]
    keep = [i for i, label in enumerate(labels) if label != "01"]
    columns = [columns[i] for i in keep] + [incidence(w, 0) ^ incidence(u, 1)]
    return BinaryMatroid.from_columns(columns, [labels[i] for i in keep] + ["e"])


def complete_graph(n: int) -> BinaryMatroid:
    return graph_matroid(nx.complete_graph(n))


def quartic_mobius(n: int) -> BinaryMatroid:
    """M(QML_n): the odd cycle on n vertices plus chords to the two vertices at distance (n-1)/2."""
    if n % 2 == 0 or n < 5:
        raise ValueError(f"quartic Möbius ladders have an odd number >= 5 of vertices, got {n}")
    return graph_matroid(nx.circulant_graph(n, [1, (n - 1) // 2]))


def cubic_mobius(n: int) -> BinaryMatroid:
    """M(CML_n): the even cycle on n vertices plus its antipodal chords."""
    if n % 2 or n < 6:
        raise ValueError(f"cubic Möbius ladders have an even number >= 6 of vertices, got {n}")
    return graph_matroid(nx.circulant_graph(n, [1, n // 2]))


def direct_sum(first: BinaryMatroid, second: BinaryMatroid) -> BinaryMatroid:
    columns = list(first.columns) + [c << first.rows for c in second.columns]
    labels: List[Label] = list(first.labels) + list(second.labels)
    if len(set(labels)) != len(labels):
        labels = list(range(len(labels)))
    return BinaryMatroid.from_columns(columns, labels)


def uniform_binary(r: int, n: int) -> BinaryMatroid:
    """U(r, n) for the binary cases: free, circuit, rank 0 and rank 1."""
    if not 0 <= r <= n:
        raise NonBinaryUniformError(f"U({r},{n}) is not a matroid")
    if r == 0:
        return BinaryMatroid.from_columns([0] * n)
    if r == n:
        return BinaryMatroid.from_columns([1 << i for i in range(n)])
    if r == n - 1:
        return BinaryMatroid.from_columns([1 << i for i in range(r)] + [(1 << r) - 1])
    if r == 1:
        return BinaryMatroid.from_columns([1] * n)
    raise NonBinaryUniformError(f"U({r},{n}) has no GF(2) representation")


def pg_complement(matroid: BinaryMatroid) -> BinaryMatroid:
    """The points of PG(r-1, 2) missing from a simple rank-r matroid."""
    if not matroid.is_simple():
        raise NonSimpleMatroidError("the projective complement needs a simple matroid")
    present = set(matroid.columns)
    missing = [v for v in range(1, 1 << matroid.rows) if v not in present]
    if len(missing) > MAX_ELEMENTS:
        raise UnsupportedSizeError(f"complement has {len(missing)} points")
    return BinaryMatroid.from_columns(missing)


def delta_y(matroid: BinaryMatroid, triangle: Tuple[Label, Label, Label]) -> BinaryMatroid:
    """Replace a triangle {a, b, c} by a triad on the same labels.

    In a new coordinate ``z``: ``a -> b + z``, ``b -> a + z``, ``c -> z``, so the
    result has rank one more and ``{a, b, c}`` becomes the star at a new vertex.
    """
    mask = matroid.subset(triangle)
    if not matroid.is_triangle(mask):
        raise NotATriangleError(f"{list(triangle)} is not a triangle")
    a, b, c = (matroid.resolve_label(label) for label in triangle)
    z = 1 << matroid.rows
    columns = list(matroid.columns)
    columns[a], columns[b], columns[c] = matroid.columns[b] | z, matroid.columns[a] | z, z
    return BinaryMatroid.from_columns(columns, matroid.labels)


@lru_cache(maxsize=None)
def named(name: str) -> BinaryMatroid:
    """A matroid from the packaged matrix and graph fixtures."""
    entries = load_named_matrices()
    name = MATRIX_ALIASES.get(name, name)
    if name not in entries:
        raise UnknownMatroidError(f"no named matroid {name!r}")
    entry = entries[name]
    if entry.graph is not None:
        return graph_matroid(nx.Graph(entry.graph))
    matrix = _named_matrix(name, entries)
    labels: Optional[List[Label]] = None
    if entry.row_labels is not None and entry.column_labels is not None:
        labels = [*entry.row_labels, *entry.column_labels]
    matroid = BinaryMatroid.from_reduced_matrix(matrix, labels)
    return matroid.dual() if entry.dual else matroid


def _named_matrix(name: str, entries: Dict) -> Gf2Matrix:
    entry = entries[name]
    if entry.rows is not None:
        matrix = Gf2Matrix.from_rows(entry.rows)
    elif entry.base is not None:
        matrix = _named_matrix(entry.base, entries)
    else:
        raise UnknownMatroidError(f"named matrix {name!r} has neither rows nor a base")
    if entry.stack is not None:
        matrix = matrix.stack(Gf2Matrix.from_rows(entry.stack))
    if entry.augment is not None:
        matrix = matrix.augment(entry.augment)
    return matrix


def fixture_names() -> List[str]:
    return list(load_named_matrices())


BUILTINS: Dict[str, Callable[[], BinaryMatroid]] = {
    "K4": lambda: complete_graph(4),
    "K5": lambda: complete_graph(5),
    "K33": lambda: graph_matroid(nx.complete_bipartite_graph(3, 3)),
    "Q3": lambda: graph_matroid(
        nx.convert_node_labels_to_integers(nx.hypercube_graph(3), ordering="sorted")
    ),
    "O": lambda: graph_matroid(nx.octahedral_graph()),
    "F7": fano,
}

_PATTERNS: List[Tuple[str, Callable[[int], BinaryMatroid]]] = [
    (r"Wheel(\d+)", wheel),
    (r"QML(\d+)", quartic_mobius),
    (r"CML(\d+)", cubic_mobius),
    (r"Upsilon(\d+)", triadic_mobius),
    (r"Delta(\d+)", triangular_mobius),
    (r"M(\d+)", mobius_extension),
]


def parse_name(text: str) -> BinaryMatroid:
    """Resolve names such as ``K5``, ``QML7``, ``Delta4*``, ``U45`` or ``A6``; ``*`` dualizes."""
    token = text.strip()
    if token.endswith("*"):
        return parse_name(token[:-1]).dual()
    if token in BUILTINS:
        return BUILTINS[token]()
    if token in MATRIX_ALIASES or token in fixture_names():
        return named(token)
    uniform = re.fullmatch(r"U(\d)(\d+)", token)
    if uniform:
        return uniform_binary(int(uniform.group(1)), int(uniform.group(2)))
    for pattern, builder in _PATTERNS:
        match = re.fullmatch(pattern, token)
        if match:
            return builder(int(match.group(1)))
    raise UnknownMatroidError(f"unknown matroid name {text!r}")


# classes reported by name, primal forms first so that F7 wins over Upsilon4*
# fmt: off
IDENTIFIABLE = (
    "K4", "F7", "K33", "Q3", "K5", "O", "Wheel4", "Wheel5", "Wheel6", "Wheel7",
    "Delta4", "Delta5", "Upsilon6", "Upsilon8", "CML8", "CML10", "QML7",
    "P", "Q", "R", "S", "H1", "H2", "H3", "Q3cross", "Y9",
    "A1", "A2", "A3", "A4", "A5", "A6", "B1", "B2", "B3", "B4", "B5",
    "C1", "C2", "C3", "C4", "D1", "E1",
)
# fmt: on


@lru_cache(maxsize=None)
def _identifiable() -> Tuple[Tuple[str, BinaryMatroid], ...]:
    return tuple((name, parse_name(name)) for name in IDENTIFIABLE)


def identify(matroid: BinaryMatroid) -> Optional[str]:
    """Name of the named class isomorphic to ``matroid``, with ``*`` for a dual."""
    for name, candidate in _identifiable():
        if candidate.size != matroid.size:
            continue
        if candidate.rows == matroid.rows and is_isomorphic(candidate, matroid):
            return name
        if candidate.size - candidate.rows == matroid.rows and is_isomorphic(
            candidate.dual(), matroid
        ):
            return f"{name}*"
    return None


def theorem_graph_pairs() -> List[Tuple[str, str, str]]:
    """Graph pairs (G, H) whose cycle matroids form the interesting graphic pairs.

    The third entry is ``fascinating`` or ``interesting``.
    """
    pairs = [(big, "K4") for big in ("K5", "Q3", "O", "QML7")]
    pairs += [(big, "K33") for big in ("H1", "H2", "H3", "QML7")]
    pairs += [(big, "K5") for big in ("Q3cross", "Y9", "QML7", "CML10")]
    return [
        (big, small, "interesting" if (big, small) == ("QML7", "K4") else "fascinating")
        for big, small in pairs
    ]
