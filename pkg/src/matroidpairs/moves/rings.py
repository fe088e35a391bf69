# moves/rings.py
"""Rings of bowties: detection, checking and trimming."""
from itertools import permutations
from typing import Dict, List, Tuple

import networkx as nx

from ..errors import InvalidCertificateError, UnknownLabelError
from ..matroids.core import BinaryMatroid
from ..matroids.gf2 import bits, popcount
from .certificates import BowtieRingCertificate, Condition

# (a, b, c) as ground-set positions
Orientation = Tuple[int, ...]


def _positions(matroid: BinaryMatroid, labels) -> List[int]:
    return [matroid.resolve_label(label) for label in labels]


def ring_conditions(matroid: BinaryMatroid, ring: BowtieRingCertificate) -> List[Condition]:
    try:
        positions = _positions(matroid, ring.labels)
    except UnknownLabelError as e:
        return [Condition("labels", False, str(e))]
    conditions = [
        Condition("distinct", len(set(positions)) == len(positions), f"{list(ring.labels)}")
    ]
    for i, triangle in enumerate(ring.triangles):
        conditions.append(
            Condition(f"T{i} triangle", matroid.is_triangle(list(triangle)), f"{list(triangle)}")
        )
    for i, quad in enumerate(ring.cocircuits()):
        mask = matroid.subset(quad)
        conditions.append(
            Condition(
                f"D{i} cocircuit",
                popcount(mask) == 4 and matroid.is_cocircuit(mask),
                f"{list(quad)}",
            )
        )
    return conditions


def trim_bowtie_ring(matroid: BinaryMatroid, ring: BowtieRingCertificate) -> BinaryMatroid:
    """Delete ``c_0, ..., c_k`` after checking every triangle and cocircuit of the ring."""
    for condition in ring_conditions(matroid, ring):
        if not condition.passed:
            raise InvalidCertificateError(condition.name, condition.detail)
    return matroid.delete(list(ring.deleted))


def _rotate_to_smallest(cycle: List[Orientation]) -> Tuple[Orientation, ...]:
    start = min(range(len(cycle)), key=lambda i: cycle[i])
    return tuple(cycle[start:] + cycle[:start])


def find_bowtie_rings(matroid: BinaryMatroid) -> List[BowtieRingCertificate]:
    """Every ring of bowties, each listed once up to rotation.

    A ring read backwards is reported separately: it swaps the roles of ``a_i``
    and ``c_i`` and so trims a different set.
    """
    triangles = matroid.triangles()
    if len(triangles) < 3:
        return []
    orientations: List[Orientation] = [
        order for triangle in triangles for order in permutations(bits(triangle))
    ]
    cocircuit: Dict[int, bool] = {}

    def is_cocircuit(mask: int) -> bool:
        if mask not in cocircuit:
            cocircuit[mask] = matroid.is_cocircuit(mask)
        return cocircuit[mask]

    graph = nx.DiGraph()
    graph.add_nodes_from(orientations)
    for first in orientations:
        first_mask = sum(1 << p for p in first)
        _, b, c = first
        for second in orientations:
            if first_mask & sum(1 << p for p in second):
                continue
            a_next, b_next, _ = second
            if is_cocircuit((1 << b) | (1 << c) | (1 << a_next) | (1 << b_next)):
                graph.add_edge(first, second)

    found = set()
    for cycle in nx.simple_cycles(graph, length_bound=matroid.size // 3):
        if len(cycle) < 3:
            continue
        union = 0
        for a, b, c in cycle:
            union |= (1 << a) | (1 << b) | (1 << c)
        if popcount(union) != 3 * len(cycle):
            continue
        found.add(_rotate_to_smallest(cycle))
    return [
        BowtieRingCertificate.from_labels(
            [matroid.labels[p] for orientation in ring for p in orientation]
        )
        for ring in sorted(found)
    ]
