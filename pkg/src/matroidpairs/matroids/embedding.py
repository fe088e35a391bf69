# matroids/embedding.py
"""Linear embeddings between multisets of nonzero GF(2) points.

Binary matroids are uniquely representable, so two simple-ish point
configurations give isomorphic matroids exactly when an invertible linear map
carries one multiset onto the other. The same search, relaxed to multiset
inclusion, answers the deletion half of a minor test.
"""
from collections import Counter
from typing import Dict, Iterable, List, Sequence, Tuple

from .gf2 import dimension_of, insert_vector, reduce_vector

Level = List[Tuple[int, int]]


def triangle_counts(points: Iterable[int]) -> Dict[int, int]:
    """Number of triangles {p, q, p+q} through each distinct point."""
    present = set(points)
    return {
        p: sum(1 for q in present if q != p and (p ^ q) in present) // 2 for p in present
    }


def basis_plan(points: Sequence[int], triangles: Dict[int, int]) -> Tuple[List[int], List[Level]]:
    """Choose an ordered basis of ``span(points)`` that covers points early.

    The first basis point is the one on most triangles; each later one is the
    point that brings the most remaining points into the span. Returns the
    basis and, for each basis index ``t``, the ``(point, combination)`` pairs
    whose combination over the basis has top index ``t``.
    """
    remaining = sorted(set(points))
    if not remaining:
        return [], []
    first = max(remaining, key=lambda p: (triangles.get(p, 0), -p))
    basis = [first]
    span: Dict[int, int] = {0: 0, first: 1}
    while True:
        outside = [p for p in remaining if p not in span]
        if not outside:
            break
        best = max(outside, key=lambda p: (sum(1 for q in outside if q ^ p in span), -p))
        bit = 1 << len(basis)
        span.update({vector ^ best: combo | bit for vector, combo in list(span.items())})
        basis.append(best)
    levels: List[Level] = [[] for _ in basis]
    for p in remaining:
        combo = span[p]
        levels[combo.bit_length() - 1].append((p, combo))
    return basis, levels


def embeds(src: Sequence[int], dst: Sequence[int], exact: bool = False) -> bool:
    """Is there an injective linear map sending the multiset ``src`` into ``dst``?

    With ``exact`` the map must carry ``src`` onto ``dst`` with equal
    multiplicities, which is matroid isomorphism for loopless configurations.
    """
    src_count = Counter(src)
    dst_count = Counter(dst)
    if exact:
        if len(src) != len(dst) or len(src_count) != len(dst_count):
            return False
        if sorted(src_count.values()) != sorted(dst_count.values()):
            return False
    elif len(src_count) > len(dst_count) or len(src) > len(dst):
        return False
    if not src_count:
        return True

    src_tri = triangle_counts(src_count)
    dst_tri = triangle_counts(dst_count)
    if exact and sorted(src_tri.values()) != sorted(dst_tri.values()):
        return False

    def fits(p: int, q: int) -> bool:
        if exact:
            return src_count[p] == dst_count[q] and src_tri[p] == dst_tri[q]
        return src_count[p] <= dst_count[q] and src_tri[p] <= dst_tri[q]

    basis, levels = basis_plan(list(src_count), src_tri)
    dst_points = sorted(dst_count)
    images: List[int] = []

    def consistent(level: Level) -> bool:
        for point, combo in level:
            image = 0
            index = 0
            while combo:
                if combo & 1:
                    image ^= images[index]
                combo >>= 1
                index += 1
            if image not in dst_count or not fits(point, image):
                return False
        return True

    def assign(t: int, pivots: List[int]) -> bool:
        if t == len(basis):
            return True
        for candidate in dst_points:
            if not fits(basis[t], candidate) or not reduce_vector(candidate, pivots):
                continue
            images.append(candidate)
            if consistent(levels[t]):
                extended = list(pivots)
                insert_vector(candidate, extended)
                if assign(t + 1, extended):
                    return True
            images.pop()
        return False

    return assign(0, [0] * dimension_of(dst_points))
