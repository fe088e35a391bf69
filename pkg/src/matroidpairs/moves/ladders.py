# moves/ladders.py
"""Ladder-compression moves on Möbius matroids and quartic Möbius ladders."""
from typing import List

from ..errors import UnknownLabelError, UnsupportedSizeError
from ..matroids.core import MAX_ELEMENTS, BinaryMatroid
from ..matroids.gf2 import popcount
from ..matroids.isomorphism import is_isomorphic
from ..matroids.zoo import GAMMA, edge_label, mobius_extension, quartic_mobius
from .certificates import Condition, LadderCertificate, VerificationReport


def ladder_conditions(matroid: BinaryMatroid, ladder: LadderCertificate) -> List[Condition]:
    try:
        positions = [matroid.resolve_label(label) for label in ladder.labels]
    except UnknownLabelError as e:
        return [Condition("labels", False, str(e))]
    return [Condition("distinct", len(set(positions)) == 12, f"{list(ladder.labels)}")]


def compress_ladder(matroid: BinaryMatroid, ladder: LadderCertificate) -> BinaryMatroid:
    """``M \\ c1, c2 / d1, b2``."""
    return matroid.minor(contract=list(ladder.contracted), delete=list(ladder.deleted))


def mobius_ladder_compression(r: int) -> VerificationReport:
    """Check that the rank-(r-1) Möbius extension comes from the rank-(r+1) one by a ladder move.

    Spokes are ``x0..xr``, rims ``y0..yr`` with ``{xi, yi, x(i+1)}`` a triangle,
    and ``g`` closes the circuit of all spokes.
    """
    if r % 2 or r < 6:
        raise ValueError(f"the Möbius ladder move needs an even r >= 6, got {r}")
    spokes = r + 1
    if 2 * spokes + 1 > MAX_ELEMENTS:
        raise UnsupportedSizeError(f"the Möbius extension of rank {spokes} exceeds {MAX_ELEMENTS}")
    big = mobius_extension(spokes)

    def x(i: int) -> str:
        return f"x{i % spokes}"

    def y(i: int) -> str:
        return f"y{i % spokes}"

    report = VerificationReport(f"ladder-compression Upsilon{r + 2}* -> Upsilon{r}*")
    report.check(
        "spokes with g form a circuit",
        big.is_circuit([x(i) for i in range(spokes)] + [GAMMA]),
    )
    report.check(
        f"{{{x(r - 1)}, {x(r)}, {y(r - 1)}}} is a circuit",
        big.is_circuit([x(r - 1), x(r), y(r - 1)]),
    )
    difference = [x(i) for i in range(r - 1)] + [y(r - 1), GAMMA]
    report.check("their symmetric difference is a circuit", big.is_circuit(difference))
    for i in range(spokes):
        quad = [y(i), x(i + 1), y(i + 1), GAMMA]
        report.check(f"{{{', '.join(quad)}}} is a cocircuit", big.is_cocircuit(quad))
    cocycle = [x(r - 1), x(r), y(r - 2), y(r)]
    report.check(
        f"{{{', '.join(cocycle)}}} is a disjoint union of cocircuits",
        big.is_cocycle(cocycle),
    )

    ladder = LadderCertificate(
        tuple(
            label
            for i in (r - 4, r - 3, r - 2, r - 1, r, 0)
            for label in (x(i), y(i))
        )
    )
    report.conditions.extend(ladder_conditions(big, ladder))
    result = compress_ladder(big, ladder)
    # x0 is deleted and xr takes its place
    spanning = [x(r)] + [x(i) for i in range(1, r - 1)] + [GAMMA]
    report.check(
        "the remaining spokes with g form a spanning circuit",
        result.is_circuit(spanning) and result.rank(spanning) == result.rows,
    )
    report.check(
        f"result is isomorphic to Upsilon{r}*",
        is_isomorphic(result, mobius_extension(r - 1)),
    )
    return report


def quartic_ladder_compression(n: int) -> VerificationReport:
    """``M(QML_{2n+1}) / 01, n(n+1) \\ 0n, 1(n+1)`` against ``M(QML_{2n-1})``."""
    if n < 3:
        raise ValueError(f"the quartic ladder move needs n >= 3, got {n}")
    vertices = 2 * n + 1
    if 2 * vertices > MAX_ELEMENTS:
        raise UnsupportedSizeError(f"QML{vertices} has {2 * vertices} edges")
    wide = vertices > 10
    big = quartic_mobius(vertices)
    contracted = [edge_label(0, 1, wide), edge_label(n, n + 1, wide)]
    deleted = [edge_label(0, n, wide), edge_label(1, n + 1, wide)]
    report = VerificationReport(f"ladder-compression QML{vertices} -> QML{vertices - 2}")
    try:
        mask = big.subset(contracted + deleted)
    except UnknownLabelError as e:
        report.check("labels", False, str(e))
        return report
    report.check("distinct", popcount(mask) == 4, f"{contracted + deleted}")
    result = big.minor(contract=contracted, delete=deleted)
    report.check(
        f"result is isomorphic to QML{vertices - 2}",
        is_isomorphic(result, quartic_mobius(vertices - 2)),
    )
    return report
