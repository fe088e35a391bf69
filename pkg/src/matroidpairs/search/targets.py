# search/targets.py
"""Targets and the target-minor incidence matrix."""
from dataclasses import dataclass, field
from functools import partial
from typing import Dict, List, Sequence, Tuple

from ..generation.catalogue import Catalogue
from ..generation.extensions import Mapper, inline_map
from ..matroids.core import BinaryMatroid
from ..utils.logging import setup_logger

logger = setup_logger()

# cells whose members become targets, in this order
TARGET_CELLS = ((10, 4), (10, 5), (10, 6), (11, 4), (11, 5), (11, 6), (11, 7))
TARGET_COUNT = 24
MATRIX_SIZES = range(11, 15)


def build_targets(ifc: Catalogue) -> List[BinaryMatroid]:
    """The internally 4-connected matroids on ten or eleven elements."""
    ifc.require(10)
    ifc.require(11)
    targets = [member for n, r in TARGET_CELLS for member in ifc.cell(n, r)]
    if len(targets) != TARGET_COUNT:
        logger.warning(f"Expected {TARGET_COUNT} targets, found {len(targets)}")
    return targets


def target_mask(matroid: BinaryMatroid, targets: Sequence[BinaryMatroid]) -> int:
    """Bit ``j`` is set when target ``j`` is a proper minor of ``matroid``."""
    mask = 0
    for j, target in enumerate(targets):
        if target.size < matroid.size and matroid.has_minor(target):
            mask |= 1 << j
    return mask


@dataclass
class TargetMinorMatrix:
    """``bits[(n, r)][i]`` holds the target mask of member ``i`` of IFC cell ``(n, r)``."""

    targets: List[BinaryMatroid]
    bits: Dict[Tuple[int, int], List[int]] = field(default_factory=dict)

    def row(self, n: int, r: int, i: int) -> int:
        return self.bits[(n, r)][i]

    def indices(self, n: int, r: int, i: int) -> List[int]:
        mask = self.row(n, r, i)
        return [j for j in range(len(self.targets)) if (mask >> j) & 1]


def build_target_minor_matrix(
    ifc: Catalogue,
    targets: List[BinaryMatroid],
    sizes: Sequence[int] = MATRIX_SIZES,
    mapper: Mapper = inline_map,
) -> TargetMinorMatrix:
    matrix = TargetMinorMatrix(targets)
    keys = []
    members = []
    for n in sizes:
        ifc.require(n)
        for r, _, member in ifc.members(n):
            keys.append((n, r))
            members.append(member)
    logger.info(f"Testing {len(members)} matroids against {len(targets)} targets")
    masks = mapper(partial(target_mask, targets=tuple(targets)), members)
    for key, mask in zip(keys, masks):
        matrix.bits.setdefault(key, []).append(mask)
    for n in sizes:
        for r in range(8):
            matrix.bits.setdefault((n, r), [])
    return matrix
