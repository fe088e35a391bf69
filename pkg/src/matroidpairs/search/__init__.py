# search/__init__.py
from .fascinating import find_fascinating, is_fascinating
from .interesting import generate_interesting, interesting_records
from .records import PairKind, PairRecord, PairRegistry, small_fascinating_pairs
from .targets import TargetMinorMatrix, build_target_minor_matrix, build_targets

__all__ = [
    "PairKind",
    "PairRecord",
    "PairRegistry",
    "TargetMinorMatrix",
    "build_target_minor_matrix",
    "build_targets",
    "find_fascinating",
    "generate_interesting",
    "interesting_records",
    "is_fascinating",
    "small_fascinating_pairs",
]
