"""Binary matroids, their exhaustive catalogue and the search for fascinating pairs."""
from .matroids import BinaryMatroid, identify, is_isomorphic, parse_name

__version__ = "0.1.0"

__all__ = ["BinaryMatroid", "identify", "is_isomorphic", "parse_name"]
