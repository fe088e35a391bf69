# matroids/__init__.py
from .connectivity import find_separation, is_3connected, is_44S_connected, is_ifc
from .core import BinaryMatroid
from .isomorphism import dedupe, fingerprint, is_isomorphic
from .zoo import identify, parse_name

__all__ = [
    "BinaryMatroid",
    "dedupe",
    "find_separation",
    "fingerprint",
    "identify",
    "is_3connected",
    "is_44S_connected",
    "is_ifc",
    "is_isomorphic",
    "parse_name",
]
