# generation/__init__.py
from .catalogue import Catalogue
from .extensions import cosimple_coextensions, filter_ifc, populate, simple_extensions
from .storage import decode_matroid, encode_matroid, read_catalogue, write_catalogue

__all__ = [
    "Catalogue",
    "cosimple_coextensions",
    "decode_matroid",
    "encode_matroid",
    "filter_ifc",
    "populate",
    "read_catalogue",
    "simple_extensions",
    "write_catalogue",
]
