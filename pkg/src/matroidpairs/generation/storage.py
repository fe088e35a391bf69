# generation/storage.py
"""MCAT catalogue files and the compact text encoding of matroids.

File layout::

    MCAT 1
    CELL n=<n> r=<r> count=<k>
    <n-r lowercase hex columns of the reduced matrix>   (k lines)

Cells are written for every completed size and every rank 0..7, in ``(n, r)``
order, so the sizes present in a file are exactly the completed ones.
"""
import os
import re
import tempfile
from pathlib import Path
from typing import Dict, List, Tuple

from ..errors import CatalogueFormatError
from ..matroids.core import BinaryMatroid
from ..matroids.gf2 import Gf2Matrix

HEADER = "MCAT 1"
RANKS = range(8)
_CELL = re.compile(r"CELL n=(\d+) r=(\d+) count=(\d+)")
_ENCODED = re.compile(r"r(\d+):([0-9a-f.]*)")

Cells = Dict[Tuple[int, int], List[BinaryMatroid]]


def canonical(matroid: BinaryMatroid) -> BinaryMatroid:
    """Standard form ``[I | A]`` with labels ``0..n-1``."""
    return matroid.standard_form(relabel=True)


def matrix_line(matroid: BinaryMatroid) -> str:
    """The reduced-matrix columns of a matroid as whitespace-separated hex."""
    return " ".join(f"{column:x}" for column in matroid.reduced_matrix().data)


def parse_line(line: str, n: int, r: int) -> BinaryMatroid:
    tokens = line.split()
    if len(tokens) != n - r:
        raise CatalogueFormatError(f"expected {n - r} columns for n={n} r={r}, got {line!r}")
    try:
        data = tuple(int(token, 16) for token in tokens)
        return BinaryMatroid.from_reduced_matrix(Gf2Matrix(r, n - r, data))
    except ValueError as e:
        raise CatalogueFormatError(f"bad catalogue row {line!r}: {e}") from e


def encode_matroid(matroid: BinaryMatroid) -> str:
    """``r<rank>:<hex>.<hex>...`` over the reduced matrix."""
    columns = ".".join(f"{column:x}" for column in matroid.reduced_matrix().data)
    return f"r{matroid.rows}:{columns}"


def decode_matroid(text: str) -> BinaryMatroid:
    match = _ENCODED.fullmatch(text.strip())
    if not match:
        raise CatalogueFormatError(f"not an encoded matroid: {text!r}")
    rank = int(match.group(1))
    body = match.group(2)
    tokens = body.split(".") if body else []
    try:
        data = tuple(int(token, 16) for token in tokens)
        return BinaryMatroid.from_reduced_matrix(Gf2Matrix(rank, len(data), data))
    except ValueError as e:
        raise CatalogueFormatError(f"bad encoded matroid {text!r}: {e}") from e


def render(cells: Cells, sizes: List[int]) -> str:
    lines = [HEADER]
    for n in sorted(sizes):
        for r in RANKS:
            members = cells.get((n, r), [])
            lines.append(f"CELL n={n} r={r} count={len(members)}")
            lines.extend(matrix_line(member) for member in members)
    return "\n".join(lines) + "\n"


def write_catalogue(path: Path, cells: Cells, sizes: List[int]) -> None:
    """Write atomically: a temporary file in the same directory is renamed over ``path``."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    handle, temporary = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(handle, "w", encoding="utf-8", newline="\n") as stream:
            stream.write(render(cells, sizes))
        os.replace(temporary, path)
    except BaseException:
        Path(temporary).unlink(missing_ok=True)
        raise


def read_catalogue(path: Path) -> Tuple[Cells, List[int]]:
    """Parse an MCAT file into its cells and the sizes it covers."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines or lines[0].strip() != HEADER:
        raise CatalogueFormatError(f"{path} does not start with {HEADER!r}")
    cells: Cells = {}
    sizes: List[int] = []
    index = 1
    while index < len(lines):
        line = lines[index].strip()
        index += 1
        if not line:
            continue
        match = _CELL.fullmatch(line)
        if not match:
            raise CatalogueFormatError(f"{path}:{index}: expected a CELL header, got {line!r}")
        n, r, count = (int(group) for group in match.groups())
        if index + count > len(lines):
            raise CatalogueFormatError(f"{path}: cell n={n} r={r} is truncated")
        cells[(n, r)] = [parse_line(row, n, r) for row in lines[index : index + count]]
        index += count
        if n not in sizes:
            sizes.append(n)
    return cells, sizes
