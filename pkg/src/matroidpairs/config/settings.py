# config/settings.py
import json
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import psutil
from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings, SettingsConfigDict


def get_config_path() -> Path:
    """Directory holding the packaged fixtures."""
    return Path(__file__).parent


def default_jobs() -> int:
    return psutil.cpu_count(logical=False) or 1


class RunConfig(BaseSettings):
    """Settings shared by every subcommand; ``MCAT_*`` environment variables override them."""

    model_config = SettingsConfigDict(env_file=".env", env_prefix="MCAT_", extra="ignore")

    max_size: int = Field(default=15, ge=6, le=15)
    jobs: int = Field(default_factory=default_jobs, ge=1)
    catalogue_path: Path = Field(default=Path("catalogue.mcat"))
    ifc_path: Path = Field(default=Path("ifc.mcat"))
    report_path: Path = Field(default=Path("reports"))
    log_dir: Optional[Path] = Field(default=Path("logs"))
    verbosity: int = Field(default=1, ge=0, le=2)


class ExpectedCounts(BaseModel):
    """Published count vectors the pipeline is checked against."""

    populate: Dict[int, List[int]]
    ifc: Dict[int, List[int]]
    fascinating_found: Dict[int, int]
    pair_table: List[Tuple[int, int, int]]

    def table(self) -> Dict[Tuple[int, int], int]:
        return {(small, big): count for small, big, count in self.pair_table}


class NamedMatrix(BaseModel):
    """One entry of ``named_matrices.json``: a reduced matrix, a stacked variant or a graph."""

    rows: Optional[List[List[int]]] = None
    base: Optional[str] = None
    stack: Optional[List[List[int]]] = None
    augment: Optional[List[int]] = None
    dual: bool = False
    row_labels: Optional[List[int]] = None
    column_labels: Optional[List[int]] = None
    graph: Optional[Dict[int, List[int]]] = None


def load_expected_counts() -> ExpectedCounts:
    path = get_config_path() / "expected_counts.json"
    return ExpectedCounts.model_validate(json.loads(path.read_text(encoding="utf-8")))


def load_named_matrices() -> Dict[str, NamedMatrix]:
    path = get_config_path() / "named_matrices.json"
    raw = json.loads(path.read_text(encoding="utf-8"))
    return {name: NamedMatrix.model_validate(entry) for name, entry in raw.items()}


def certificates_path() -> Path:
    return get_config_path() / "certificates.txt"
