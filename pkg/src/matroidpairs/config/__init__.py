from .settings import (
    ExpectedCounts,
    NamedMatrix,
    RunConfig,
    certificates_path,
    get_config_path,
    load_expected_counts,
    load_named_matrices,
)

__all__ = [
    "ExpectedCounts",
    "NamedMatrix",
    "RunConfig",
    "certificates_path",
    "get_config_path",
    "load_expected_counts",
    "load_named_matrices",
]
