import logging
import tempfile
from pathlib import Path
from typing import Generator

import pytest

from matroidpairs.generation import Catalogue, filter_ifc, populate

# sizes every default test run builds; sizes from twelve on are left to slow tests
SMALL_SIZE = 10


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def temp_dir() -> Generator[Path, None, None]:
    """Create a temporary directory for tests."""
    with tempfile.TemporaryDirectory() as tmp_dir:
        yield Path(tmp_dir)


@pytest.fixture(autouse=True)
def test_env(monkeypatch, temp_dir: Path):
    """Point every configured path into the temporary directory and run inline."""
    monkeypatch.chdir(temp_dir)
    monkeypatch.setenv("MCAT_JOBS", "1")
    monkeypatch.setenv("MCAT_CATALOGUE_PATH", str(temp_dir / "catalogue.mcat"))
    monkeypatch.setenv("MCAT_IFC_PATH", str(temp_dir / "ifc.mcat"))
    monkeypatch.setenv("MCAT_REPORT_PATH", str(temp_dir / "reports"))
    monkeypatch.setenv("MCAT_LOG_DIR", str(temp_dir / "logs"))
    yield
    logger = logging.getLogger("matroidpairs")
    for handler in [h for h in logger.handlers if isinstance(h, logging.FileHandler)]:
        logger.removeHandler(handler)
        handler.close()


@pytest.fixture(scope="session")
def small_catalogue() -> Catalogue:
    """The catalogue through ten elements. Tests must not modify it."""
    catalogue = Catalogue.seeded()
    for n in range(7, SMALL_SIZE + 1):
        populate(catalogue, n)
    return catalogue


@pytest.fixture(scope="session")
def small_ifc(small_catalogue: Catalogue) -> Catalogue:
    ifc = Catalogue()
    for n in sorted(small_catalogue.completed):
        filter_ifc(small_catalogue, ifc, n)
    return ifc


@pytest.fixture(scope="session")
def catalogue_11(small_catalogue: Catalogue) -> Catalogue:
    """A copy of the small catalogue grown to eleven elements."""
    catalogue = Catalogue(dict(small_catalogue.cells), set(small_catalogue.completed))
    populate(catalogue, 11)
    return catalogue


@pytest.fixture
def catalogue_copy(small_catalogue: Catalogue) -> Catalogue:
    """A copy of the small catalogue that a test may grow."""
    return Catalogue(dict(small_catalogue.cells), set(small_catalogue.completed))
