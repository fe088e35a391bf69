# workflows/search_workflow.py
import asyncio
from functools import partial
from pathlib import Path
from typing import Any, Dict, List

from langchain_core.runnables import Runnable, RunnableSequence

from ..config import ExpectedCounts, RunConfig
from ..errors import MissingPrerequisiteError, UnsupportedSizeError
from ..generation import Catalogue
from ..generation.catalogue import MIN_SIZE
from ..search import (
    PairKind,
    PairRecord,
    PairRegistry,
    build_target_minor_matrix,
    build_targets,
    find_fascinating,
    interesting_records,
    small_fascinating_pairs,
)
from ..utils.logging import setup_logger
from ..utils.pool import WorkerPool
from ..utils.trackers import RunState, TimingTracker
from .runnables import with_error_report

logger = setup_logger()

SEARCH_SIZES = (14, 15)
# intermediates smaller than this are never tested
SEARCH_FLOOR = 11
# the classes of interesting pairs that are not fascinating, up to duality
INTERESTING_ONLY = 3


def search_report_path(report_path: Path, size: int) -> Path:
    return Path(report_path) / f"fascinating_{size}.txt"


def _load_ifc(config: RunConfig, sizes: range) -> Catalogue:
    if not config.ifc_path.exists():
        raise MissingPrerequisiteError(f"{config.ifc_path} does not exist; run ifc first")
    ifc = Catalogue.load(config.ifc_path)
    missing = [n for n in sizes if n not in ifc.completed]
    if missing:
        raise MissingPrerequisiteError(
            f"{config.ifc_path} lacks sizes {missing}; run populate and ifc with "
            f"--max-size {max(sizes)}"
        )
    return ifc


def _interesting_for(record: PairRecord, ifc: Catalogue) -> List[PairRecord]:
    return interesting_records(record.big, record.small, ifc)


class SearchWorkflow:
    """Finds the fascinating pairs whose larger matroid has ``size`` elements."""

    def __init__(self, config: RunConfig, pool: WorkerPool, state: RunState,
                 expected: ExpectedCounts):
        self.config = config
        self.pool = pool
        self.state = state
        self.expected = expected

    def setup(self) -> Runnable:
        return with_error_report(
            RunnableSequence(
                self._load_ifc,
                self._build_targets,
                self._build_matrix,
                self._search,
                self._write_report,
            )
        )

    async def _load_ifc(self, inputs: Dict[str, Any]) -> Dict[str, Any]:
        size = inputs["size"]
        if size not in SEARCH_SIZES:
            raise UnsupportedSizeError(f"search covers sizes {SEARCH_SIZES}, not {size}")
        inputs["ifc"] = _load_ifc(self.config, range(10, size + 1))
        return inputs

    async def _build_targets(self, inputs: Dict[str, Any]) -> Dict[str, Any]:
        inputs["targets"] = build_targets(inputs["ifc"])
        return inputs

    async def _build_matrix(self, inputs: Dict[str, Any]) -> Dict[str, Any]:
        sizes = range(SEARCH_FLOOR, inputs["size"])
        with TimingTracker("target-minor matrix", self.config.report_path, self.state):
            inputs["matrix"] = await asyncio.to_thread(
                build_target_minor_matrix, inputs["ifc"], inputs["targets"], sizes, self.pool.map
            )
        return inputs

    async def _search(self, inputs: Dict[str, Any]) -> Dict[str, Any]:
        size = inputs["size"]
        with TimingTracker(f"search {size}", self.config.report_path, self.state) as tracker:
            inputs["records"] = await asyncio.to_thread(
                find_fascinating, inputs["ifc"], inputs["matrix"], size, SEARCH_FLOOR,
                self.pool.map,
            )
        inputs["timing"] = tracker.line()
        return inputs

    async def _write_report(self, inputs: Dict[str, Any]) -> Dict[str, Any]:
        size = inputs["size"]
        records = inputs["records"]
        registry = PairRegistry()
        registry.extend(records)
        path = search_report_path(self.config.report_path, size)
        registry.write(path)
        logger.info(f"Wrote {len(records)} pairs to {path}")

        self.state.pairs_found = len(records)
        expected = self.expected.fascinating_found.get(size)
        if expected is not None and expected != len(records):
            self.state.record_failure(
                f"size {size} search found {len(records)}, expected {expected}"
            )
        inputs["report"].extend(registry.lines())
        inputs["report"].extend([f"Found {len(records)} pairs of size {size}", inputs["timing"]])
        inputs["success"] = self.state.success
        return inputs


class PairsWorkflow:
    """Joins the search reports with the small pairs and looks for interesting pairs."""

    def __init__(self, config: RunConfig, pool: WorkerPool, state: RunState,
                 expected: ExpectedCounts):
        self.config = config
        self.pool = pool
        self.state = state
        self.expected = expected

    def setup(self) -> Runnable:
        return with_error_report(
            RunnableSequence(
                self._load_reports,
                self._register_fascinating,
                self._find_interesting,
                self._write_report,
            )
        )

    async def _load_reports(self, inputs: Dict[str, Any]) -> Dict[str, Any]:
        found: List[PairRecord] = []
        for size in SEARCH_SIZES:
            path = search_report_path(self.config.report_path, size)
            if not path.exists():
                raise MissingPrerequisiteError(f"{path} does not exist; run search --size {size}")
            found.extend(PairRegistry.read(path).records)
        inputs["found"] = found
        inputs["ifc"] = _load_ifc(self.config, range(MIN_SIZE, 11))
        return inputs

    async def _register_fascinating(self, inputs: Dict[str, Any]) -> Dict[str, Any]:
        registry = PairRegistry()
        registry.extend(small_fascinating_pairs())
        registry.extend(inputs["found"])
        logger.info(
            f"{len(registry.reduced())} fascinating pairs up to duality, "
            f"{registry.redundant()} dual-redundant"
        )
        inputs["registry"] = registry
        return inputs

    async def _find_interesting(self, inputs: Dict[str, Any]) -> Dict[str, Any]:
        registry: PairRegistry = inputs["registry"]
        fascinating = registry.of_kind(PairKind.FASCINATING)
        with TimingTracker("interesting", self.config.report_path, self.state) as tracker:
            results = await self.pool.amap(
                partial(_interesting_for, ifc=inputs["ifc"]), fascinating
            )
        for records in results:
            registry.extend(records)
        inputs["timing"] = tracker.line()
        return inputs

    async def _write_report(self, inputs: Dict[str, Any]) -> Dict[str, Any]:
        registry: PairRegistry = inputs["registry"]
        registry.write(Path(self.config.report_path) / "pairs.txt")
        table = registry.pair_table()
        interesting = registry.of_kind(PairKind.INTERESTING)

        report = inputs["report"]
        report.extend(registry.lines())
        report.append(f"Dual-redundant pairs: {registry.redundant()}")
        report.append(f"Interesting pairs that are not fascinating: {len(interesting)}")
        report.extend(
            f"TABLE small={small} big={big} count={count}" for (small, big), count in table.items()
        )
        report.append(inputs["timing"])

        self.state.pairs_found = len(registry.reduced())
        if len(interesting) != INTERESTING_ONLY:
            self.state.record_failure(
                f"{len(interesting)} interesting-only pairs, expected {INTERESTING_ONLY}"
            )
        if table != self.expected.table():
            self.state.record_failure(f"pair table {table} differs from the published one")
        inputs["success"] = self.state.success
        return inputs
