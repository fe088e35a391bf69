# workflows/catalogue_workflow.py
import asyncio
from typing import Any, Dict, List

from langchain_core.runnables import Runnable, RunnableSequence

from ..config import ExpectedCounts, RunConfig
from ..errors import MissingPrerequisiteError
from ..generation import Catalogue, filter_ifc, populate
from ..generation.catalogue import MIN_SIZE
from ..utils.logging import setup_logger
from ..utils.pool import WorkerPool
from ..utils.trackers import RunState, TimingTracker
from .runnables import with_error_report

logger = setup_logger()


def _count_lines(
    label: str,
    counts: Dict[int, List[int]],
    expected: Dict[int, List[int]],
    timings: Dict[int, str],
    state: RunState,
) -> List[str]:
    lines = []
    for n, vector in sorted(counts.items()):
        lines.append(f"{label}({n}): {vector}")
        if n in timings:
            lines.append(timings[n])
        if n in expected and expected[n] != vector:
            state.record_failure(f"{label}({n}) is {vector}, expected {expected[n]}")
    return lines


class PopulateWorkflow:
    """Grows the catalogue one size at a time, saving after every size."""

    def __init__(self, config: RunConfig, pool: WorkerPool, state: RunState,
                 expected: ExpectedCounts):
        self.config = config
        self.pool = pool
        self.state = state
        self.expected = expected

    def setup(self) -> Runnable:
        return with_error_report(
            RunnableSequence(
                self._load_catalogue,
                self._populate_sizes,
                self._check_counts,
            )
        )

    async def _load_catalogue(self, inputs: Dict[str, Any]) -> Dict[str, Any]:
        path = self.config.catalogue_path
        if path.exists():
            catalogue = Catalogue.load(path)
            logger.info(f"Resuming after size {catalogue.largest} from {path}")
        else:
            catalogue = Catalogue.seeded()
            catalogue.save(path)
            logger.info(f"Started {path} from the wheel on {MIN_SIZE} elements")
        inputs["catalogue"] = catalogue
        return inputs

    async def _populate_sizes(self, inputs: Dict[str, Any]) -> Dict[str, Any]:
        catalogue: Catalogue = inputs["catalogue"]
        timings: Dict[int, str] = {}
        for n in range(catalogue.largest + 1, self.config.max_size + 1):
            logger.info(f"Populating size {n}")
            with TimingTracker(f"populate {n}", self.config.report_path, self.state) as tracker:
                await asyncio.to_thread(populate, catalogue, n, self.pool.map)
                catalogue.save(self.config.catalogue_path)
            timings[n] = tracker.line()
        inputs["timings"] = timings
        return inputs

    async def _check_counts(self, inputs: Dict[str, Any]) -> Dict[str, Any]:
        catalogue: Catalogue = inputs["catalogue"]
        counts = {
            n: catalogue.counts(n)
            for n in sorted(catalogue.completed)
            if n <= self.config.max_size
        }
        self.state.populate_counts.update(counts)
        inputs["report"].extend(
            _count_lines("Populate", counts, self.expected.populate, inputs["timings"], self.state)
        )
        inputs["success"] = self.state.success
        return inputs


class IfcWorkflow:
    """Filters every completed catalogue size down to its internally 4-connected members."""

    def __init__(self, config: RunConfig, pool: WorkerPool, state: RunState,
                 expected: ExpectedCounts):
        self.config = config
        self.pool = pool
        self.state = state
        self.expected = expected

    def setup(self) -> Runnable:
        return with_error_report(
            RunnableSequence(
                self._load_catalogues,
                self._filter_sizes,
                self._check_counts,
            )
        )

    async def _load_catalogues(self, inputs: Dict[str, Any]) -> Dict[str, Any]:
        if not self.config.catalogue_path.exists():
            raise MissingPrerequisiteError(
                f"{self.config.catalogue_path} does not exist; run populate first"
            )
        inputs["catalogue"] = Catalogue.load(self.config.catalogue_path)
        ifc_path = self.config.ifc_path
        inputs["ifc"] = Catalogue.load(ifc_path) if ifc_path.exists() else Catalogue()
        return inputs

    async def _filter_sizes(self, inputs: Dict[str, Any]) -> Dict[str, Any]:
        catalogue: Catalogue = inputs["catalogue"]
        ifc: Catalogue = inputs["ifc"]
        timings: Dict[int, str] = {}
        pending = [
            n for n in sorted(catalogue.completed)
            if n <= self.config.max_size and n not in ifc.completed
        ]
        for n in pending:
            with TimingTracker(f"ifc {n}", self.config.report_path, self.state) as tracker:
                await asyncio.to_thread(filter_ifc, catalogue, ifc, n, self.pool.map)
                ifc.save(self.config.ifc_path)
            timings[n] = tracker.line()
        missing = set(range(MIN_SIZE, self.config.max_size + 1)) - catalogue.completed
        if missing:
            logger.warning(f"Catalogue sizes {sorted(missing)} are missing; run populate")
        inputs["timings"] = timings
        return inputs

    async def _check_counts(self, inputs: Dict[str, Any]) -> Dict[str, Any]:
        ifc: Catalogue = inputs["ifc"]
        counts = {n: ifc.counts(n) for n in sorted(ifc.completed) if n <= self.config.max_size}
        self.state.ifc_counts.update(counts)
        inputs["report"].extend(
            _count_lines("PopulateIFC", counts, self.expected.ifc, inputs["timings"], self.state)
        )
        inputs["success"] = self.state.success
        return inputs
