# workflows/verification_workflow.py
import asyncio
from pathlib import Path
from typing import Any, Dict, List

from langchain_core.runnables import Runnable, RunnableSequence

from ..config import RunConfig
from ..moves import (
    VerificationReport,
    load_certificates,
    mobius_ladder_compression,
    quartic_ladder_compression,
    run_certificate,
)
from ..utils.logging import setup_logger
from ..utils.pool import WorkerPool
from ..utils.trackers import RunState, TimingTracker
from .runnables import with_error_report

logger = setup_logger()

# the largest Möbius and quartic ladder moves that fit in fifteen elements
MOBIUS_LADDER_RANK = 6
QUARTIC_LADDER_HALF = 3


def _ladder_moves() -> List[VerificationReport]:
    return [
        mobius_ladder_compression(MOBIUS_LADDER_RANK),
        quartic_ladder_compression(QUARTIC_LADDER_HALF),
    ]


class VerificationWorkflow:
    """Runs every packaged move certificate and the two ladder-compression families."""

    def __init__(self, config: RunConfig, pool: WorkerPool, state: RunState):
        self.config = config
        self.pool = pool
        self.state = state

    def setup(self) -> Runnable:
        return with_error_report(
            RunnableSequence(
                self._load_certificates,
                self._verify_certificates,
                self._verify_ladder_moves,
                self._write_report,
            )
        )

    async def _load_certificates(self, inputs: Dict[str, Any]) -> Dict[str, Any]:
        certificates = load_certificates(inputs.get("certificates_path"))
        logger.info(f"Loaded {len(certificates)} certificates")
        inputs["certificates"] = certificates
        return inputs

    async def _verify_certificates(self, inputs: Dict[str, Any]) -> Dict[str, Any]:
        with TimingTracker("certificates", self.config.report_path, self.state):
            inputs["results"] = await self.pool.amap(run_certificate, inputs["certificates"])
        return inputs

    async def _verify_ladder_moves(self, inputs: Dict[str, Any]) -> Dict[str, Any]:
        with TimingTracker("ladder moves", self.config.report_path, self.state):
            inputs["results"].extend(await asyncio.to_thread(_ladder_moves))
        return inputs

    async def _write_report(self, inputs: Dict[str, Any]) -> Dict[str, Any]:
        results: List[VerificationReport] = inputs["results"]
        lines = [line for result in results for line in result.lines()]
        passed = sum(result.passed for result in results)
        lines.append(f"Verified {passed}/{len(results)}")
        for result in results:
            if not result.passed:
                failure = result.first_failure()
                self.state.record_failure(
                    f"{result.name}: {failure.name if failure else 'no conditions checked'}"
                )
        path = Path(self.config.report_path) / "verification.txt"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text("".join(line + "\n" for line in lines), encoding="utf-8")
        inputs["report"].extend(lines)
        inputs["success"] = self.state.success
        return inputs
