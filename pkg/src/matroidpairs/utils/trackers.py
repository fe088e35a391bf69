import json
import time
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

import psutil

from ..utils.logging import setup_logger

logger = setup_logger()


def cpu_seconds() -> float:
    """CPU time of this process and of its finished or running children."""
    process = psutil.Process()
    total = sum(process.cpu_times()[:4])
    for child in process.children(recursive=True):
        try:
            total += sum(child.cpu_times()[:2])
        except (psutil.NoSuchProcess, psutil.AccessDenied):
            pass
    return total


@dataclass
class RunState:
    """Counts, timings and failed checks collected during one command."""

    populate_counts: Dict[int, List[int]] = field(default_factory=dict)
    ifc_counts: Dict[int, List[int]] = field(default_factory=dict)
    cpu_times: Dict[str, float] = field(default_factory=dict)
    wall_times: Dict[str, float] = field(default_factory=dict)
    pairs_found: int = 0
    failed_checks: List[str] = field(default_factory=list)

    def update_metrics(self, step: str, cpu: float, wall: float):
        """Update metrics for a step."""
        self.cpu_times[step] = self.cpu_times.get(step, 0.0) + cpu
        self.wall_times[step] = self.wall_times.get(step, 0.0) + wall

    def record_failure(self, check: str):
        logger.error(f"Check failed: {check}")
        self.failed_checks.append(check)

    @property
    def success(self) -> bool:
        return not self.failed_checks


class TimingTracker:
    """Times one pipeline step and appends it to ``summary.json``."""

    def __init__(self, step: str, report_dir: Optional[Path] = None,
                 state: Optional[RunState] = None):
        self.step = step
        self.state = state
        self.summary_path = Path(report_dir) / "summary.json" if report_dir else None
        self.cpu = 0.0
        self.wall = 0.0
        self._cpu_start = 0.0
        self._wall_start = 0.0

    def line(self) -> str:
        return f"CPU time: {self.cpu:.2f} s,  Wall time: {self.wall:.2f} s"

    def __enter__(self) -> "TimingTracker":
        self._cpu_start = cpu_seconds()
        self._wall_start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.wall = time.perf_counter() - self._wall_start
        self.cpu = cpu_seconds() - self._cpu_start
        if exc_type is not None:
            logger.error(f"Error during {self.step}: {exc_val}")
        logger.info(f"{self.step}: {self.line()}")
        if self.state is not None:
            self.state.update_metrics(self.step, self.cpu, self.wall)
        if self.summary_path is not None:
            self._update_summary(failed=exc_type is not None)
        return False

    def _load_summary(self) -> Dict[str, Any]:
        """Load existing summary or create new one."""
        if self.summary_path is not None and self.summary_path.exists():
            try:
                return json.loads(self.summary_path.read_text())
            except json.JSONDecodeError:
                logger.warning("Could not read existing summary, creating new one")
        return {"steps": [], "totals": {"cpu_seconds": 0.0, "wall_seconds": 0.0}}

    def _update_summary(self, failed: bool) -> None:
        try:
            summary = self._load_summary()
            summary["steps"].append({
                "timestamp": datetime.now().isoformat(timespec="seconds"),
                "step": self.step,
                "cpu_seconds": round(self.cpu, 3),
                "wall_seconds": round(self.wall, 3),
                "failed": failed,
            })
            summary["totals"]["cpu_seconds"] = round(
                sum(s["cpu_seconds"] for s in summary["steps"]), 3
            )
            summary["totals"]["wall_seconds"] = round(
                sum(s["wall_seconds"] for s in summary["steps"]), 3
            )
            self.summary_path.parent.mkdir(parents=True, exist_ok=True)
            self.summary_path.write_text(json.dumps(summary, indent=2))
        except OSError as e:
            logger.error(f"Error updating summary: {e}")
