from .logging import setup_logger
from .pool import WorkerPool
from .trackers import RunState, TimingTracker

__all__ = ["RunState", "TimingTracker", "WorkerPool", "setup_logger"]
