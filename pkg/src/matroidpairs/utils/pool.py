# utils/pool.py
"""Ordered parallel map over a process pool.

Results always come back in input order, so everything merged from them is
independent of the worker count and of scheduling.
"""
import asyncio
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, List, Optional, Sequence

from tqdm import tqdm

from .logging import setup_logger

logger = setup_logger()


def _apply_chunk(fn: Callable[[Any], Any], chunk: Sequence[Any]) -> List[Any]:
    return [fn(item) for item in chunk]


def _chunks(items: Sequence[Any], size: int) -> List[Sequence[Any]]:
    return [items[start : start + size] for start in range(0, len(items), size)]


class WorkerPool:
    """A reusable process pool; with one job everything runs in this process."""

    def __init__(self, jobs: int = 1, description: Optional[str] = None):
        self.jobs = max(1, jobs)
        self.description = description
        self._executor: Optional[ProcessPoolExecutor] = None

    def __enter__(self) -> "WorkerPool":
        if self.jobs > 1:
            self._executor = ProcessPoolExecutor(max_workers=self.jobs)
            logger.debug(f"Started {self.jobs} worker processes")
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> bool:
        if self._executor is not None:
            self._executor.shutdown(cancel_futures=exc_type is not None)
            self._executor = None
        return False

    def chunk_size(self, count: int) -> int:
        return max(1, count // (self.jobs * 8))

    def map(self, fn: Callable[[Any], Any], items: Sequence[Any]) -> List[Any]:
        items = list(items)
        progress = tqdm(total=len(items), desc=self.description, disable=None, leave=False)
        try:
            if self._executor is None or len(items) < 2:
                results = []
                for item in items:
                    results.append(fn(item))
                    progress.update()
                return results
            results = []
            chunks = _chunks(items, self.chunk_size(len(items)))
            mapped = self._executor.map(_apply_chunk, [fn] * len(chunks), chunks)
            for chunk, done in zip(chunks, mapped):
                results.extend(done)
                progress.update(len(chunk))
            return results
        finally:
            progress.close()

    async def amap(self, fn: Callable[[Any], Any], items: Sequence[Any]) -> List[Any]:
        """Like :meth:`map`, awaiting the chunks through the running event loop."""
        items = list(items)
        if self._executor is None:
            return await asyncio.to_thread(self.map, fn, items)
        loop = asyncio.get_running_loop()
        chunks = _chunks(items, self.chunk_size(len(items)))
        futures = [
            loop.run_in_executor(self._executor, _apply_chunk, fn, chunk) for chunk in chunks
        ]
        results: List[Any] = []
        for done in await asyncio.gather(*futures):
            results.extend(done)
        return results
