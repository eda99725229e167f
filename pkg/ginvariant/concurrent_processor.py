"""
Concurrent Task Processor
Runs independent per-prime or per-field computations in a thread pool and
hands the results back in submission order.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Iterable, List, Optional

logger = logging.getLogger(__name__)


@dataclass
class TaskResult:
    index: int
    item: Any
    value: Any = None
    error: Optional[BaseException] = None

    @property
    def ok(self) -> bool:
        return self.error is None


class ConcurrentProcessor:
    def __init__(self, max_workers: int = 4, timeout: Optional[float] = None):
        """
        Initialize concurrent processor

        Args:
            max_workers: Maximum number of concurrent workers; 1 or less runs inline
            timeout: Seconds to wait for each task, None waits forever
        """
        self.max_workers = max_workers
        self.timeout = timeout
        self.executor = ThreadPoolExecutor(max_workers=max_workers) if max_workers > 1 else None

    def map_ordered(self, fn: Callable[[Any], Any], items: Iterable[Any]) -> List[TaskResult]:
        """
        Apply fn to every item and collect one TaskResult per item.

        Exceptions raised by fn are captured in TaskResult.error instead of
        aborting the batch. Results are indexed by submission position, so the
        output order never depends on the schedule.

        Args:
            fn: Callable applied to each item
            items: Work items

        Returns:
            List of TaskResult in the order of items
        """
        items = list(items)
        start_time = time.time()
        results: List[TaskResult] = [TaskResult(index=i, item=item) for i, item in enumerate(items)]

        if self.executor is None:
            for result in results:
                try:
                    result.value = fn(result.item)
                except Exception as e:
                    result.error = e
        else:
            futures = [(i, self.executor.submit(fn, item)) for i, item in enumerate(items)]
            for i, future in futures:
                try:
                    results[i].value = future.result(timeout=self.timeout)
                except Exception as e:
                    results[i].error = e

        failed = sum(1 for r in results if r.error is not None)
        logger.debug(
            f"[CONCURRENT] {len(items)} tasks on {self.max_workers} worker(s) "
            f"in {time.time() - start_time:.2f}s, {failed} failed"
        )
        return results

    def shutdown(self):
        """Shutdown the executor"""
        if self.executor is not None:
            self.executor.shutdown(wait=True)

    def __enter__(self) -> "ConcurrentProcessor":
        return self

    def __exit__(self, exc_type, exc, tb) -> None:
        self.shutdown()
