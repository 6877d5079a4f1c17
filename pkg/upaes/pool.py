"""
Worker pool that fans independent runs out and returns results in submission order.
"""
import logging
import threading
import time
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from typing import Callable, Dict, Iterable, List, Optional, TypeVar

from .errors import ConfigError

T = TypeVar("T")
R = TypeVar("R")


class ReplicatePool:
    """
    A pool of workers for independent replicates.

    Results come back in the order the items were given, whatever order the
    workers finish in. With ``max_workers=1`` everything runs in the calling
    thread. Processes are the default because a PAES iteration is pure Python.
    """

    def __init__(self, max_workers: int = 1, executor: str = "process"):
        """
        :param max_workers: Number of worker processes or threads
        :param executor: ``process`` or ``thread``
        """
        if max_workers < 1:
            raise ConfigError(f"max_workers must be positive, got {max_workers}")
        if executor not in ("process", "thread"):
            raise ConfigError(f"executor must be process or thread, got {executor!r}")
        self.max_workers = max_workers
        self.executor_kind = executor
        self._executor: Optional[Executor] = None
        self._lock = threading.RLock()
        self._submitted = 0
        self._completed = 0
        self._failed = 0
        self._busy_seconds = 0.0
        self.logger = logging.getLogger(__name__)

    def _get_executor(self) -> Executor:
        with self._lock:
            if self._executor is None:
                if self.executor_kind == "process":
                    self._executor = ProcessPoolExecutor(max_workers=self.max_workers)
                else:
                    self._executor = ThreadPoolExecutor(max_workers=self.max_workers)
                self.logger.debug(f"Started {self.max_workers} {self.executor_kind} workers")
            return self._executor

    def map_ordered(self, fn: Callable[[T], R], items: Iterable[T],
                    on_result: Optional[Callable[[int, R], None]] = None) -> List[R]:
        """
        Apply ``fn`` to every item.

        :param fn: Picklable callable when the executor uses processes
        :param items: Work items
        :param on_result: Called as ``on_result(index, result)`` in index order
        :return: Results in item order
        :raises Exception: the first failure, after the remaining work was cancelled
        """
        items = list(items)
        started = time.time()
        with self._lock:
            self._submitted += len(items)
        results: List[R] = []
        try:
            if self.max_workers == 1:
                for index, item in enumerate(items):
                    result = fn(item)
                    self._done()
                    if on_result:
                        on_result(index, result)
                    results.append(result)
            else:
                futures = [self._get_executor().submit(fn, item) for item in items]
                try:
                    for index, future in enumerate(futures):
                        result = future.result()
                        self._done()
                        if on_result:
                            on_result(index, result)
                        results.append(result)
                except BaseException:
                    for future in futures:
                        future.cancel()
                    raise
        except Exception as e:
            with self._lock:
                self._failed += 1
            self.logger.error(f"Worker failed after {len(results)} of {len(items)} items: {e}")
            raise
        finally:
            with self._lock:
                self._busy_seconds += time.time() - started
        return results

    def _done(self):
        with self._lock:
            self._completed += 1

    def close(self):
        with self._lock:
            if self._executor is not None:
                self._executor.shutdown(wait=True, cancel_futures=True)
                self._executor = None

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        self.close()
        return False

    def get_pool_stats(self) -> Dict:
        with self._lock:
            return {
                'max_workers': self.max_workers,
                'executor': self.executor_kind,
                'submitted': self._submitted,
                'completed': self._completed,
                'failed': self._failed,
                'busy_seconds': self._busy_seconds,
            }
