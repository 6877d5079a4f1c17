"""
Run statistics collected while a sweep executes.
"""
import time
import logging
from typing import Any, Dict, List, Optional
from dataclasses import dataclass


@dataclass
class RunStats:
    """Bookkeeping for one finished run."""
    n: int
    replicate: int
    iterations: int
    wall_time: float
    censored: bool
    timestamp: float


class SweepMonitor:
    """
    Watches the runs of a sweep: slow runs, censored runs, throughput.
    """

    def __init__(self, total_runs: int = 0, slow_run_seconds: float = 60.0, max_history: int = 100000):
        """
        :param total_runs: Number of runs the sweep will execute, for progress logs
        :param slow_run_seconds: Runs slower than this are reported
        :param max_history: Maximum number of runs kept in the history
        """
        self.total_runs = total_runs
        self.slow_run_seconds = slow_run_seconds
        self.max_history = max_history
        self.history: List[RunStats] = []
        self.start_time = time.time()
        self.logger = logging.getLogger(__name__)

    def record_run(self, n: int, replicate: int, iterations: int, wall_time: float, censored: bool):
        stats = RunStats(n=n, replicate=replicate, iterations=iterations,
                         wall_time=wall_time, censored=censored, timestamp=time.time())
        self.history.append(stats)
        if len(self.history) > self.max_history:
            self.history = self.history[-self.max_history:]

        if wall_time > self.slow_run_seconds:
            self.logger.warning(f"Slow run: n={n} replicate={replicate} took {wall_time:.1f}s")
        if censored:
            self.logger.warning(f"Censored run: n={n} replicate={replicate} stopped at the budget ({iterations} iterations)")
        self.logger.debug(f"Run {len(self.history)}/{self.total_runs or '?'} done: n={n} replicate={replicate}")

    def record(self, record):
        """Record a :class:`RunRecord`."""
        config = record.config
        self.record_run(config.benchmark.n, config.replicate, record.iterations, record.wall_time, record.censored)

    def get_run_statistics(self, n: Optional[int] = None) -> Dict[str, Any]:
        """
        :param n: Restrict to one problem size (None for all)
        :return: Dictionary with run counts, timings and throughput
        """
        runs = [r for r in self.history if n is None or r.n == n]
        if not runs:
            return {
                'total_runs': 0,
                'censored_runs': 0,
                'average_wall_time': 0,
                'max_wall_time': 0,
                'iterations_per_second': 0,
            }
        wall_times = [r.wall_time for r in runs]
        total_time = sum(wall_times)
        return {
            'total_runs': len(runs),
            'censored_runs': sum(1 for r in runs if r.censored),
            'average_wall_time': total_time / len(runs),
            'max_wall_time': max(wall_times),
            'iterations_per_second': sum(r.iterations for r in runs) / total_time if total_time > 0 else 0,
        }

    def get_slow_runs(self) -> List[RunStats]:
        return [r for r in self.history if r.wall_time > self.slow_run_seconds]

    def health_check(self) -> Dict[str, Any]:
        """
        Summarise the sweep.

        :return: ``overall_status`` is ``complete``, ``warning`` (slow or censored
            runs) or ``incomplete`` (fewer runs than announced)
        """
        status = {
            'overall_status': 'complete',
            'issues': [],
            'warnings': [],
            'elapsed_seconds': time.time() - self.start_time,
        }
        stats = self.get_run_statistics()
        if self.total_runs and stats['total_runs'] < self.total_runs:
            status['issues'].append(f"Only {stats['total_runs']} of {self.total_runs} runs finished")
        if stats['censored_runs']:
            status['warnings'].append(f"{stats['censored_runs']} censored runs")
        slow = self.get_slow_runs()
        if slow:
            status['warnings'].append(f"{len(slow)} runs slower than {self.slow_run_seconds:.0f}s")

        if status['issues']:
            status['overall_status'] = 'incomplete'
        elif status['warnings']:
            status['overall_status'] = 'warning'
        return status
