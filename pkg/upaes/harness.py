"""
Sweeps over problem sizes and log-log scaling fits of their run tables.
"""
import json
import logging
import math
import re
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Union

import numpy as np
from pandas import DataFrame

from .errors import ConfigError
from .monitoring import SweepMonitor
from .paes import run
from .pool import ReplicatePool
from .records import RunRecord, SweepSpec
from .results import ResultStore
from .writers import CsvRecordWriter

logger = logging.getLogger(__name__)


def sweep(spec: SweepSpec, monitor: Optional[SweepMonitor] = None) -> List[RunRecord]:
    """
    Run every (n, replicate) of ``spec``.

    Records come back, and are written to ``spec.output``, in (n, replicate)
    order whatever the number of workers. Rows that fail to write are logged
    and counted; completed batches are flushed as they finish.
    """
    configs = spec.configs()
    monitor = monitor or SweepMonitor(total_runs=len(configs))
    writer = CsvRecordWriter(spec.output) if spec.output else None
    logger.info(f"Sweep: {len(configs)} runs of {spec.template.benchmark.name} m={spec.template.benchmark.m} "
                f"over n={list(spec.n_values)} with {spec.workers} {spec.executor} workers")

    def on_result(index: int, record: RunRecord):
        monitor.record(record)
        if writer is not None:
            writer.write(record.to_row())

    try:
        with ReplicatePool(spec.workers, spec.executor) as pool:
            records = pool.map_ordered(run, configs, on_result=on_result)
            stats = pool.get_pool_stats()
            logger.debug(f"Pool: {stats['completed']} runs on {stats['max_workers']} {stats['executor']} workers, "
                         f"{stats['busy_seconds']:.1f}s busy")
    finally:
        if writer is not None:
            writer.close()
            if writer.failed_rows:
                logger.warning(f"{writer.failed_rows} rows could not be written to {spec.output}")
    status = monitor.health_check()
    logger.info(f"Sweep finished: {status['overall_status']} {status['warnings'] + status['issues']}")
    return records


@dataclass(frozen=True)
class GrowthModel:
    """A growth function ``g(n)`` named as on the command line."""
    name: str
    function: Callable[[float], float]

    def __call__(self, n: float) -> float:
        value = self.function(n)
        if not value > 0:
            raise ConfigError(f"Model {self.name} is not positive at n={n}")
        return value

    @classmethod
    def parse(cls, text: str) -> "GrowthModel":
        """
        ``n2``, ``n3``, ``n4``, ``n3log2`` or ``grid(m)``.

        ``grid(m)`` is the m-LOTZ cover bound: ``n^3`` for m=2, ``n^3 log^2 n``
        for m=4 and ``n (2n/m)^(m/2) log(n/m)`` from m=6 on.
        """
        key = text.strip().lower().replace(" ", "")
        simple = {
            "n2": lambda n: n ** 2,
            "n3": lambda n: n ** 3,
            "n4": lambda n: n ** 4,
            "n3log2": lambda n: n ** 3 * math.log(n) ** 2,
        }
        if key in simple:
            return cls(key, simple[key])
        match = re.fullmatch(r"grid\((\d+)\)", key)
        if match is None:
            raise ConfigError(f"Unknown growth model {text!r}; expected n2, n3, n4, n3log2 or grid(m)")
        m = int(match.group(1))
        if m < 2 or m % 2:
            raise ConfigError(f"grid(m) needs an even m >= 2, got {m}")
        if m == 2:
            return cls(key, simple["n3"])
        if m == 4:
            return cls(key, simple["n3log2"])
        return cls(key, lambda n: n * (2 * n / m) ** (m / 2) * math.log(n / m))


@dataclass
class ScalingFit:
    slope: float
    intercept: float
    ratios: DataFrame
    excluded: List[int]
    censored: int = 0

    @property
    def ratio_spread(self) -> float:
        """max/min of mean T(n) / g(n)."""
        values = self.ratios["ratio"]
        return float(values.max() / values.min())

    def bound_failures(self, min_slope: Optional[float] = None, max_slope: Optional[float] = None,
                       max_ratio_spread: Optional[float] = None, max_censored: Optional[int] = None) -> List[str]:
        """
        Bounds the fit breaks; unset bounds are not checked.

        :param min_slope: Lowest acceptable slope
        :param max_slope: Highest acceptable slope
        :param max_ratio_spread: The ratio spread must stay strictly below this
        :param max_censored: Most runs allowed without a value for the fitted column
        :return: One message per broken bound
        """
        failures = []
        if min_slope is not None and self.slope < min_slope:
            failures.append(f"slope {self.slope:.3f} below {min_slope}")
        if max_slope is not None and self.slope > max_slope:
            failures.append(f"slope {self.slope:.3f} above {max_slope}")
        if max_ratio_spread is not None and not self.ratio_spread < max_ratio_spread:
            failures.append(f"ratio spread {self.ratio_spread:.2f} not below {max_ratio_spread}")
        if max_censored is not None and self.censored > max_censored:
            failures.append(f"{self.censored} censored runs, at most {max_censored} allowed")
        return failures

    def to_dict(self) -> dict:
        return {
            "slope": self.slope,
            "intercept": self.intercept,
            "ratio_spread": self.ratio_spread,
            "censored": self.censored,
            "excluded_n": self.excluded,
            "ratios": json.loads(self.ratios.to_json(orient="records")),
        }


def fit_scaling(table: Union[ResultStore, Sequence[RunRecord], str], model: Union[GrowthModel, str],
                column: str = "iterations_to_full_front") -> ScalingFit:
    """
    Least-squares line through ``(log n, log mean T(n))`` and the ratios ``mean T(n) / g(n)``.

    Means use uncensored runs only. Sizes with censored runs are kept with a
    warning, sizes with no uncensored run are dropped with a warning.

    :param table: Result store, run records or a run-table CSV path
    :param model: Growth model or its name
    :param column: Run-table column holding T
    :raises ConfigError: with fewer than three usable sizes
    """
    if isinstance(model, str):
        model = GrowthModel.parse(model)
    if isinstance(table, str):
        table = ResultStore.from_csv(table)
    elif not isinstance(table, ResultStore):
        table = ResultStore.from_records(table)
    means = table.mean_by_n(column)

    excluded = []
    rows = []
    censored = 0
    for row in means.itertuples(index=False):
        n, runs, uncensored, mean = int(row.n), int(row.runs), int(row.uncensored), row.mean
        censored += runs - uncensored
        if uncensored == 0 or mean is None or not mean > 0:
            logger.warning(f"n={n}: no uncensored run with a positive {column}, excluded from the fit")
            excluded.append(n)
            continue
        if uncensored < runs:
            logger.warning(f"n={n}: {runs - uncensored} of {runs} runs censored, mean uses the rest")
        rows.append({"n": n, "runs": runs, "uncensored": uncensored, "mean": float(mean),
                     "ratio": float(mean) / model(n)})
    if len(rows) < 3:
        raise ConfigError(f"A scaling fit needs at least three problem sizes with uncensored runs, got {len(rows)}")

    ratios = DataFrame(rows)
    slope, intercept = np.polyfit(np.log(ratios["n"].to_numpy(dtype=float)),
                                  np.log(ratios["mean"].to_numpy(dtype=float)), 1)
    fit = ScalingFit(float(slope), float(intercept), ratios, excluded, censored)
    logger.info(f"Fit of {column} against {model.name}: slope {fit.slope:.3f}, ratio spread {fit.ratio_spread:.2f}")
    return fit
