"""
Run and sweep configuration, run records and default budgets.
"""
import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, List, Optional, Tuple

from .archivers import ArchiverKind
from .benchmarks import Benchmark, BenchmarkKind
from .errors import ConfigError
from .mutation import MutationKind
from .rng import derive_seed
from .schema import RUN_RECORD_TABLE

STUCK_BUDGET = 10 ** 6


class StopRule(Enum):
    FULL_FRONT = "full-front"
    COVERAGE = "coverage"
    BUDGET = "budget"

    @classmethod
    def from_name(cls, name: str) -> "StopRule":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise ConfigError(f"Unknown stop rule {name!r}; expected full-front, coverage or budget") from None


def default_budget(benchmark: Benchmark, mutation: MutationKind) -> int:
    """
    Iteration budget used when a run does not set one.

    :param benchmark: Benchmark instance
    :param mutation: Mutation kind
    :return: ``50 n^3`` (LOTZ, one-bit), ``50 n^3 log^2 n`` (m=4),
        ``50 n (2n/m+1)^(m/2) max(1, log(n/m))`` (m >= 6), ``20 n^4`` for
        standard-bit mutation and a fixed ``10^6`` for OMM and COCZ
    """
    n, m = benchmark.n, benchmark.m
    if benchmark.kind is not BenchmarkKind.MLOTZ:
        return STUCK_BUDGET
    if mutation is MutationKind.STANDARD_BIT:
        return 20 * n ** 4
    if m == 2:
        return 50 * n ** 3
    if m == 4:
        return int(math.ceil(50 * n ** 3 * max(1.0, math.log(n)) ** 2))
    return int(math.ceil(50 * n * benchmark.front_size * max(1.0, math.log(n / m))))


@dataclass(frozen=True)
class RunConfig:
    """One PAES-25 run. ``budget=None`` selects :func:`default_budget`."""
    benchmark: Benchmark
    archive_size: int
    mutation: MutationKind = MutationKind.ONE_BIT
    archiver: ArchiverKind = ArchiverKind.AGA
    seed: int = 0
    budget: Optional[int] = None
    stop: StopRule = StopRule.FULL_FRONT
    coverage_threshold: float = 1.0
    aga_grid_range: Optional[int] = None
    aga_bisections: Optional[int] = None
    reference_point: Optional[Tuple[int, ...]] = None
    trace_path: Optional[str] = None
    trace_every: str = "event"
    debug: bool = False
    replicate: int = 0

    def __post_init__(self):
        if self.archive_size < 1:
            raise ConfigError(f"Archive size must be at least 1, got {self.archive_size}")
        if self.budget is not None and self.budget < 1:
            raise ConfigError(f"Budget must be at least 1, got {self.budget}")
        if not 0.0 < self.coverage_threshold <= 1.0:
            raise ConfigError(f"Coverage threshold must lie in (0, 1], got {self.coverage_threshold}")
        if self.trace_every not in ("event", "iteration"):
            raise ConfigError(f"trace_every must be event or iteration, got {self.trace_every!r}")
        if self.reference_point is not None and len(self.reference_point) != self.benchmark.m:
            raise ConfigError(f"Reference point needs {self.benchmark.m} components, got {len(self.reference_point)}")
        if not 0 <= self.seed < 1 << 64:
            raise ConfigError(f"Seed must be a 64-bit unsigned integer, got {self.seed}")

    @property
    def resolved_budget(self) -> int:
        return self.budget if self.budget is not None else default_budget(self.benchmark, self.mutation)

    def with_instance(self, n: int, replicate: int, seed: int) -> "RunConfig":
        return replace(self, benchmark=Benchmark(self.benchmark.kind, n, self.benchmark.m),
                       replicate=replicate, seed=seed)


@dataclass
class RunRecord:
    """Outcome of one run; :meth:`to_row` gives the CSV row."""
    config: RunConfig
    iterations: int
    iterations_to_first_pareto: Optional[int]
    iterations_to_full_front: Optional[int]
    censored: bool
    coverage_fraction: float
    hv_fraction: float
    wall_time: float
    archive_fitness: List[Tuple[int, ...]] = field(default_factory=list)

    def to_row(self) -> Dict[str, object]:
        config = self.config
        return {
            "benchmark": config.benchmark.name,
            "m": config.benchmark.m,
            "n": config.benchmark.n,
            "mutation": config.mutation.value,
            "archiver": config.archiver.value,
            "archive_size": config.archive_size,
            "replicate": config.replicate,
            "seed": config.seed,
            "budget": config.resolved_budget,
            "stop": config.stop.value,
            "iterations": self.iterations,
            "iterations_to_first_pareto": self.iterations_to_first_pareto,
            "iterations_to_full_front": self.iterations_to_full_front,
            "censored": self.censored,
            "coverage_fraction": self.coverage_fraction,
            "hv_fraction": self.hv_fraction,
            "archive_count": len(self.archive_fitness),
            "wall_time": self.wall_time,
        }


@dataclass(frozen=True)
class SweepSpec:
    """
    A grid of runs: every ``n`` in ``n_values`` times ``replicates``.

    Replicate ``i`` of size ``n`` runs with seed ``derive_seed(base_seed, n, i)``.
    ``archive_size=None`` sizes the archive to the front of each ``n``.
    """
    template: RunConfig
    n_values: Tuple[int, ...]
    replicates: int = 1
    base_seed: int = 0
    archive_size: Optional[int] = None
    output: Optional[str] = None
    workers: int = 1
    executor: str = "process"

    def __post_init__(self):
        if not self.n_values:
            raise ConfigError("A sweep needs at least one n value")
        if self.replicates < 1:
            raise ConfigError(f"replicates must be at least 1, got {self.replicates}")
        if self.workers < 1:
            raise ConfigError(f"workers must be at least 1, got {self.workers}")
        if self.executor not in ("process", "thread"):
            raise ConfigError(f"executor must be process or thread, got {self.executor!r}")
        for n in self.n_values:
            # validates the instance before any run starts
            Benchmark(self.template.benchmark.kind, n, self.template.benchmark.m)

    def configs(self) -> List[RunConfig]:
        """Run configurations in (n, replicate) order."""
        configs = []
        for n in self.n_values:
            for replicate in range(self.replicates):
                config = self.template.with_instance(n, replicate, derive_seed(self.base_seed, n, replicate))
                size = self.archive_size if self.archive_size is not None else config.benchmark.front_size
                configs.append(replace(config, archive_size=size))
        return configs

    @property
    def columns(self) -> List[str]:
        return RUN_RECORD_TABLE.column_names
