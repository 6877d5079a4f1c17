"""
Sweep files: flat ``key = value`` text with ``#`` comments and comma-separated lists.

Recognised keys::

    benchmark           mlotz | lotz | omm | cocz          (required)
    m                   number of objectives               (default 2)
    n                   comma-separated problem sizes      (required)
    replicates          runs per n                         (default 1)
    base_seed           64-bit base seed                   (default 0)
    mutation            one-bit | standard-bit             (default one-bit)
    archiver            aga | hva | mga | none             (default aga)
    archive_size        integer or "front"                 (default front)
    budget              integer or "default"               (default default)
    stop                full-front | coverage | budget     (default full-front)
    coverage_threshold  fraction in (0, 1]                 (default 1.0)
    aga_grid_range      AGA interval end                   (default f_max)
    aga_bisections      AGA bisections per axis            (default from L and m)
    reference_point     comma-separated HVA reference      (default -1,...,-1)
    workers             parallel workers                   (default 1)
    executor            process | thread                   (default process)
    output              CSV path                           (optional)
"""
import logging
from typing import Dict, List, Optional, Tuple

from .archivers import ArchiverKind
from .benchmarks import Benchmark
from .errors import ConfigError
from .mutation import MutationKind
from .records import RunConfig, StopRule, SweepSpec

logger = logging.getLogger(__name__)

SWEEP_KEYS = (
    "benchmark", "m", "n", "replicates", "base_seed", "mutation", "archiver", "archive_size",
    "budget", "stop", "coverage_threshold", "aga_grid_range", "aga_bisections",
    "reference_point", "workers", "executor", "output",
)


def parse_key_values(text: str, source: str = "<text>") -> Dict[str, str]:
    """
    :raises ConfigError: on malformed lines, unknown or repeated keys
    """
    values: Dict[str, str] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{number}: expected key = value, got {raw.strip()!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.lower().replace("-", "_")
        if key not in SWEEP_KEYS:
            raise ConfigError(f"{source}:{number}: unknown key {key!r}")
        if key in values:
            raise ConfigError(f"{source}:{number}: key {key!r} given twice")
        values[key] = value
    return values


def _int(values: Dict[str, str], key: str, default: Optional[int] = None) -> Optional[int]:
    if key not in values:
        return default
    try:
        return int(values[key])
    except ValueError:
        raise ConfigError(f"{key} must be an integer, got {values[key]!r}") from None


def _int_list(values: Dict[str, str], key: str) -> Tuple[int, ...]:
    try:
        return tuple(int(item) for item in values[key].split(",") if item.strip())
    except ValueError:
        raise ConfigError(f"{key} must be a comma-separated list of integers, got {values[key]!r}") from None


def sweep_from_text(text: str, source: str = "<text>") -> SweepSpec:
    values = parse_key_values(text, source)
    for required in ("benchmark", "n"):
        if required not in values:
            raise ConfigError(f"{source}: missing required key {required!r}")
    n_values = _int_list(values, "n")
    if not n_values:
        raise ConfigError(f"{source}: n lists no problem sizes")
    benchmark = Benchmark.from_name(values["benchmark"], n_values[0], _int(values, "m", 2))

    archive_size = None
    if values.get("archive_size", "front").lower() != "front":
        archive_size = _int(values, "archive_size")
    budget = None
    if values.get("budget", "default").lower() != "default":
        budget = _int(values, "budget")
    try:
        threshold = float(values.get("coverage_threshold", "1.0"))
    except ValueError:
        raise ConfigError(f"coverage_threshold must be a number, got {values['coverage_threshold']!r}") from None
    reference_point = _int_list(values, "reference_point") if "reference_point" in values else None

    template = RunConfig(
        benchmark=benchmark,
        archive_size=archive_size if archive_size is not None else benchmark.front_size,
        mutation=MutationKind.from_name(values.get("mutation", "one-bit")),
        archiver=ArchiverKind.from_name(values.get("archiver", "aga")),
        budget=budget,
        stop=StopRule.from_name(values.get("stop", "full-front")),
        coverage_threshold=threshold,
        aga_grid_range=_int(values, "aga_grid_range"),
        aga_bisections=_int(values, "aga_bisections"),
        reference_point=reference_point,
    )
    spec = SweepSpec(
        template=template,
        n_values=n_values,
        replicates=_int(values, "replicates", 1),
        base_seed=_int(values, "base_seed", 0),
        archive_size=archive_size,
        output=values.get("output") or None,
        workers=_int(values, "workers", 1),
        executor=values.get("executor", "process").lower(),
    )
    logger.debug(f"Sweep from {source}: {benchmark.name} m={benchmark.m} n={list(n_values)} x{spec.replicates}")
    return spec


def load_sweep(path: str) -> SweepSpec:
    """
    :raises ConfigError: for unreadable files and invalid contents
    """
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as e:
        raise ConfigError(f"Cannot read sweep file {path}: {e}") from e
    return sweep_from_text(text, path)


def format_sweep(spec: SweepSpec) -> List[str]:
    """Sweep file lines equivalent to ``spec``."""
    template = spec.template
    lines = [
        f"benchmark = {template.benchmark.name}",
        f"m = {template.benchmark.m}",
        f"n = {', '.join(str(n) for n in spec.n_values)}",
        f"replicates = {spec.replicates}",
        f"base_seed = {spec.base_seed}",
        f"mutation = {template.mutation.value}",
        f"archiver = {template.archiver.value}",
        f"archive_size = {spec.archive_size if spec.archive_size is not None else 'front'}",
        f"budget = {template.budget if template.budget is not None else 'default'}",
        f"stop = {template.stop.value}",
        f"coverage_threshold = {template.coverage_threshold}",
        f"workers = {spec.workers}",
        f"executor = {spec.executor}",
    ]
    if template.aga_grid_range is not None:
        lines.append(f"aga_grid_range = {template.aga_grid_range}")
    if template.aga_bisections is not None:
        lines.append(f"aga_bisections = {template.aga_bisections}")
    if template.reference_point is not None:
        lines.append(f"reference_point = {', '.join(str(v) for v in template.reference_point)}")
    if spec.output:
        lines.append(f"output = {spec.output}")
    return lines
