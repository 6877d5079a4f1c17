"""
Property checks runnable from the command line.

Every suite takes a flat parameter dictionary, runs its check and returns a
:class:`VerifyReport` whose evidence is JSON-serialisable.
"""
import logging
import math
import time
from collections import Counter
from dataclasses import dataclass, field
from statistics import mean
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .archivers import AgaParams, ArchiverKind, aga_cell, make_archiver, mga_box, mga_expected_level
from .benchmarks import Benchmark, BenchmarkKind
from .core import mutually_incomparable, strictly_dominates
from .errors import ConfigError, InvariantViolation
from .hypervolume import chain_hv_formula, hypervolume, hva_spread_bound
from .mutation import MutationKind, MutationOperator
from .oracle import (GridWalkConfig, WalkMode, antichain_bounds, brute_force_attainable, brute_force_front,
                     cover_time, front_node, front_step_law, lattice_cell_hypervolume, lazy_step_law,
                     max_antichain_size, paes_front_cover_time)
from .paes import StepEvent, archiver_for, init, run, step
from .records import RunConfig, StopRule
from .rng import RandomStream, derive_seed

logger = logging.getLogger(__name__)


@dataclass
class VerifyReport:
    suite: str
    passed: bool
    params: Dict[str, Any]
    evidence: Dict[str, Any] = field(default_factory=dict)
    elapsed_seconds: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "params": {k: list(v) if isinstance(v, tuple) else v for k, v in self.params.items()},
            "evidence": self.evidence,
            "elapsed_seconds": self.elapsed_seconds,
        }


@dataclass(frozen=True)
class Suite:
    name: str
    check: Callable[[Dict[str, Any]], Tuple[bool, Dict[str, Any]]]
    defaults: Dict[str, Any]
    description: str

    def resolve(self, overrides: Dict[str, str]) -> Dict[str, Any]:
        """
        Defaults overridden by ``key=value`` strings, coerced to each default's type.

        :raises ConfigError: for unknown keys or values of the wrong type
        """
        params = dict(self.defaults)
        for key, text in overrides.items():
            key = key.replace("-", "_")
            if key not in self.defaults:
                raise ConfigError(f"Suite {self.name} has no parameter {key!r}; known: {sorted(self.defaults)}")
            params[key] = _coerce(key, text, self.defaults[key])
        return params


def _coerce(key: str, text: Any, default: Any) -> Any:
    if not isinstance(text, str):
        return text
    try:
        if isinstance(default, bool):
            if text.lower() not in ("true", "false", "1", "0", "yes", "no"):
                raise ValueError(text)
            return text.lower() in ("true", "1", "yes")
        if isinstance(default, int):
            return int(float(text)) if "e" in text.lower() else int(text)
        if isinstance(default, float):
            return float(text)
        if isinstance(default, tuple):
            return tuple(int(item) for item in text.split(",") if item.strip())
    except ValueError:
        raise ConfigError(f"Parameter {key} cannot take the value {text!r}") from None
    return text


def _mlotz_sizes(m: int, max_n: int, min_n: int = 1) -> List[int]:
    step_size = m // 2
    return [n for n in range(max(m, min_n), max_n + 1) if n % step_size == 0]


def check_hv_formula(p):
    mismatches = []
    checked = 0
    for n in range(1, p["n"] + 1):
        for a in range(n + 1):
            for b in range(a, n + 1):
                chain = [(i, n - i) for i in range(a, b + 1)]
                formula = chain_hv_formula(n, a, b)
                swept = hypervolume(chain)
                values = {"formula": formula, "hypervolume": swept}
                if p["lattice"]:
                    values["lattice"] = lattice_cell_hypervolume(chain)
                checked += 1
                if len(set(values.values())) != 1 and len(mismatches) < 10:
                    mismatches.append({"n": n, "a": a, "b": b, **values})
    return not mismatches, {"chains_checked": checked, "mismatches": mismatches}


def check_monotone_w(p):
    results = []
    passed = True
    for m in p["m"]:
        benchmark = Benchmark(BenchmarkKind.MLOTZ, p["n"], m)
        state = init(benchmark, MutationOperator(MutationKind.ONE_BIT),
                     make_archiver(p["archiver"], benchmark, benchmark.front_size),
                     benchmark.front_size, derive_seed(p["seed"], m))
        decreases = 0
        left_front = 0
        first_optimal = None
        w = state.potential
        for _ in range(p["steps"]):
            step(state)
            current = state.potential
            if current < w:
                decreases += 1
            if first_optimal is not None and current != benchmark.n:
                left_front += 1
            if first_optimal is None and current == benchmark.n:
                first_optimal = state.iteration
            w = current
        passed = passed and decreases == 0 and left_front == 0
        results.append({"m": m, "n": p["n"], "steps": p["steps"], "decreases": decreases,
                        "left_front_after_reaching_it": left_front, "first_on_front": first_optimal,
                        "final_w": w})
    return passed, {"runs": results}


def _fuzz_benchmarks(n: int, n_m6: int) -> List[Benchmark]:
    benchmarks = [Benchmark(BenchmarkKind.MLOTZ, n, 2), Benchmark(BenchmarkKind.OMM, n)]
    if n >= 4 and n % 2 == 0:
        benchmarks.append(Benchmark(BenchmarkKind.MLOTZ, n, 4))
        benchmarks.append(Benchmark(BenchmarkKind.COCZ, n))
    if n_m6:
        benchmarks.append(Benchmark(BenchmarkKind.MLOTZ, n_m6, 6))
    return benchmarks


def check_incomparable_archive(p):
    combos = []
    violations = 0
    total_steps = 0
    for benchmark in _fuzz_benchmarks(p["n"], p["n_m6"]):
        for archiver in ("aga", "hva", "mga", "none"):
            for mutation in MutationKind:
                for size in sorted({min(p["small_archive"], benchmark.front_size), benchmark.front_size}):
                    seed = derive_seed(p["seed"], len(combos))
                    state = init(benchmark, MutationOperator(mutation), make_archiver(archiver, benchmark, size),
                                 size, seed, debug=True)
                    error = None
                    try:
                        for _ in range(p["steps"]):
                            step(state)
                    except InvariantViolation as e:
                        violations += 1
                        error = str(e)
                    total_steps += state.iteration
                    combos.append({"benchmark": benchmark.describe(), "archiver": archiver,
                                   "mutation": mutation.value, "archive_size": size,
                                   "steps": state.iteration, "violation": error})
    failing = [c for c in combos if c["violation"]]
    passed = violations == 0 and total_steps >= p["min_total_steps"]
    return passed, {"combinations": len(combos), "total_steps": total_steps,
                    "violations": violations, "failing": failing[:10]}


def check_hv_monotone(p):
    benchmark = Benchmark(BenchmarkKind.MLOTZ, p["n"], 2)
    size = max_antichain_size(benchmark)
    decreases = 0
    missed_strict = 0
    strict_steps = 0
    for replicate in range(p["seeds"]):
        state = init(benchmark, MutationOperator(MutationKind.STANDARD_BIT),
                     make_archiver(p["archiver"], benchmark, size), size, derive_seed(p["seed"], replicate))
        hv = hypervolume(state.archive.fitnesses())
        for _ in range(p["steps"]):
            outcome = step(state)
            if not outcome.accepted:
                continue
            new_hv = hypervolume(state.archive.fitnesses())
            if new_hv < hv:
                decreases += 1
            if outcome.event is StepEvent.DOMINATES_ACCEPTED and any(
                    strictly_dominates(outcome.candidate, removed) for removed in outcome.removed):
                strict_steps += 1
                if new_hv <= hv:
                    missed_strict += 1
            hv = new_hv
    return decreases == 0 and missed_strict == 0, {
        "n": p["n"], "archive_size": size, "seeds": p["seeds"], "steps_per_seed": p["steps"],
        "decreases": decreases, "strict_dominance_steps": strict_steps, "missed_strict_increases": missed_strict,
    }


def aga_crowding_violations(archive_fitness: Sequence[Tuple[int, ...]], front: Sequence[Tuple[int, ...]],
                            params: AgaParams) -> List[Dict[str, Any]]:
    """
    Pairs of cells breaking the AGA occupancy property: one cell with ``k``
    archive points while another holds at least ``k`` front points but at
    most ``k - 2`` archive points.
    """
    archived = Counter(aga_cell(v, params) for v in archive_fitness)
    capacity = Counter(aga_cell(v, params) for v in front)
    violations = []
    for crowded, k in archived.items():
        for cell, room in capacity.items():
            if cell != crowded and room >= k and archived.get(cell, 0) <= k - 2:
                violations.append({"crowded_cell": list(crowded), "archived": k,
                                   "sparse_cell": list(cell), "sparse_archived": archived.get(cell, 0),
                                   "sparse_front_points": room})
    return violations


def check_aga_distribution(p):
    benchmark = Benchmark(BenchmarkKind.MLOTZ, p["n"], 2)
    size = p["archive_size"]
    budget = p["budget"] or 10 * 50 * benchmark.n ** 3
    front = sorted(benchmark.pareto_front_fitness())
    runs = []
    passed = True
    for replicate in range(p["seeds"]):
        config = RunConfig(benchmark, size, MutationKind.ONE_BIT, ArchiverKind.from_name("aga"),
                           seed=derive_seed(p["seed"], replicate), budget=budget, stop=StopRule.BUDGET)
        record = run(config)
        params = archiver_for(config).params
        violations = aga_crowding_violations(record.archive_fitness, front, params)
        lo_values = sorted(v[0] for v in record.archive_fitness)
        passed = passed and not violations
        runs.append({"seed": config.seed, "archive_count": len(record.archive_fitness),
                     "violations": violations[:5], "min_lo": lo_values[0], "max_lo": lo_values[-1],
                     "extremes_kept": lo_values[0] == 0 and lo_values[-1] == benchmark.n,
                     "coverage_fraction": record.coverage_fraction})
    return passed, {"n": p["n"], "archive_size": size, "budget": budget, "runs": runs}


def lotz_spread(benchmark: Benchmark, archive_fitness: Sequence[Tuple[int, ...]]) -> Dict[str, Any]:
    """Spread ``d``, holes and adjacent holes of a LOTZ archive."""
    lo_values = sorted(v[0] for v in archive_fitness)
    off_front = sum(1 for v in archive_fitness if not benchmark.is_pareto_optimal(v))
    low, high = lo_values[0], lo_values[-1]
    missing = sorted(set(range(low, high + 1)) - set(lo_values))
    adjacent = sum(1 for a, b in zip(missing, missing[1:]) if b == a + 1)
    return {"spread": high - low, "holes": len(missing), "adjacent_holes": adjacent,
            "off_front": off_front, "min_lo": low, "max_lo": high}


def _hva_settle(benchmark: Benchmark, size: int, seed: int, budget: int, expected_spread: int) -> Dict[str, Any]:
    """
    Steps an HVA run until its full, on-front archive first spans ``expected_spread``
    LO values, then on to the budget, tracking the lowest hypervolume after that point.
    """
    state = init(benchmark, MutationOperator(MutationKind.ONE_BIT), make_archiver("hva", benchmark, size), size, seed)
    settled = None
    lowest_hv = None
    for _ in range(budget):
        if not step(state).accepted:
            continue
        fitnesses = state.archive.fitnesses()
        if settled is None:
            if not (state.archive.is_full or len(fitnesses) == benchmark.front_size):
                continue
            shape = lotz_spread(benchmark, fitnesses)
            if shape["off_front"] == 0 and shape["spread"] >= expected_spread:
                settled = {"iteration": state.iteration, **shape}
                lowest_hv = hypervolume(fitnesses)
        else:
            lowest_hv = min(lowest_hv, hypervolume(fitnesses))
    final = lotz_spread(benchmark, state.archive.fitnesses())
    return {"seed": seed, "settled": settled, "lowest_hv_after_settling": lowest_hv,
            "final": final, "final_hv": hypervolume(state.archive.fitnesses())}


def check_hva_spread(p):
    n, size = p["n"], p["archive_size"]
    benchmark = Benchmark(BenchmarkKind.MLOTZ, n, 2)
    budget = p["budget"] or 50 * n ** 3
    half = (size + 1) // 2
    expected_spread = size + half - 2
    bound = hva_spread_bound(n, size)
    saturated = expected_spread > n
    runs = []
    passed = True
    for replicate in range(p["seeds"]):
        result = _hva_settle(benchmark, size, derive_seed(p["seed"], replicate), budget,
                             n if saturated else expected_spread)
        settled = result["settled"]
        if settled is None:
            ok = False
        elif saturated:
            final = result["final"]
            ok = final["off_front"] == 0 and final["spread"] == n and final["holes"] == max(n + 1 - size, 0) \
                and result["final_hv"] >= bound
        else:
            ok = settled["spread"] == expected_spread and settled["holes"] == half - 1 \
                and settled["adjacent_holes"] == 0 and result["lowest_hv_after_settling"] >= bound
        passed = passed and ok
        runs.append({**result, "passed": ok})
    return passed, {"n": n, "archive_size": size, "expected_spread": expected_spread,
                    "expected_holes": half - 1, "hv_bound": bound, "budget": budget, "runs": runs}


def check_mga_levels(p):
    n = p["n"]
    benchmark = Benchmark(BenchmarkKind.MLOTZ, n, 2)
    budget = p["budget"] or 50 * n ** 3
    runs = []
    passed = True
    for size in p["archive_sizes"]:
        level = mga_expected_level(n, size)
        for replicate in range(p["seeds"]):
            config = RunConfig(benchmark, size, MutationKind.ONE_BIT, ArchiverKind.from_name("mga"),
                               seed=derive_seed(p["seed"], size, replicate), budget=budget, stop=StopRule.BUDGET)
            record = run(config)
            boxes = [mga_box(v, level) for v in record.archive_fitness]
            ok = len(boxes) < 2 or mutually_incomparable(boxes)
            passed = passed and ok
            runs.append({"archive_size": size, "level": level, "seed": config.seed,
                         "archive": [list(v) for v in record.archive_fitness], "incomparable": ok})
    return passed, {"n": n, "budget": budget, "runs": runs}


def check_antichain_bounds(p):
    rows = []
    passed = True
    for n in range(1, p["max_n_m2"] + 1):
        benchmark = Benchmark(BenchmarkKind.MLOTZ, n, 2)
        size = max_antichain_size(benchmark)
        ok = size == n + 1
        passed = passed and ok
        rows.append({"m": 2, "n": n, "max_antichain": size, "expected": n + 1, "passed": ok})
    for n in p["n_m4"]:
        benchmark = Benchmark(BenchmarkKind.MLOTZ, n, 4)
        size = max_antichain_size(benchmark)
        low, high = antichain_bounds(benchmark)
        ok = low <= size <= high
        if n <= p["brute_force_n"]:
            ok = ok and benchmark.attainable_fitness() == brute_force_attainable(benchmark)
        passed = passed and ok
        rows.append({"m": 4, "n": n, "max_antichain": size, "lower": low, "upper": high, "passed": ok})
    return passed, {"results": rows}


def check_front_oracle(p):
    max_n = p["max_n"]
    instances = [Benchmark(BenchmarkKind.MLOTZ, n, 2) for n in range(1, max_n + 1)]
    instances += [Benchmark(BenchmarkKind.MLOTZ, n, 4) for n in _mlotz_sizes(4, max_n)]
    instances += [Benchmark(BenchmarkKind.MLOTZ, n, 6) for n in _mlotz_sizes(6, max_n)]
    instances += [Benchmark(BenchmarkKind.OMM, n) for n in range(1, max_n + 1)]
    instances += [Benchmark(BenchmarkKind.COCZ, n) for n in range(2, max_n + 1, 2)]
    mismatches = []
    for benchmark in instances:
        exact = benchmark.pareto_front_fitness()
        oracle = brute_force_front(benchmark)
        if exact != oracle or len(exact) != benchmark.front_size:
            mismatches.append({"benchmark": benchmark.describe(),
                               "missing": sorted(oracle - exact)[:5], "extra": sorted(exact - oracle)[:5]})
    return not mismatches, {"instances": len(instances), "mismatches": mismatches}


def check_walk_equivalence(p):
    exact_checked = 0
    mismatches = []
    for m in (2, 4):
        for n in _mlotz_sizes(m, p["max_n"], min_n=2):
            benchmark = Benchmark(BenchmarkKind.MLOTZ, n, m)
            cfg = GridWalkConfig.for_benchmark(benchmark)
            for genotype in benchmark.front_genotypes():
                node = front_node(benchmark, benchmark.evaluate(genotype))
                exact_checked += 1
                if front_step_law(benchmark, genotype) != lazy_step_law(cfg, node) and len(mismatches) < 10:
                    mismatches.append({"m": m, "n": n, "genotype": str(genotype)})
    evidence = {"front_genotypes_checked": exact_checked, "law_mismatches": mismatches}
    passed = not mismatches

    if p["reps"] > 0:
        benchmark = Benchmark(BenchmarkKind.MLOTZ, p["n"], 2)
        paes_times, walk_times = [], []
        censored = 0
        for replicate in range(p["reps"]):
            sample = paes_front_cover_time(benchmark, derive_seed(p["seed"], replicate, 0), archiver=p["archiver"])
            if sample.censored:
                censored += 1
                continue
            cfg = GridWalkConfig.for_benchmark(benchmark, sample.start)
            paes_times.append(sample.iterations)
            walk_times.append(cover_time(cfg, RandomStream(derive_seed(p["seed"], replicate, 1))))
        if paes_times:
            relative = abs(mean(paes_times) - mean(walk_times)) / mean(walk_times)
        else:
            relative = float("inf")
        passed = passed and censored == 0 and relative <= p["tolerance"]
        evidence.update({"n": p["n"], "reps": p["reps"], "censored": censored,
                         "mean_paes_cover": mean(paes_times) if paes_times else None,
                         "mean_walk_cover": mean(walk_times) if walk_times else None,
                         "relative_difference": relative})
    return passed, evidence


def _stuck(p, kind: BenchmarkKind, archive_size: int, tracked: Callable[[Tuple[int, ...]], int],
           centre: float) -> Tuple[bool, Dict[str, Any]]:
    n, alpha = p["n"], p["alpha"]
    benchmark = Benchmark(kind, n)
    low, high = centre - alpha * n, centre + alpha * n
    runs = []
    passed = True
    for replicate in range(p["seeds"]):
        state = init(benchmark, MutationOperator(MutationKind.from_name(p["mutation"])),
                     make_archiver(p["archiver"], benchmark, archive_size), archive_size,
                     derive_seed(p["seed"], replicate))
        value = tracked(state.current.fitness)
        lowest = highest = value
        exits = 0 if low <= value <= high else 1
        for _ in range(p["budget"]):
            outcome = step(state)
            if outcome.accepted:
                value = tracked(state.current.fitness)
                lowest, highest = min(lowest, value), max(highest, value)
                if not low <= value <= high:
                    exits += 1
        coverage = sum(1 for f in state.archive.fitnesses() if benchmark.is_pareto_optimal(f)) / benchmark.front_size
        ok = exits == 0 and coverage < p["max_coverage"]
        passed = passed and ok
        runs.append({"seed": state.rng.seed, "lowest": lowest, "highest": highest, "exits": exits,
                     "coverage_fraction": coverage, "passed": ok})
    return passed, {"n": n, "interval": [low, high], "budget": p["budget"], "runs": runs}


def check_stuck_omm(p):
    n = p["n"]
    return _stuck(p, BenchmarkKind.OMM, n + 1, lambda f: f[0], n / 2)


def check_stuck_cocz(p):
    n = p["n"]
    half = n // 2
    # f1 = a + c and f2 = a + half - c with c the ones in the second half
    return _stuck(p, BenchmarkKind.COCZ, half + 1, lambda f: (f[0] - f[1] + half) // 2, n / 4)


def check_cover_time(p):
    rng_seed = p["seed"]
    path_means = []
    for nodes in p["path_nodes"]:
        cfg = GridWalkConfig(1, nodes, WalkMode.SIMPLE)
        times = [cover_time(cfg, RandomStream(derive_seed(rng_seed, 1, nodes, r))) for r in range(p["reps"])]
        path_means.append(float(np.mean(times)))
    slope = float(np.polyfit(np.log(p["path_nodes"]), np.log(path_means), 1)[0])

    grid_ratios = []
    for side in p["grid_sides"]:
        cfg = GridWalkConfig(2, side, WalkMode.SIMPLE)
        times = [cover_time(cfg, RandomStream(derive_seed(rng_seed, 2, side, r))) for r in range(p["reps"])]
        grid_ratios.append(float(np.mean(times)) / (side ** 2 * math.log(side) ** 2))
    spread = max(grid_ratios) / min(grid_ratios)
    passed = abs(slope - 2.0) <= p["slope_tolerance"] and spread < p["max_ratio_spread"]
    return passed, {"path_nodes": list(p["path_nodes"]), "path_means": path_means, "path_slope": slope,
                    "grid_sides": list(p["grid_sides"]), "grid_ratios": grid_ratios, "grid_ratio_spread": spread}


SUITES: Dict[str, Suite] = {suite.name: suite for suite in (
    Suite("hv-formula", check_hv_formula, {"n": 30, "lattice": True},
          "chain hypervolume = closed formula = lattice-cell count for all chains up to n"),
    Suite("monotone-w", check_monotone_w, {"m": (2, 4, 6), "n": 12, "steps": 100000, "seed": 1, "archiver": "aga"},
          "W never decreases and the front is absorbing under one-bit mutation on m-LOTZ"),
    Suite("incomparable-archive", check_incomparable_archive,
          {"n": 8, "n_m6": 6, "steps": 2000, "small_archive": 3, "seed": 2, "min_total_steps": 100000},
          "archive stays pairwise incomparable for every benchmark, archiver and mutation"),
    Suite("hv-monotone", check_hv_monotone, {"n": 16, "steps": 100000, "seeds": 20, "seed": 3, "archiver": "aga"},
          "archive hypervolume never decreases once L reaches the largest antichain"),
    Suite("aga-distribution", check_aga_distribution,
          {"n": 32, "archive_size": 17, "seeds": 3, "budget": 0, "seed": 4},
          "AGA leaves no sparse cell beside a crowded one"),
    Suite("hva-spread", check_hva_spread, {"n": 30, "archive_size": 12, "seeds": 20, "budget": 0, "seed": 5},
          "HVA settles on the predicted spread with isolated holes"),
    Suite("mga-levels", check_mga_levels,
          {"n": 23, "archive_sizes": (2, 3, 4, 5, 6), "seeds": 10, "budget": 0, "seed": 6},
          "MGA archive boxes are pairwise incomparable at the predicted level"),
    Suite("antichain-bounds", check_antichain_bounds,
          {"max_n_m2": 16, "n_m4": (4, 8, 12), "brute_force_n": 12},
          "largest incomparable set: n+1 for m=2, inside the bracket for m=4"),
    Suite("front-oracle", check_front_oracle, {"max_n": 14},
          "analytic fronts equal exhaustive enumeration"),
    Suite("walk-equivalence", check_walk_equivalence,
          {"max_n": 12, "n": 32, "reps": 200, "seed": 7, "archiver": "aga", "tolerance": 0.10},
          "PAES on the front moves like the lazy grid walk"),
    Suite("stuck-omm", check_stuck_omm,
          {"n": 200, "alpha": 0.25, "seeds": 20, "budget": 1000000, "seed": 8, "archiver": "aga",
           "mutation": "one-bit", "max_coverage": 0.55},
          "OMM: the ones count stays near n/2 and the front is not covered"),
    Suite("stuck-cocz", check_stuck_cocz,
          {"n": 200, "alpha": 0.25, "seeds": 20, "budget": 1000000, "seed": 9, "archiver": "aga",
           "mutation": "one-bit", "max_coverage": 0.55},
          "COCZ: the second-half ones count stays near n/4 and the front is not covered"),
    Suite("cover-time", check_cover_time,
          {"path_nodes": (16, 32, 64, 128), "grid_sides": (8, 16, 32), "reps": 200, "seed": 10,
           "slope_tolerance": 0.3, "max_ratio_spread": 2.5},
          "simple-walk cover times: quadratic on the path, N^2 log^2 N on the square grid"),
)}


def verify(suite_name: str, params: Optional[Dict[str, str]] = None) -> VerifyReport:
    """
    Run one suite.

    :param suite_name: Name from :data:`SUITES`
    :param params: ``key=value`` overrides of the suite defaults
    :raises ConfigError: for an unknown suite or parameter
    """
    suite = SUITES.get(suite_name)
    if suite is None:
        raise ConfigError(f"Unknown suite {suite_name!r}; expected one of {', '.join(SUITES)}")
    resolved = suite.resolve(params or {})
    logger.info(f"Verifying {suite.name}: {suite.description}")
    started = time.perf_counter()
    passed, evidence = suite.check(resolved)
    report = VerifyReport(suite.name, bool(passed), resolved, evidence, time.perf_counter() - started)
    logger.info(f"{suite.name}: {'pass' if report.passed else 'FAIL'} in {report.elapsed_seconds:.1f}s")
    return report
