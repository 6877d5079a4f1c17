#!/usr/bin/env python3
"""
Demonstration of the upaes package.
"""

import os
import tempfile
import logging

# Configure logging
logging.basicConfig(level=logging.INFO, format='%(levelname)s: %(message)s')

from upaes import (
    Benchmark, BenchmarkKind, RunConfig, ArchiverKind, StopRule, SweepMonitor,
    run, sweep_from_text, sweep, fit_scaling, verify, hypervolume, max_antichain_size,
    get_module_info
)
from dataclasses import replace

def main():
    """Demonstrate single runs, a small sweep with a fit, and two checks."""
    print("=== upaes Demonstration ===")
    print()

    info = get_module_info()
    print(f"Module: {info['name']} v{info['version']}")
    print(f"Description: {info['description']}")
    print()

    temp_dir = tempfile.mkdtemp()
    print(f"Demo running in: {temp_dir}")

    # === 1. Single runs ===
    print("=== 1. Single runs on LOTZ ===")
    lotz = Benchmark(BenchmarkKind.MLOTZ, 16)
    for archiver in (ArchiverKind.AGA, ArchiverKind.HVA, ArchiverKind.MGA):
        config = RunConfig(lotz, archive_size=6, archiver=archiver, seed=1, stop=StopRule.BUDGET, budget=50 * 16 ** 3)
        record = run(config)
        lo_values = sorted(v[0] for v in record.archive_fitness)
        print(f"{archiver.value}: archive LO values {lo_values}, hv fraction {record.hv_fraction:.3f}")
    full = run(RunConfig(lotz, archive_size=lotz.front_size, seed=2))
    print(f"Full front of n=16 after {full.iterations_to_full_front} iterations "
          f"(first Pareto-optimal solution at {full.iterations_to_first_pareto})")
    print()

    # === 2. Sweep and fit ===
    print("=== 2. Sweep and scaling fit ===")
    output = os.path.join(temp_dir, 'lotz.csv')
    spec = sweep_from_text("benchmark = lotz\nn = 8, 12, 16, 24\nreplicates = 5\nbase_seed = 7\n")
    spec = replace(spec, output=output)
    monitor = SweepMonitor(total_runs=len(spec.configs()))
    sweep(spec, monitor)
    print(f"Sweep status: {monitor.health_check()['overall_status']}")
    fit = fit_scaling(output, "n3")
    print(f"Slope of log T against log n: {fit.slope:.2f}")
    print(fit.ratios.to_string(index=False))
    print()

    # === 3. Checks ===
    print("=== 3. Checks ===")
    print(f"Largest incomparable set of LOTZ n=10: {max_antichain_size(Benchmark(BenchmarkKind.MLOTZ, 10))}")
    print(f"Hypervolume of the LOTZ n=10 front: {hypervolume(Benchmark(BenchmarkKind.MLOTZ, 10).pareto_front_fitness())}")
    report = verify("hv-formula", {"n": "12"})
    print(f"hv-formula: {'pass' if report.passed else 'FAIL'} ({report.evidence['chains_checked']} chains)")
    report = verify("front-oracle", {"max_n": "10"})
    print(f"front-oracle: {'pass' if report.passed else 'FAIL'} ({report.evidence['instances']} instances)")
    print()
    print("=== Demonstration complete ===")

if __name__ == "__main__":
    main()
