"""
Tests for the enumeration, antichain and random-walk oracles.
"""
import unittest
import logging
from fractions import Fraction

logging.basicConfig(level=logging.WARNING)

from upaes import *


class TestEnumeration(unittest.TestCase):
    """Exhaustive fronts."""

    def test_fronts(self):
        self.assertEqual(brute_force_front(Benchmark(BenchmarkKind.MLOTZ, 3)), {(0, 3), (1, 2), (2, 1), (3, 0)})
        self.assertEqual(brute_force_front(Benchmark(BenchmarkKind.OMM, 3)), {(0, 3), (1, 2), (2, 1), (3, 0)})
        self.assertEqual(brute_force_front(Benchmark(BenchmarkKind.COCZ, 4)), {(2, 4), (3, 3), (4, 2)})

    def test_analytic_fronts_agree(self):
        for benchmark in (Benchmark(BenchmarkKind.MLOTZ, 10), Benchmark(BenchmarkKind.MLOTZ, 10, 4),
                          Benchmark(BenchmarkKind.MLOTZ, 9, 6), Benchmark(BenchmarkKind.COCZ, 10)):
            self.assertEqual(brute_force_front(benchmark), benchmark.pareto_front_fitness())

    def test_refuses_large_instances(self):
        with self.assertRaises(InstanceTooLargeError):
            brute_force_front(Benchmark(BenchmarkKind.OMM, BRUTE_FORCE_MAX_N + 1))


class TestAntichain(unittest.TestCase):
    """Largest sets of mutually incomparable fitness vectors."""

    def test_two_objectives(self):
        for n in range(1, 17):
            self.assertEqual(max_antichain_size(Benchmark(BenchmarkKind.MLOTZ, n)), n + 1)
        for n in (1, 6, 11):
            self.assertEqual(max_antichain_size(Benchmark(BenchmarkKind.OMM, n)), n + 1)

    def test_four_objectives_within_bounds(self):
        for n in (4, 8):
            benchmark = Benchmark(BenchmarkKind.MLOTZ, n, 4)
            low, high = antichain_bounds(benchmark)
            size = max_antichain_size(benchmark)
            self.assertGreaterEqual(size, low)
            self.assertLessEqual(size, high)
            self.assertGreaterEqual(size, benchmark.front_size)

    def test_refuses_large_instances(self):
        with self.assertRaises(InstanceTooLargeError):
            max_antichain_size(Benchmark(BenchmarkKind.MLOTZ, 30, 4))
        with self.assertRaises(ConfigError):
            antichain_bounds(Benchmark(BenchmarkKind.OMM, 4))


class TestLatticeHypervolume(unittest.TestCase):

    def test_small_sets(self):
        self.assertEqual(lattice_cell_hypervolume([(0, 3), (1, 2), (2, 1)]), 9)
        self.assertEqual(lattice_cell_hypervolume([(1, 1, 1)]), 8)
        self.assertEqual(lattice_cell_hypervolume([]), 0)


class TestGridWalk(unittest.TestCase):
    """Cover times and one-step laws."""

    def test_two_node_path(self):
        cfg = GridWalkConfig(1, 2, WalkMode.SIMPLE)
        for seed in range(5):
            self.assertEqual(cover_time(cfg, RandomStream(seed)), 1)

    def test_cover_time_visits_every_node(self):
        rng = RandomStream(4)
        cfg = GridWalkConfig(2, 5, WalkMode.LAZY, n=8, start=(2, 2))
        self.assertGreaterEqual(cover_time(cfg, rng), 24)
        self.assertEqual(len(grid_nodes(cfg)), cfg.node_count)

    def test_invalid_configs(self):
        with self.assertRaises(ConfigError):
            GridWalkConfig(2, 5, WalkMode.LAZY, n=3)
        with self.assertRaises(ConfigError):
            GridWalkConfig(2, 5, start=(5, 0))
        with self.assertRaises(ConfigError):
            WalkMode.from_name("levy")
        with self.assertRaises(RangeError):
            cover_time(GridWalkConfig(1, 1), RandomStream(0))

    def test_lazy_law(self):
        cfg = GridWalkConfig(1, 4, WalkMode.LAZY, n=5)
        self.assertEqual(lazy_step_law(cfg, (0,)), {(1,): Fraction(1, 5), (0,): Fraction(4, 5)})
        law = lazy_step_law(cfg, (2,))
        self.assertEqual(law, {(1,): Fraction(1, 5), (3,): Fraction(1, 5), (2,): Fraction(3, 5)})
        self.assertEqual(sum(law.values()), 1)

    def test_front_walk_matches_lazy_walk(self):
        for benchmark in (Benchmark(BenchmarkKind.MLOTZ, 6), Benchmark(BenchmarkKind.MLOTZ, 8, 4)):
            cfg = GridWalkConfig.for_benchmark(benchmark)
            self.assertEqual(cfg.node_count, benchmark.front_size)
            self.assertEqual(cfg.step_probability, Fraction(1, benchmark.n))
            for genotype in benchmark.front_genotypes():
                node = front_node(benchmark, benchmark.evaluate(genotype))
                self.assertEqual(front_step_law(benchmark, genotype), lazy_step_law(cfg, node))

    def test_front_law_needs_front_genotype(self):
        benchmark = Benchmark(BenchmarkKind.MLOTZ, 4)
        with self.assertRaises(RangeError):
            front_step_law(benchmark, Bitstring.from_string("0101"))

    def test_paes_front_cover_time(self):
        benchmark = Benchmark(BenchmarkKind.MLOTZ, 8)
        sample = paes_front_cover_time(benchmark, seed=3)
        self.assertFalse(sample.censored)
        self.assertEqual(len(sample.start), 1)
        self.assertGreater(sample.iterations, 0)
        censored = paes_front_cover_time(benchmark, seed=3, budget=5)
        self.assertTrue(censored.censored)
        with self.assertRaises(ConfigError):
            paes_front_cover_time(Benchmark(BenchmarkKind.OMM, 8), seed=1)


if __name__ == '__main__':
    unittest.main()
