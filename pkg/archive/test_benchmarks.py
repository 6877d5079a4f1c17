"""
Tests for the benchmarks and the mutation operators.
"""
import statistics
import unittest
import logging
from collections import Counter
from fractions import Fraction

logging.basicConfig(level=logging.WARNING)

from upaes import *
from upaes.oracle import brute_force_attainable


class TestBenchmarks(unittest.TestCase):
    """Fitness evaluation and Pareto fronts."""

    def test_evaluate_examples(self):
        lotz = Benchmark(BenchmarkKind.MLOTZ, 13)
        self.assertEqual(lotz.evaluate(Bitstring.from_string("1110101100000")), (3, 5))
        four = Benchmark(BenchmarkKind.MLOTZ, 8, 4)
        self.assertEqual(four.evaluate(Bitstring.from_string("11010010")), (2, 0, 0, 1))
        self.assertEqual(Benchmark(BenchmarkKind.OMM, 4).evaluate(Bitstring.from_string("0011")), (2, 2))
        self.assertEqual(Benchmark(BenchmarkKind.COCZ, 4).evaluate(Bitstring.from_string("1100")), (2, 4))

    def test_packed_evaluation_matches_positions(self):
        rng = RandomStream(3)
        for benchmark in (Benchmark(BenchmarkKind.MLOTZ, 12, 2), Benchmark(BenchmarkKind.MLOTZ, 12, 6),
                          Benchmark(BenchmarkKind.OMM, 12), Benchmark(BenchmarkKind.COCZ, 12)):
            for _ in range(200):
                x = Bitstring(rng.getrandbits(12), 12)
                self.assertEqual(benchmark.evaluate(x), benchmark.evaluate_by_positions(x))
                self.assertTrue(all(0 <= v <= benchmark.f_max for v in benchmark.evaluate_by_positions(x)))

    def test_length_mismatch(self):
        with self.assertRaises(DimensionError):
            Benchmark(BenchmarkKind.MLOTZ, 4).evaluate(Bitstring.zeros(5))

    def test_fronts(self):
        self.assertEqual(pareto_front_fitness(Benchmark(BenchmarkKind.MLOTZ, 3)),
                         {(0, 3), (1, 2), (2, 1), (3, 0)})
        four = Benchmark(BenchmarkKind.MLOTZ, 4, 4)
        self.assertEqual(len(four.pareto_front_fitness()), 9)
        self.assertEqual(four.front_size, 9)
        self.assertEqual(Benchmark(BenchmarkKind.OMM, 2).pareto_front_fitness(), {(0, 2), (1, 1), (2, 0)})
        self.assertEqual(Benchmark(BenchmarkKind.COCZ, 4).pareto_front_fitness(), {(2, 4), (3, 3), (4, 2)})

    def test_is_pareto_optimal(self):
        lotz = Benchmark(BenchmarkKind.MLOTZ, 3)
        self.assertTrue(is_pareto_optimal(lotz, (2, 1)))
        self.assertFalse(is_pareto_optimal(lotz, (1, 1)))
        for n in (1, 5, 9):
            self.assertTrue(Benchmark(BenchmarkKind.OMM, n).is_pareto_optimal((n, 0)))
        cocz = Benchmark(BenchmarkKind.COCZ, 6)
        self.assertEqual({v for v in cocz.attainable_fitness() if cocz.is_pareto_optimal(v)},
                         cocz.pareto_front_fitness())

    def test_front_genotypes_evaluate_onto_front(self):
        for benchmark in (Benchmark(BenchmarkKind.MLOTZ, 6, 4), Benchmark(BenchmarkKind.OMM, 5),
                          Benchmark(BenchmarkKind.COCZ, 6)):
            values = {benchmark.evaluate(x) for x in benchmark.front_genotypes()}
            self.assertEqual(values, benchmark.pareto_front_fitness())

    def test_attainable_fitness_matches_enumeration(self):
        for benchmark in (Benchmark(BenchmarkKind.MLOTZ, 7), Benchmark(BenchmarkKind.MLOTZ, 8, 4),
                          Benchmark(BenchmarkKind.OMM, 6), Benchmark(BenchmarkKind.COCZ, 8)):
            self.assertEqual(benchmark.attainable_fitness(), brute_force_attainable(benchmark))

    def test_potential_is_n_on_front(self):
        benchmark = Benchmark(BenchmarkKind.MLOTZ, 8, 4)
        for x in benchmark.front_genotypes():
            self.assertEqual(benchmark.potential(x), 8)
        with self.assertRaises(ConfigError):
            Benchmark(BenchmarkKind.OMM, 4).potential(Bitstring.zeros(4))

    def test_invalid_instances(self):
        for kind, n, m in ((BenchmarkKind.MLOTZ, 8, 3), (BenchmarkKind.MLOTZ, 2, 4), (BenchmarkKind.MLOTZ, 7, 4),
                           (BenchmarkKind.COCZ, 5, 2), (BenchmarkKind.OMM, 4, 4), (BenchmarkKind.OMM, 0, 2)):
            with self.assertRaises(ConfigError):
                Benchmark(kind, n, m)

    def test_from_name(self):
        self.assertEqual(Benchmark.from_name("LOTZ", 5), Benchmark(BenchmarkKind.MLOTZ, 5, 2))
        self.assertEqual(Benchmark.from_name("mlotz", 8, 4).f_max, 4)
        with self.assertRaises(ConfigError):
            Benchmark.from_name("zdt1", 5)


class TestMutation(unittest.TestCase):
    """One-bit and standard-bit mutation."""

    def test_one_bit_is_uniform(self):
        operator = MutationOperator(MutationKind.ONE_BIT)
        rng = RandomStream(11)
        x = Bitstring.from_string("000")
        counts = Counter(str(mutate(operator, x, rng)) for _ in range(3000))
        self.assertEqual(set(counts), {"100", "010", "001"})
        for value in counts.values():
            self.assertGreater(value / 3000, 0.28)
            self.assertLess(value / 3000, 0.39)
        self.assertEqual(str(x), "000")

    def test_standard_bit_flip_count(self):
        operator = MutationOperator(MutationKind.STANDARD_BIT)
        rng = RandomStream(12)
        x = Bitstring.zeros(40)
        flips = [mutate(operator, x, rng).count_ones() for _ in range(5000)]
        self.assertAlmostEqual(sum(flips) / len(flips), 1.0, delta=0.1)
        self.assertGreater(flips.count(0) / len(flips), 0.3)
        self.assertTrue(all(f <= 40 for f in flips))

    def test_one_bit_positions_within_five_sigma(self):
        operator = MutationOperator(MutationKind.ONE_BIT)
        rng = RandomStream(13)
        n, trials = 10, 100000
        x = Bitstring.from_string("0110100110")
        counts = Counter()
        for _ in range(trials):
            y = operator.mutate(x, rng)
            self.assertEqual(x.hamming(y), 1)
            counts[(x.bits ^ y.bits).bit_length()] += 1
        sigma = (trials * (1 / n) * (1 - 1 / n)) ** 0.5
        self.assertEqual(set(counts), set(range(1, n + 1)))
        for value in counts.values():
            self.assertLess(abs(value - trials / n), 5 * sigma)

    def test_standard_bit_mean_within_three_standard_errors(self):
        operator = MutationOperator(MutationKind.STANDARD_BIT)
        rng = RandomStream(14)
        x = Bitstring.from_string("1011001110001011")
        flips = [x.hamming(operator.mutate(x, rng)) for _ in range(100000)]
        standard_error = statistics.stdev(flips) / len(flips) ** 0.5
        self.assertLess(abs(statistics.mean(flips) - 1.0), 3 * standard_error)

    def test_standard_bit_keeps_input_with_exact_probability(self):
        n = 4
        unchanged = Fraction(n - 1, n) ** n
        self.assertEqual(unchanged, Fraction(81, 256))
        operator = MutationOperator(MutationKind.STANDARD_BIT)
        rng = RandomStream(15)
        x = Bitstring.from_string("0101")
        trials = 100000
        kept = sum(1 for _ in range(trials) if operator.mutate(x, rng) == x)
        p = float(unchanged)
        self.assertLess(abs(kept - trials * p), 5 * (trials * p * (1 - p)) ** 0.5)

    def test_from_name(self):
        self.assertIs(MutationKind.from_name("Standard-Bit"), MutationKind.STANDARD_BIT)
        with self.assertRaises(ConfigError):
            MutationKind.from_name("two-bit")


if __name__ == '__main__':
    unittest.main()
