"""
Tests for bitstrings, dominance and the random streams.
"""
import unittest
import logging
from collections import Counter

logging.basicConfig(level=logging.WARNING)

from upaes import *


class TestBitstring(unittest.TestCase):
    """Packed genotype representation."""

    def test_text_round_trip_and_positions(self):
        x = Bitstring.from_string("1110101100000")
        self.assertEqual(str(x), "1110101100000")
        self.assertEqual(len(x), 13)
        self.assertEqual(x[1], 1)
        self.assertEqual(x[4], 0)
        self.assertEqual(x[13], 0)
        with self.assertRaises(IndexError):
            x[0]

    def test_leading_ones_and_trailing_zeros(self):
        x = Bitstring.from_string("1110101100000")
        self.assertEqual(leading_ones(x), 3)
        self.assertEqual(trailing_zeros(x), 5)
        for n in (1, 5, 64, 100):
            self.assertEqual(leading_ones(Bitstring.zeros(n)), 0)
            self.assertEqual(trailing_zeros(Bitstring.zeros(n)), n)
            self.assertEqual(leading_ones(Bitstring.ones(n)), n)
            self.assertEqual(trailing_zeros(Bitstring.ones(n)), 0)

    def test_leading_ones_plus_trailing_zeros_at_most_n(self):
        for n in range(1, 11):
            for bits in range(1 << n):
                x = Bitstring(bits, n)
                total = leading_ones(x) + trailing_zeros(x)
                self.assertLessEqual(total, n)
                on_front = str(x) in {"1" * i + "0" * (n - i) for i in range(n + 1)}
                self.assertEqual(total == n, on_front, str(x))

    def test_flip_does_not_change_original(self):
        x = Bitstring.from_string("110")
        y = x.flip([3])
        self.assertEqual(str(x), "110")
        self.assertEqual(str(y), "111")
        self.assertEqual(x.hamming(y), 1)
        self.assertEqual(y.count_ones(), 3)

    def test_invalid_bitstrings(self):
        with self.assertRaises(DimensionError):
            Bitstring.from_string("")
        with self.assertRaises(RangeError):
            Bitstring.from_string("10a")
        with self.assertRaises(RangeError):
            Bitstring(8, 3)
        with self.assertRaises(DimensionError):
            Bitstring.zeros(3).hamming(Bitstring.zeros(4))
        self.assertEqual(str(Bitstring.from_bits([1, 0, 1])), "101")


class TestDominance(unittest.TestCase):
    """The four-way comparison under maximisation."""

    def test_compare_examples(self):
        self.assertIs(compare((3, 2), (3, 2)), Dominance.EQUAL)
        self.assertIs(compare((4, 2), (3, 2)), Dominance.STRICTLY_DOMINATES)
        self.assertIs(compare((3, 2), (4, 2)), Dominance.STRICTLY_DOMINATED_BY)
        self.assertIs(compare((4, 1), (3, 2)), Dominance.INCOMPARABLE)

    def test_relations_are_consistent(self):
        vectors = [(a, b, c) for a in range(3) for b in range(3) for c in range(2)]
        for u in vectors:
            for v in vectors:
                relation = compare(u, v)
                self.assertIs(compare(v, u), relation.reverse())
                self.assertEqual(relation.weakly_dominates, weakly_dominates(u, v))
                self.assertEqual(relation is Dominance.STRICTLY_DOMINATES, strictly_dominates(u, v))

    def test_weak_dominance_is_transitive(self):
        rng = RandomStream(5)
        checked = 0
        for _ in range(20000):
            u, v, w = ([rng.randbelow(4) for _ in range(3)] for _ in range(3))
            if weakly_dominates(u, v) and weakly_dominates(v, w):
                checked += 1
                self.assertTrue(weakly_dominates(u, w), (u, v, w))
                if strictly_dominates(u, v) or strictly_dominates(v, w):
                    self.assertTrue(strictly_dominates(u, w), (u, v, w))
        self.assertGreater(checked, 100)

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionError):
            compare((1, 2), (1, 2, 3))

    def test_mutually_incomparable(self):
        self.assertTrue(mutually_incomparable([(0, 3), (1, 2), (3, 0)]))
        self.assertFalse(mutually_incomparable([(0, 3), (1, 2), (1, 2)]))
        self.assertFalse(mutually_incomparable([(0, 3), (1, 1), (1, 2)]))

    def test_fitness_vector_validation(self):
        self.assertEqual(fitness_vector([1, 2]), (1, 2))
        with self.assertRaises(DimensionError):
            fitness_vector([1])
        with self.assertRaises(RangeError):
            fitness_vector([1, -1])
        with self.assertRaises(RangeError):
            fitness_vector([1, 5], f_max=4)


class TestRandomStream(unittest.TestCase):
    """Seeded streams and derived seeds."""

    def test_same_seed_same_draws(self):
        a, b = RandomStream(42, buffer_size=7), RandomStream(42, buffer_size=7)
        self.assertEqual([a.randbelow(10) for _ in range(50)], [b.randbelow(10) for _ in range(50)])
        self.assertEqual(a.getrandbits(100), b.getrandbits(100))
        self.assertEqual([a.binomial(20, 0.05) for _ in range(30)], [b.binomial(20, 0.05) for _ in range(30)])

    def test_draw_ranges(self):
        rng = RandomStream(1)
        for _ in range(1000):
            self.assertIn(rng.randbelow(3), (0, 1, 2))
            self.assertLess(rng.getrandbits(5), 32)
        values = rng.sample_distinct(10, 4)
        self.assertEqual(len(set(values)), 4)
        self.assertTrue(all(0 <= v < 10 for v in values))
        self.assertEqual(sorted(rng.sample_distinct(6, 6)), list(range(6)))
        with self.assertRaises(ValueError):
            rng.choice([])

    def test_randbelow_is_exact(self):
        rng = RandomStream(9, buffer_size=64)
        self.assertEqual({rng.randbelow(1) for _ in range(20)}, {0})
        big = 3 * 2 ** 62
        draws = [rng.randbelow(big) for _ in range(200)]
        self.assertTrue(all(0 <= v < big for v in draws))
        # float scaling would leave the low bits of such draws at zero
        self.assertTrue(any(v % 2 for v in draws))
        self.assertTrue(all(0 <= rng.randbelow(2 ** 64) < 2 ** 64 for _ in range(50)))
        for k in (0, -3, 2 ** 64 + 1):
            with self.assertRaises(ValueError):
                rng.randbelow(k)

    def test_randbelow_counts_within_five_sigma(self):
        rng = RandomStream(10)
        draws = 60000
        counts = Counter(rng.randbelow(6) for _ in range(draws))
        sigma = (draws * (1 / 6) * (5 / 6)) ** 0.5
        self.assertEqual(set(counts), set(range(6)))
        for value in counts.values():
            self.assertLess(abs(value - draws / 6), 5 * sigma)

    def test_derive_seed(self):
        self.assertEqual(derive_seed(7, 32, 0), derive_seed(7, 32, 0))
        seeds = {derive_seed(7, n, i) for n in (16, 32) for i in range(5)}
        self.assertEqual(len(seeds), 10)
        self.assertTrue(all(0 <= s < 1 << 64 for s in seeds))


if __name__ == '__main__':
    unittest.main()
