"""
Tests for the PAES-25 loop and single runs.
"""
import os
import shutil
import tempfile
import unittest
import logging

logging.basicConfig(level=logging.WARNING)

from upaes import *
from upaes.paes import _branch


def state_with(benchmark, genotypes, current, capacity, archiver="none"):
    archive = Archive(capacity)
    entries = {}
    for text in genotypes:
        x = Bitstring.from_string(text)
        entries[text] = ArchiveEntry(x, benchmark.evaluate(x))
        archive.add(entries[text])
    return PaesState(benchmark, MutationOperator(), make_archiver(archiver, benchmark, capacity),
                     archive, entries[current], RandomStream(0))


def candidate(benchmark, text):
    x = Bitstring.from_string(text)
    return ArchiveEntry(x, benchmark.evaluate(x))


class TestBranches(unittest.TestCase):
    """The three acceptance branches."""

    def setUp(self):
        self.lotz = Benchmark(BenchmarkKind.MLOTZ, 3)

    def test_dominating_candidate_replaces_parent(self):
        state = state_with(self.lotz, ["110"], "110", 4)
        outcome = _branch(state, candidate(self.lotz, "111"))
        self.assertIs(outcome.event, StepEvent.DOMINATES_ACCEPTED)
        self.assertEqual(outcome.removed, ((2, 0),))
        self.assertEqual(state.archive.fitnesses(), [(3, 0)])
        self.assertEqual(str(state.current.genotype), "111")

    def test_candidate_removes_every_dominated_member(self):
        lotz = Benchmark(BenchmarkKind.MLOTZ, 5)
        state = state_with(lotz, ["11001", "10010"], "11001", 4)
        outcome = _branch(state, candidate(lotz, "11010"))
        self.assertTrue(outcome.accepted)
        self.assertEqual(sorted(outcome.removed), [(1, 1), (2, 0)])
        self.assertEqual(state.archive.fitnesses(), [(2, 1)])

    def test_dominated_candidate_is_rejected(self):
        state = state_with(self.lotz, ["110", "000"], "110", 4)
        before = (state.archive.fitnesses(), state.current)
        outcome = _branch(state, candidate(self.lotz, "010"))
        self.assertIs(outcome.event, StepEvent.DOMINATED_REJECTED)
        self.assertFalse(outcome.accepted)
        self.assertEqual((state.archive.fitnesses(), state.current), before)

    def test_equal_fitness_replaces_member(self):
        omm = Benchmark(BenchmarkKind.OMM, 3)
        state = state_with(omm, ["100", "110"], "110", 4)
        outcome = _branch(state, candidate(omm, "001"))
        self.assertIs(outcome.event, StepEvent.DOMINATES_ACCEPTED)
        self.assertEqual(outcome.removed, ((1, 2),))
        self.assertEqual(str(state.archive[state.archive.position_of((1, 2))].genotype), "001")
        self.assertEqual(str(state.current.genotype), "001")

    def test_incomparable_candidate_fills_free_slot(self):
        state = state_with(self.lotz, ["100"], "100", 2)
        outcome = _branch(state, candidate(self.lotz, "000"))
        self.assertIs(outcome.event, StepEvent.INCOMPARABLE_ADDED)
        self.assertEqual(sorted(state.archive.fitnesses()), [(0, 3), (1, 2)])

    def test_full_archive_asks_the_archiver(self):
        state = state_with(self.lotz, ["100", "000"], "100", 2, archiver="none")
        outcome = _branch(state, candidate(self.lotz, "111"))
        self.assertIs(outcome.event, StepEvent.ARCHIVER_REJECTED)
        self.assertEqual(state.archiver.rejected, 1)
        self.assertEqual(str(state.current.genotype), "100")

    def test_archiver_acceptance_swaps_a_member(self):
        state = state_with(self.lotz, ["100", "000"], "100", 2, archiver="hva")
        outcome = _branch(state, candidate(self.lotz, "111"))
        self.assertIs(outcome.event, StepEvent.ARCHIVER_ACCEPTED)
        self.assertEqual(len(state.archive), 2)
        self.assertIn((3, 0), state.archive.fitnesses())
        self.assertEqual(str(state.current.genotype), "111")


class TestRun(unittest.TestCase):
    """Whole runs, stop rules and traces."""

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.temp_dir)

    def test_init_is_deterministic(self):
        benchmark = Benchmark(BenchmarkKind.MLOTZ, 16)
        a = init(benchmark, MutationOperator(), make_archiver("aga", benchmark, 17), 17, seed=99)
        b = init(benchmark, MutationOperator(), make_archiver("aga", benchmark, 17), 17, seed=99)
        self.assertEqual(a.current, b.current)
        self.assertEqual(a.archive.fitnesses(), [a.current.fitness])
        with self.assertRaises(ConfigError):
            init(benchmark, MutationOperator(), NullArchiver(), 0, seed=1)

    def test_lotz_run_covers_front(self):
        benchmark = Benchmark(BenchmarkKind.MLOTZ, 8)
        config = RunConfig(benchmark, benchmark.front_size, seed=5)
        record = run(config)
        self.assertFalse(record.censored)
        self.assertEqual(record.iterations, record.iterations_to_full_front)
        self.assertLessEqual(record.iterations_to_first_pareto, record.iterations_to_full_front)
        self.assertEqual(record.coverage_fraction, 1.0)
        self.assertEqual(record.hv_fraction, 1.0)
        self.assertEqual(set(record.archive_fitness), benchmark.pareto_front_fitness())

    def test_same_seed_same_record(self):
        config = RunConfig(Benchmark(BenchmarkKind.MLOTZ, 8, 4), 25, archiver=ArchiverKind.MGA, seed=12)
        first, second = run(config).to_row(), run(config).to_row()
        first.pop("wall_time")
        second.pop("wall_time")
        self.assertEqual(first, second)

    def test_budget_rules(self):
        with self.assertRaises(ConfigError):
            RunConfig(Benchmark(BenchmarkKind.MLOTZ, 8), 9, budget=0)
        benchmark = Benchmark(BenchmarkKind.OMM, 20)
        record = run(RunConfig(benchmark, 21, budget=500, stop=StopRule.BUDGET, seed=3))
        self.assertEqual(record.iterations, 500)
        self.assertTrue(record.censored)
        self.assertIsNone(record.iterations_to_full_front)
        self.assertEqual(RunConfig(benchmark, 21).resolved_budget, STUCK_BUDGET)

    def test_coverage_stop(self):
        benchmark = Benchmark(BenchmarkKind.MLOTZ, 10)
        record = run(RunConfig(benchmark, 11, seed=4, stop=StopRule.COVERAGE, coverage_threshold=0.5))
        self.assertFalse(record.censored)
        self.assertGreaterEqual(record.coverage_fraction, 0.5)
        self.assertLess(record.coverage_fraction, 1.0 + 1e-12)

    def test_debug_run_checks_invariants(self):
        for benchmark in (Benchmark(BenchmarkKind.MLOTZ, 8, 4), Benchmark(BenchmarkKind.COCZ, 8)):
            for archiver in ArchiverKind:
                config = RunConfig(benchmark, 3, archiver=archiver, seed=8, budget=2000,
                                   stop=StopRule.BUDGET, debug=True)
                record = run(config)
                self.assertEqual(record.iterations, 2000)
                self.assertTrue(mutually_incomparable(record.archive_fitness))
                self.assertLessEqual(len(record.archive_fitness), 3)

    def test_debug_run_rejects_a_one_bit_step_that_flips_nothing(self):
        class Stuck(MutationOperator):
            def flip_mask(self, n, rng):
                return 0

        benchmark = Benchmark(BenchmarkKind.MLOTZ, 6)
        state = init(benchmark, Stuck(MutationKind.ONE_BIT), make_archiver("aga", benchmark, 7), 7, seed=1, debug=True)
        with self.assertRaises(InvariantViolation):
            step(state)
        quiet = init(benchmark, Stuck(MutationKind.ONE_BIT), make_archiver("aga", benchmark, 7), 7, seed=1)
        step(quiet)
        self.assertEqual(quiet.iteration, 1)

    def test_standard_bit_run(self):
        benchmark = Benchmark(BenchmarkKind.MLOTZ, 6)
        record = run(RunConfig(benchmark, 7, mutation=MutationKind.STANDARD_BIT, seed=2))
        self.assertFalse(record.censored)
        self.assertEqual(record.to_row()["mutation"], "standard-bit")

    def test_trace(self):
        path = os.path.join(self.temp_dir, "trace", "run.jsonl")
        benchmark = Benchmark(BenchmarkKind.MLOTZ, 6)
        record = run(RunConfig(benchmark, 7, seed=1, trace_path=path))
        lines = read_trace(path)
        self.assertEqual(lines[0]["event"], "init")
        self.assertEqual(lines[0]["t"], 0)
        self.assertEqual(lines[-1]["coverage"], 1.0)
        self.assertEqual(lines[-1]["t"], record.iterations)
        self.assertTrue(all(line["event"] != "dominated-rejected" for line in lines))
        self.assertEqual([line["w"] for line in lines], sorted(line["w"] for line in lines))

        every = os.path.join(self.temp_dir, "every.jsonl")
        run(RunConfig(benchmark, 7, seed=1, trace_path=every, trace_every="iteration", budget=50, stop=StopRule.BUDGET))
        self.assertEqual(len(read_trace(every)), 51)

    def test_potential_never_decreases(self):
        benchmark = Benchmark(BenchmarkKind.MLOTZ, 12, 6)
        state = init(benchmark, MutationOperator(), make_archiver("aga", benchmark, 10), 10, seed=6, debug=True)
        w = state.potential
        for _ in range(3000):
            step(state)
            self.assertGreaterEqual(state.potential, w)
            w = state.potential


if __name__ == '__main__':
    unittest.main()
