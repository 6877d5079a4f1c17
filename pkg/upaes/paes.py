"""
The PAES-25 loop.

Each iteration mutates the current solution ``s`` into a candidate ``c`` and
then takes exactly one of three branches:

1. ``c`` weakly dominates some member: every weakly dominated member is
   removed, ``c`` enters and becomes ``s``.
2. some member strictly dominates ``c``: ``c`` is discarded.
3. ``c`` is incomparable to every member: it enters if there is room,
   otherwise the archiver decides.
"""
import logging
import time
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional, Tuple

from .archivers import Archive, ArchiveEntry, Archiver, make_archiver
from .benchmarks import Benchmark, BenchmarkKind
from .core import Bitstring, Dominance, FitnessVector, compare, strictly_dominates
from .errors import ConfigError, InvariantViolation
from .hypervolume import hypervolume
from .mutation import MutationKind, MutationOperator
from .records import RunConfig, RunRecord, StopRule
from .rng import RandomStream
from .writers import TraceWriter

logger = logging.getLogger(__name__)


class StepEvent(Enum):
    DOMINATES_ACCEPTED = "dominates-accepted"
    DOMINATED_REJECTED = "dominated-rejected"
    INCOMPARABLE_ADDED = "incomparable-added"
    ARCHIVER_ACCEPTED = "archiver-accepted"
    ARCHIVER_REJECTED = "archiver-rejected"


_ACCEPTING = frozenset((StepEvent.DOMINATES_ACCEPTED, StepEvent.INCOMPARABLE_ADDED, StepEvent.ARCHIVER_ACCEPTED))


@dataclass(frozen=True)
class StepOutcome:
    event: StepEvent
    candidate: FitnessVector
    removed: Tuple[FitnessVector, ...] = ()

    @property
    def accepted(self) -> bool:
        """True iff the candidate entered the archive and became the current solution."""
        return self.event in _ACCEPTING


class PaesState:
    """
    One run in flight: current solution, archive, iteration counter and RNG stream.
    """

    def __init__(self, benchmark: Benchmark, mutation: MutationOperator, archiver: Archiver,
                 archive: Archive, current: ArchiveEntry, rng: RandomStream, debug: bool = False):
        self.benchmark = benchmark
        self.mutation = mutation
        self.archiver = archiver
        self.archive = archive
        self.current = current
        self.rng = rng
        self.iteration = 0
        self.debug = debug
        self.logger = logging.getLogger(__name__)

    @property
    def tracks_potential(self) -> bool:
        return self.benchmark.kind is BenchmarkKind.MLOTZ and self.mutation.kind is MutationKind.ONE_BIT

    @property
    def potential(self) -> int:
        """W of the current solution (m-LOTZ only)."""
        return sum(self.current.fitness)

    def check_invariants(self, previous_potential: Optional[int] = None):
        """
        :raises InvariantViolation: if the archive is inconsistent, ``s`` is not
            archived, or W decreased under one-bit mutation on m-LOTZ
        """
        self.archive.check_invariants()
        position = self.archive.position_of(self.current.fitness)
        if position is None or self.archive[position].genotype != self.current.genotype:
            raise InvariantViolation(f"Current solution {self.current.genotype} is not an archive member")
        expected = self.benchmark.evaluate_by_positions(self.current.genotype)
        if expected != self.current.fitness:
            raise InvariantViolation(f"Fitness of {self.current.genotype} is {expected}, cached {self.current.fitness}")
        if previous_potential is not None and self.tracks_potential and self.potential < previous_potential:
            raise InvariantViolation(f"W decreased from {previous_potential} to {self.potential} at t={self.iteration}")


def init(benchmark: Benchmark, mutation: MutationOperator, archiver: Archiver, archive_size: int,
         seed: int, debug: bool = False) -> PaesState:
    """
    Uniform random ``s`` and ``A_0 = {s}``.

    :raises ConfigError: if ``archive_size < 1``
    """
    if archive_size < 1:
        raise ConfigError(f"Archive size must be at least 1, got {archive_size}")
    rng = RandomStream(seed)
    genotype = Bitstring(rng.getrandbits(benchmark.n), benchmark.n)
    current = ArchiveEntry(genotype, benchmark.evaluate(genotype))
    archive = Archive(archive_size)
    archive.add(current)
    state = PaesState(benchmark, mutation, archiver, archive, current, rng, debug)
    if debug:
        state.check_invariants()
    return state


def _accept(state: PaesState, entry: ArchiveEntry):
    state.archive.add(entry)
    state.current = entry


def _branch(state: PaesState, entry: ArchiveEntry) -> StepOutcome:
    archive = state.archive
    fitness = entry.fitness

    # s is archived and members are pairwise incomparable, so s dominating c settles branch 2
    if strictly_dominates(state.current.fitness, fitness):
        return StepOutcome(StepEvent.DOMINATED_REJECTED, fitness)

    # an equal member is incomparable to every other member, so it is the only one c covers
    position = archive.position_of(fitness)
    if position is not None:
        removed = archive.remove_at(position)
        _accept(state, entry)
        return StepOutcome(StepEvent.DOMINATES_ACCEPTED, fitness, (removed.fitness,))

    covered = []
    for position, member in enumerate(archive):
        relation = compare(fitness, member.fitness)
        if relation is Dominance.STRICTLY_DOMINATES:
            covered.append(position)
        elif relation is Dominance.STRICTLY_DOMINATED_BY:
            return StepOutcome(StepEvent.DOMINATED_REJECTED, fitness)

    if covered:
        removed = tuple(archive.remove_at(position).fitness for position in sorted(covered, reverse=True))
        _accept(state, entry)
        return StepOutcome(StepEvent.DOMINATES_ACCEPTED, fitness, removed)

    if not archive.is_full:
        _accept(state, entry)
        return StepOutcome(StepEvent.INCOMPARABLE_ADDED, fitness)

    decision = state.archiver.decide(archive, fitness, state.rng)
    if not decision.accepted:
        return StepOutcome(StepEvent.ARCHIVER_REJECTED, fitness)
    if decision.removal is None:
        raise InvariantViolation(f"{state.archiver.describe()} accepted into a full archive without a removal")
    removed = archive.remove_at(decision.removal)
    _accept(state, entry)
    return StepOutcome(StepEvent.ARCHIVER_ACCEPTED, fitness, (removed.fitness,))


def step(state: PaesState) -> StepOutcome:
    """One PAES-25 iteration; ``state`` is updated in place."""
    previous_potential = state.potential if state.debug and state.tracks_potential else None
    n = state.benchmark.n
    parent = state.current.genotype
    genotype = Bitstring(parent.bits ^ state.mutation.flip_mask(n, state.rng), n)
    if state.debug and state.mutation.kind is MutationKind.ONE_BIT and genotype.hamming(parent) != 1:
        raise InvariantViolation(f"One-bit mutation changed {genotype.hamming(parent)} bits at t={state.iteration}")
    outcome = _branch(state, ArchiveEntry(genotype, state.benchmark.evaluate(genotype)))
    state.iteration += 1
    if state.debug:
        state.check_invariants(previous_potential)
    return outcome


@lru_cache(maxsize=64)
def front_hypervolume(benchmark: Benchmark) -> int:
    return hypervolume(benchmark.pareto_front_fitness())


def archiver_for(config: RunConfig) -> Archiver:
    return make_archiver(config.archiver, config.benchmark, config.archive_size,
                         grid_range=config.aga_grid_range, bisections=config.aga_bisections,
                         reference_point=config.reference_point)


def run(config: RunConfig, trace: Optional[TraceWriter] = None) -> RunRecord:
    """
    Iterate until the stop rule fires or the budget is spent.

    :param config: Run configuration
    :param trace: Optional trace sink; when omitted and ``config.trace_path`` is
        set, a trace file is opened for the duration of the run
    :return: Run record; a run that misses its stop target is censored, not failed
    """
    if trace is None and config.trace_path:
        with TraceWriter(config.trace_path, config.trace_every) as writer:
            return run(config, writer)

    started = time.perf_counter()
    benchmark = config.benchmark
    budget = config.resolved_budget
    state = init(benchmark, MutationOperator(config.mutation), archiver_for(config),
                 config.archive_size, config.seed, debug=config.debug)
    front_size = benchmark.front_size
    if config.stop is StopRule.FULL_FRONT and config.archive_size < front_size:
        logger.warning(f"Archive size {config.archive_size} is below the front size {front_size}; "
                       f"the full-front stop cannot fire")
    target = front_size if config.stop is not StopRule.COVERAGE else config.coverage_threshold * front_size
    is_optimal = benchmark.is_pareto_optimal

    covered = sum(1 for f in state.archive.fitnesses() if is_optimal(f))
    first_pareto = 0 if is_optimal(state.current.fitness) else None
    full_front = 0 if covered == front_size else None
    hv_cache = None
    if trace is not None:
        hv_cache = hypervolume(state.archive.fitnesses())
        trace.write(_trace_record(state, None, covered, front_size, hv_cache))

    reached = covered >= target
    while state.iteration < budget and not (reached and config.stop is not StopRule.BUDGET):
        outcome = step(state)
        if outcome.accepted:
            covered -= sum(1 for f in outcome.removed if is_optimal(f))
            if is_optimal(outcome.candidate):
                covered += 1
                if first_pareto is None:
                    first_pareto = state.iteration
            if full_front is None and covered == front_size:
                full_front = state.iteration
            reached = reached or covered >= target
        if trace is not None and trace.wants(outcome.accepted):
            if outcome.accepted:
                hv_cache = hypervolume(state.archive.fitnesses())
            trace.write(_trace_record(state, outcome, covered, front_size, hv_cache))

    if config.stop is StopRule.COVERAGE:
        censored = not reached
    else:
        censored = full_front is None
    record = RunRecord(
        config=config,
        iterations=state.iteration,
        iterations_to_first_pareto=first_pareto,
        iterations_to_full_front=full_front,
        censored=censored,
        coverage_fraction=covered / front_size,
        hv_fraction=hypervolume(state.archive.fitnesses()) / front_hypervolume(benchmark),
        wall_time=time.perf_counter() - started,
        archive_fitness=sorted(state.archive.fitnesses()),
    )
    logger.debug(f"{benchmark.describe()} seed={config.seed}: {state.iteration} iterations, "
                 f"coverage {record.coverage_fraction:.3f}, censored={censored}")
    return record


def _trace_record(state: PaesState, outcome: Optional[StepOutcome], covered: int, front_size: int, hv: int) -> dict:
    record = {
        "t": state.iteration,
        "event": outcome.event.value if outcome is not None else "init",
        "candidate": list(outcome.candidate) if outcome is not None else list(state.current.fitness),
        "archive_size": len(state.archive),
        "coverage": covered / front_size,
        "hv": hv,
    }
    if state.benchmark.kind is BenchmarkKind.MLOTZ:
        record["w"] = state.potential
    return record
