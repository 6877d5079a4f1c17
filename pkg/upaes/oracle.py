"""
Independent ground truth for small instances.

Grid random walks give cover times, exhaustive enumeration gives Pareto fronts
and hypervolumes, and a bipartite matching gives the largest set of mutually
incomparable fitness vectors.
"""
import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .archivers import make_archiver
from .benchmarks import Benchmark, BenchmarkKind
from .core import Bitstring, FitnessVector
from .errors import ConfigError, InstanceTooLargeError, RangeError
from .hypervolume import ReferencePoint
from .mutation import MutationKind, MutationOperator
from .paes import init, step
from .records import default_budget
from .rng import RandomStream

logger = logging.getLogger(__name__)

BRUTE_FORCE_MAX_N = 20
ANTICHAIN_MAX_VECTORS = 2000

Node = Tuple[int, ...]


class WalkMode(Enum):
    SIMPLE = "simple"
    LAZY = "lazy"

    @classmethod
    def from_name(cls, name: str) -> "WalkMode":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise ConfigError(f"Unknown walk mode {name!r}; expected simple or lazy") from None


@dataclass(frozen=True)
class GridWalkConfig:
    """
    Random walk on the ``dims``-fold product of a path with ``axis_nodes`` nodes.

    In lazy mode every axis direction is taken with probability ``1/n`` and the
    walk stays put otherwise, which is how PAES moves along the m-LOTZ front
    with ``dims = m/2`` and ``axis_nodes = 2n/m + 1``.
    """
    dims: int
    axis_nodes: int
    mode: WalkMode = WalkMode.SIMPLE
    n: Optional[int] = None
    start: Optional[Node] = None

    def __post_init__(self):
        if self.dims < 1:
            raise ConfigError(f"dims must be positive, got {self.dims}")
        if self.axis_nodes < 1:
            raise ConfigError(f"axis_nodes must be positive, got {self.axis_nodes}")
        if self.mode is WalkMode.LAZY:
            if self.n is None or self.n < 2 * self.dims:
                raise ConfigError(f"Lazy walk needs n >= 2*dims = {2 * self.dims}, got n={self.n}")
        start = tuple(self.start) if self.start is not None else (0,) * self.dims
        if len(start) != self.dims or any(not 0 <= v < self.axis_nodes for v in start):
            raise ConfigError(f"Start node {start} is not a node of the {self.dims}-dimensional grid")
        object.__setattr__(self, "start", start)

    @classmethod
    def for_benchmark(cls, benchmark: Benchmark, start: Optional[Node] = None) -> "GridWalkConfig":
        """The lazy walk PAES performs on the front of an m-LOTZ instance."""
        if benchmark.kind is not BenchmarkKind.MLOTZ:
            raise ConfigError("The front walk is only defined for m-LOTZ")
        return cls(benchmark.blocks, benchmark.block_length + 1, WalkMode.LAZY, benchmark.n, start)

    @property
    def node_count(self) -> int:
        return self.axis_nodes ** self.dims

    @property
    def step_probability(self) -> Optional[Fraction]:
        return Fraction(1, self.n) if self.mode is WalkMode.LAZY else None


def _moves(cfg: GridWalkConfig) -> List[List[int]]:
    """Per node index the targets of the 2*dims moves (axis, -1), (axis, +1); -1 if off the grid."""
    nodes = cfg.node_count
    table = []
    for index in range(nodes):
        targets = []
        stride = 1
        for _ in range(cfg.dims):
            coordinate = (index // stride) % cfg.axis_nodes
            targets.append(index - stride if coordinate > 0 else -1)
            targets.append(index + stride if coordinate < cfg.axis_nodes - 1 else -1)
            stride *= cfg.axis_nodes
        table.append(targets)
    return table


def _node_index(cfg: GridWalkConfig, node: Node) -> int:
    index = 0
    stride = 1
    for coordinate in node:
        index += coordinate * stride
        stride *= cfg.axis_nodes
    return index


def cover_time(cfg: GridWalkConfig, rng: RandomStream) -> int:
    """
    Steps until every grid node has been visited, starting at ``cfg.start``.

    Lazy steps draw an index in ``0..n-1``; the first ``2*dims`` indices are the
    moves (invalid ones at the border mean staying), every other index stays.
    Simple steps move to a uniformly chosen neighbour.
    """
    if cfg.axis_nodes < 2:
        raise RangeError("cover_time needs at least two nodes per axis")
    moves = _moves(cfg)
    neighbours = [[t for t in targets if t >= 0] for targets in moves]
    visited = bytearray(cfg.node_count)
    position = _node_index(cfg, cfg.start)
    visited[position] = 1
    remaining = cfg.node_count - 1
    steps = 0
    lazy = cfg.mode is WalkMode.LAZY
    move_count = 2 * cfg.dims
    n = cfg.n
    while remaining:
        steps += 1
        if lazy:
            index = rng.randbelow(n)
            if index >= move_count:
                continue
            target = moves[position][index]
            if target < 0:
                continue
        else:
            target = rng.choice(neighbours[position])
        position = target
        if not visited[position]:
            visited[position] = 1
            remaining -= 1
    return steps


def lazy_step_law(cfg: GridWalkConfig, node: Node) -> Dict[Node, Fraction]:
    """Exact one-step distribution of the lazy walk from ``node``."""
    if cfg.mode is not WalkMode.LAZY:
        raise ConfigError("lazy_step_law needs a lazy walk configuration")
    p = Fraction(1, cfg.n)
    law: Dict[Node, Fraction] = {}
    stay = Fraction(1)
    for axis in range(cfg.dims):
        for delta in (-1, 1):
            value = node[axis] + delta
            if 0 <= value < cfg.axis_nodes:
                target = node[:axis] + (value,) + node[axis + 1:]
                law[target] = law.get(target, Fraction(0)) + p
                stay -= p
    if stay:
        law[tuple(node)] = law.get(tuple(node), Fraction(0)) + stay
    return law


def front_node(benchmark: Benchmark, fitness: FitnessVector) -> Node:
    """Grid node of a front point: the LO value of every block."""
    return tuple(fitness[0::2])


def front_step_law(benchmark: Benchmark, genotype: Bitstring) -> Dict[Node, Fraction]:
    """
    Exact distribution of the next on-front position under one-bit mutation.

    Children that leave the front are strictly dominated by the parent and
    rejected, so they count as staying.
    """
    parent = benchmark.evaluate(genotype)
    if not benchmark.is_pareto_optimal(parent):
        raise RangeError(f"{genotype} is not Pareto-optimal on {benchmark.describe()}")
    here = front_node(benchmark, parent)
    law: Dict[Node, Fraction] = {}
    for position in range(1, benchmark.n + 1):
        child = benchmark.evaluate(genotype.flip([position]))
        target = front_node(benchmark, child) if benchmark.is_pareto_optimal(child) else here
        law[target] = law.get(target, Fraction(0)) + Fraction(1, benchmark.n)
    return law


def _all_fitness(benchmark: Benchmark) -> np.ndarray:
    n = benchmark.n
    values = np.arange(1 << n, dtype=np.int64)
    bits = np.empty((values.size, n), dtype=np.int8)
    for column in range(n):
        # column j holds position j+1, most significant first
        bits[:, column] = (values >> (n - 1 - column)) & 1
    if benchmark.kind is BenchmarkKind.MLOTZ:
        length = benchmark.block_length
        columns = []
        for start in range(0, n, length):
            block = bits[:, start:start + length]
            columns.append(np.cumprod(block, axis=1).sum(axis=1))
            columns.append(np.cumprod(1 - block[:, ::-1], axis=1).sum(axis=1))
        return np.stack(columns, axis=1)
    ones = bits.sum(axis=1)
    if benchmark.kind is BenchmarkKind.OMM:
        return np.stack([ones, n - ones], axis=1)
    half = n // 2
    return np.stack([ones, bits[:, :half].sum(axis=1) + (1 - bits[:, half:]).sum(axis=1)], axis=1)


def _strict_dominance_matrix(vectors: np.ndarray) -> np.ndarray:
    # result[i, j]: vector i strictly dominates vector j
    ge = (vectors[:, None, :] >= vectors[None, :, :]).all(axis=2)
    gt = (vectors[:, None, :] > vectors[None, :, :]).any(axis=2)
    return ge & gt


def _nondominated(vectors: np.ndarray) -> np.ndarray:
    return vectors[~_strict_dominance_matrix(vectors).any(axis=0)]


def brute_force_front(benchmark: Benchmark) -> FrozenSet[FitnessVector]:
    """
    Non-dominated fitness vectors over all of ``{0,1}^n``.

    :raises InstanceTooLargeError: for ``n > 20``
    """
    if benchmark.n > BRUTE_FORCE_MAX_N:
        raise InstanceTooLargeError(f"Exhaustive enumeration is limited to n <= {BRUTE_FORCE_MAX_N}, got n={benchmark.n}")
    vectors = np.unique(_all_fitness(benchmark), axis=0)
    return frozenset(tuple(int(v) for v in row) for row in _nondominated(vectors))


def brute_force_attainable(benchmark: Benchmark) -> FrozenSet[FitnessVector]:
    if benchmark.n > BRUTE_FORCE_MAX_N:
        raise InstanceTooLargeError(f"Exhaustive enumeration is limited to n <= {BRUTE_FORCE_MAX_N}, got n={benchmark.n}")
    return frozenset(tuple(int(v) for v in row) for row in np.unique(_all_fitness(benchmark), axis=0))


def max_antichain_size(benchmark: Benchmark) -> int:
    """
    Largest number of mutually incomparable attainable fitness vectors.

    By Dilworth's theorem this equals the size of a minimum chain cover of the
    strict dominance order, i.e. the number of vectors minus a maximum matching
    in the bipartite graph with an edge ``i -> j`` whenever ``v_i`` strictly
    dominates ``v_j``.

    :raises InstanceTooLargeError: above 2000 distinct fitness vectors
    """
    vectors = sorted(benchmark.attainable_fitness())
    count = len(vectors)
    if count > ANTICHAIN_MAX_VECTORS:
        raise InstanceTooLargeError(f"{benchmark.describe()} has {count} fitness vectors, "
                                    f"the exact antichain oracle stops at {ANTICHAIN_MAX_VECTORS}")
    dominance = _strict_dominance_matrix(np.array(vectors, dtype=np.int64))
    graph = csr_matrix(dominance.astype(np.int8), shape=(count, count))
    matching = maximum_bipartite_matching(graph, perm_type='column')
    matched = int((matching >= 0).sum())
    logger.debug(f"{benchmark.describe()}: {count} vectors, matching of size {matched}")
    return count - matched


def antichain_bounds(benchmark: Benchmark) -> Tuple[float, float]:
    """
    Bracket on the largest incomparable set of m-LOTZ.

    :return: ``(n+1, n+1)`` for two objectives, otherwise
        ``((2n/m+1)^(m-1) / (4 (m-2)^(m/2-1)), (2n/m+1)^(m-1))``
    """
    if benchmark.kind is not BenchmarkKind.MLOTZ:
        raise ConfigError("Antichain bounds are stated for m-LOTZ")
    m = benchmark.m
    if m == 2:
        return float(benchmark.n + 1), float(benchmark.n + 1)
    side = benchmark.block_length + 1
    upper = float(side ** (m - 1))
    return upper / (4 * (m - 2) ** (m // 2 - 1)), upper


def lattice_cell_hypervolume(points: Sequence[FitnessVector], h: Optional[ReferencePoint] = None) -> int:
    """Count unit cells ``u`` with ``h <= u`` and ``u < p`` componentwise for some point ``p``."""
    points = [tuple(p) for p in points]
    if not points:
        return 0
    m = len(points[0])
    ref = h.h if h is not None else (-1,) * m
    if len(ref) != m or any(len(p) != m for p in points):
        raise RangeError("Points and reference point must share one dimension")
    upper = [max(max(p[i] for p in points), ref[i]) for i in range(m)]
    axes = [np.arange(ref[i], upper[i], dtype=np.int64) for i in range(m)]
    if any(axis.size == 0 for axis in axes):
        return 0
    grids = np.meshgrid(*axes, indexing='ij')
    covered = np.zeros(grids[0].shape, dtype=bool)
    for p in points:
        inside = np.ones(grids[0].shape, dtype=bool)
        for i in range(m):
            inside &= grids[i] < p[i]
        covered |= inside
    return int(covered.sum())


@dataclass
class FrontCoverSample:
    """PAES front coverage measured from the first on-front current solution."""
    start: Node
    iterations: int
    censored: bool
    first_on_front: Optional[int] = None


def paes_front_cover_time(benchmark: Benchmark, seed: int, archive_size: Optional[int] = None,
                          archiver: str = "aga", budget: Optional[int] = None) -> FrontCoverSample:
    """
    Iterations one-bit PAES needs, after ``s`` first becomes Pareto-optimal,
    until the archive holds the whole front.

    The archive defaults to the front size; the returned start node is where
    the lazy walk should start for a matched comparison.
    """
    if benchmark.kind is not BenchmarkKind.MLOTZ:
        raise ConfigError("The front walk is only defined for m-LOTZ")
    size = archive_size if archive_size is not None else benchmark.front_size
    limit = budget if budget is not None else default_budget(benchmark, MutationKind.ONE_BIT)
    state = init(benchmark, MutationOperator(MutationKind.ONE_BIT),
                 make_archiver(archiver, benchmark, size), size, seed)
    is_optimal = benchmark.is_pareto_optimal
    while not is_optimal(state.current.fitness):
        if state.iteration >= limit:
            return FrontCoverSample(start=(), iterations=0, censored=True)
        step(state)
    first = state.iteration
    start = front_node(benchmark, state.current.fitness)
    covered = sum(1 for f in state.archive.fitnesses() if is_optimal(f))
    while covered < benchmark.front_size:
        if state.iteration >= limit:
            return FrontCoverSample(start, state.iteration - first, True, first)
        outcome = step(state)
        if outcome.accepted:
            covered += (1 if is_optimal(outcome.candidate) else 0) - sum(1 for f in outcome.removed if is_optimal(f))
    return FrontCoverSample(start, state.iteration - first, False, first)


def grid_nodes(cfg: GridWalkConfig) -> List[Node]:
    return list(itertools.product(range(cfg.axis_nodes), repeat=cfg.dims))
