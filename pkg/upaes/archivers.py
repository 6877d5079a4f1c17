"""
Bounded archive and the policies consulted when it is full.

An archiver receives the archive by reference together with a candidate
fitness that is incomparable to every member. It returns an
:class:`ArchiverDecision` and never changes the archive; the PAES loop applies
the decision.
"""
import logging
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .benchmarks import Benchmark
from .core import Bitstring, FitnessVector, mutually_incomparable
from .errors import ConfigError, InvariantViolation, RangeError
from .hypervolume import ReferencePoint, contributions
from .rng import RandomStream

logger = logging.getLogger(__name__)

MgaLevel = int


class ArchiveEntry(NamedTuple):
    genotype: Bitstring
    fitness: FitnessVector


class Archive:
    """
    Members of the PAES archive, indexed by fitness.

    Members are kept in a list with a fitness -> position map; removal swaps
    the last member into the freed slot, so positions are only stable between
    two mutations of the archive.
    """

    def __init__(self, capacity: int):
        if capacity < 1:
            raise ConfigError(f"Archive capacity must be at least 1, got {capacity}")
        self.capacity = capacity
        self._entries: List[ArchiveEntry] = []
        self._index: Dict[FitnessVector, int] = {}

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[ArchiveEntry]:
        return iter(self._entries)

    def __getitem__(self, position: int) -> ArchiveEntry:
        return self._entries[position]

    @property
    def is_full(self) -> bool:
        return len(self._entries) >= self.capacity

    def fitnesses(self) -> List[FitnessVector]:
        return [entry.fitness for entry in self._entries]

    def fitness_set(self) -> frozenset:
        return frozenset(self._index)

    def position_of(self, fitness: FitnessVector) -> Optional[int]:
        return self._index.get(fitness)

    def add(self, entry: ArchiveEntry):
        if self.is_full:
            raise InvariantViolation(f"Archive is full ({self.capacity} members)")
        if entry.fitness in self._index:
            raise InvariantViolation(f"Fitness {entry.fitness} is already archived")
        self._index[entry.fitness] = len(self._entries)
        self._entries.append(entry)

    def remove_at(self, position: int) -> ArchiveEntry:
        entry = self._entries[position]
        last = self._entries.pop()
        del self._index[entry.fitness]
        if position < len(self._entries):
            self._entries[position] = last
            self._index[last.fitness] = position
        return entry

    def check_invariants(self):
        """
        :raises InvariantViolation: on overflow, a stale index or two comparable members
        """
        if len(self._entries) > self.capacity:
            raise InvariantViolation(f"Archive holds {len(self._entries)} members, capacity {self.capacity}")
        for position, entry in enumerate(self._entries):
            if self._index.get(entry.fitness) != position:
                raise InvariantViolation(f"Archive index out of date for {entry.fitness}")
        if len(self._index) != len(self._entries):
            raise InvariantViolation("Archive index and member list differ in size")
        if not mutually_incomparable(self.fitnesses()):
            raise InvariantViolation(f"Archive members are not pairwise incomparable: {sorted(self.fitnesses())}")


@dataclass(frozen=True)
class ArchiverDecision:
    """``removal`` is an archive position; it is set iff the candidate was accepted into a full archive."""
    accepted: bool
    removal: Optional[int] = None


REJECT = ArchiverDecision(False)


@dataclass(frozen=True)
class AgaParams:
    """Adaptive grid: ``[0, grid_range]`` bisected ``bisections`` times per objective."""
    grid_range: int
    bisections: int

    def __post_init__(self):
        if self.grid_range < 1:
            raise ConfigError(f"AGA grid range must be positive, got {self.grid_range}")
        if self.bisections < 1:
            raise ConfigError(f"AGA needs at least one bisection, got {self.bisections}")

    @classmethod
    def default(cls, f_max: int, archive_size: int, m: int) -> "AgaParams":
        bisections = max(1, math.ceil(math.log2(archive_size) / m) + 1)
        return cls(grid_range=max(1, f_max), bisections=bisections)

    @property
    def cells_per_axis(self) -> int:
        return 1 << self.bisections


def aga_cell(v: FitnessVector, p: AgaParams) -> Tuple[int, ...]:
    """Grid cell of ``v``; the last interval per axis is closed."""
    top = p.cells_per_axis - 1
    cell = []
    for value in v:
        if value < 0 or value > p.grid_range:
            raise RangeError(f"Fitness component {value} outside the AGA range [0, {p.grid_range}]")
        cell.append(min((value << p.bisections) // p.grid_range, top))
    return tuple(cell)


def aga_decide(archive: Archive, candidate: FitnessVector, p: AgaParams, rng: RandomStream) -> ArchiverDecision:
    """
    Always accept; evict a random member from a most crowded cell of ``A | {c}``.

    Only cells holding at least one member compete, so when every cell holds a
    single point the candidate's own cell is never picked.
    """
    members: Dict[Tuple[int, ...], List[int]] = {}
    for position, entry in enumerate(archive):
        members.setdefault(aga_cell(entry.fitness, p), []).append(position)
    candidate_cell = aga_cell(candidate, p)

    def occupancy(cell):
        return len(members[cell]) + (1 if cell == candidate_cell else 0)

    crowded = max(occupancy(cell) for cell in members)
    cells = [cell for cell in members if occupancy(cell) == crowded]
    cell = rng.choice(cells)
    return ArchiverDecision(True, rng.choice(members[cell]))


def hva_decide(archive: Archive, candidate: FitnessVector, h: Optional[ReferencePoint], rng: RandomStream) -> ArchiverDecision:
    """Reject iff the candidate is the unique smallest hypervolume contributor of ``A | {c}``."""
    points = archive.fitnesses() + [candidate]
    contrib = contributions(points, h)
    smallest = min(contrib)
    losers = [i for i, value in enumerate(contrib) if value == smallest]
    c_index = len(points) - 1
    if losers == [c_index]:
        return REJECT
    return ArchiverDecision(True, rng.choice([i for i in losers if i != c_index]))


def mga_box(v: FitnessVector, level: MgaLevel) -> Tuple[int, ...]:
    """Box index vector ``floor(v_i / 2**level)``."""
    return tuple(value >> level for value in v)


def _box_dominated(boxes: np.ndarray) -> np.ndarray:
    # covers[i, j]: box j weakly dominates box i
    covers = (boxes[None, :, :] >= boxes[:, None, :]).all(axis=2)
    np.fill_diagonal(covers, False)
    return covers.any(axis=1)


def mga_level(points: Sequence[FitnessVector]) -> MgaLevel:
    """Smallest level at which two box index vectors are weakly comparable (equal boxes count)."""
    if len(points) < 2:
        raise RangeError("mga_level needs at least two points")
    values = np.array(points, dtype=np.int64)
    top = int(values.max()).bit_length()
    for level in range(top + 1):
        if _box_dominated(values >> level).any():
            return level
    # at level top every box is the origin
    return top


def mga_decide(archive: Archive, candidate: FitnessVector, rng: RandomStream) -> ArchiverDecision:
    """
    Reject iff the candidate is the only point whose box is weakly dominated at the MGA level.

    Otherwise a uniformly random other box-dominated member is removed.
    """
    points = archive.fitnesses() + [candidate]
    level = mga_level(points)
    dominated = _box_dominated(np.array(points, dtype=np.int64) >> level)
    c_index = len(points) - 1
    removable = [i for i in np.flatnonzero(dominated).tolist() if i != c_index]
    if not removable:
        if not dominated[c_index]:
            raise InvariantViolation(f"No box is dominated at MGA level {level}")
        return REJECT
    return ArchiverDecision(True, rng.choice(removable))


def mga_expected_level(n: int, archive_size: int) -> MgaLevel:
    """
    Level at which MGA's archive on LOTZ ends with pairwise incomparable boxes.

    Writes ``n + 1 = 2**k * odd``; small archives sit one level above ``k``,
    and every doubling of the archive beyond ``odd`` lowers the level by one.
    """
    if archive_size < 1 or archive_size > n + 1:
        raise RangeError(f"Archive size must lie in 1..{n + 1}, got {archive_size}")
    k = 0
    odd = n + 1
    while odd % 2 == 0:
        odd //= 2
        k += 1
    if 2 * archive_size <= odd + 1:
        return k + 1
    j = 0
    while archive_size > (odd << j):
        j += 1
    return k - j


class ArchiverKind(Enum):
    AGA = "aga"
    HVA = "hva"
    MGA = "mga"
    NONE = "none"

    @classmethod
    def from_name(cls, name: str) -> "ArchiverKind":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise ConfigError(f"Unknown archiver {name!r}; expected aga, hva, mga or none") from None


class Archiver(ABC):
    """Full-archive policy for incomparable candidates."""
    kind: ArchiverKind

    def __init__(self):
        self.logger = logging.getLogger(__name__)
        self.accepted = 0
        self.rejected = 0

    def decide(self, archive: Archive, candidate: FitnessVector, rng: RandomStream) -> ArchiverDecision:
        decision = self._decide(archive, candidate, rng)
        if decision.accepted:
            self.accepted += 1
        else:
            self.rejected += 1
        return decision

    @abstractmethod
    def _decide(self, archive: Archive, candidate: FitnessVector, rng: RandomStream) -> ArchiverDecision:
        ...

    def describe(self) -> str:
        return self.kind.value


class NullArchiver(Archiver):
    """Baseline: a full archive admits nothing."""
    kind = ArchiverKind.NONE

    def _decide(self, archive, candidate, rng):
        return REJECT


class AdaptiveGridArchiver(Archiver):
    kind = ArchiverKind.AGA

    def __init__(self, params: AgaParams):
        super().__init__()
        self.params = params

    def _decide(self, archive, candidate, rng):
        return aga_decide(archive, candidate, self.params, rng)

    def describe(self) -> str:
        return f"aga(range={self.params.grid_range}, bisections={self.params.bisections})"


class HypervolumeArchiver(Archiver):
    kind = ArchiverKind.HVA

    def __init__(self, reference_point: Optional[ReferencePoint] = None):
        super().__init__()
        self.reference_point = reference_point

    def _decide(self, archive, candidate, rng):
        return hva_decide(archive, candidate, self.reference_point, rng)


class MultiLevelGridArchiver(Archiver):
    kind = ArchiverKind.MGA

    def _decide(self, archive, candidate, rng):
        return mga_decide(archive, candidate, rng)


def make_archiver(kind, benchmark: Benchmark, archive_size: int,
                  grid_range: Optional[int] = None, bisections: Optional[int] = None,
                  reference_point: Optional[Sequence[int]] = None) -> Archiver:
    """
    Build an archiver from its CLI name or kind.

    :param kind: ``ArchiverKind`` or one of ``aga``, ``hva``, ``mga``, ``none``
    :param benchmark: Benchmark the archive will hold points of
    :param archive_size: Archive capacity L
    :param grid_range: AGA interval end, defaults to the benchmark's f_max
    :param bisections: AGA bisections per axis
    :param reference_point: HVA reference point, defaults to all ``-1``
    :return: Archiver instance
    """
    if not isinstance(kind, ArchiverKind):
        kind = ArchiverKind.from_name(kind)
    if kind is ArchiverKind.AGA:
        params = AgaParams.default(benchmark.f_max, archive_size, benchmark.m)
        params = AgaParams(grid_range if grid_range is not None else params.grid_range,
                           bisections if bisections is not None else params.bisections)
        if params.grid_range < benchmark.f_max:
            raise ConfigError(f"AGA grid range {params.grid_range} is below f_max={benchmark.f_max}")
        return AdaptiveGridArchiver(params)
    if kind is ArchiverKind.HVA:
        h = ReferencePoint(tuple(reference_point)) if reference_point is not None else ReferencePoint.default(benchmark.m)
        if h.m != benchmark.m:
            raise ConfigError(f"Reference point has {h.m} components, {benchmark.describe()} has {benchmark.m} objectives")
        if benchmark.m > 2:
            logger.warning(f"HVA on {benchmark.m} objectives: supported, but only analysed for two")
        return HypervolumeArchiver(h)
    if kind is ArchiverKind.MGA:
        return MultiLevelGridArchiver()
    return NullArchiver()
