"""
Pseudo-Boolean benchmarks: m-LOTZ, OneMinMax and CountingOnesCountingZeros.
"""
import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import FrozenSet, List, Set

from .core import Bitstring, FitnessVector, fitness_vector, packed_leading_ones, packed_trailing_zeros
from .errors import ConfigError, DimensionError


class BenchmarkKind(Enum):
    """Benchmark names as used on the command line and in sweep files."""
    MLOTZ = "mlotz"
    OMM = "omm"
    COCZ = "cocz"


@dataclass(frozen=True)
class Benchmark:
    """
    A benchmark instance.

    LOTZ is ``Benchmark(BenchmarkKind.MLOTZ, n, m=2)``.
    """
    kind: BenchmarkKind
    n: int
    m: int = 2

    def __post_init__(self):
        if not isinstance(self.kind, BenchmarkKind):
            raise ConfigError(f"Unknown benchmark kind: {self.kind!r}")
        if self.n < 1:
            raise ConfigError(f"Problem size must be positive, got n={self.n}")
        if self.kind is BenchmarkKind.MLOTZ:
            if self.m < 2 or self.m % 2:
                raise ConfigError(f"m-LOTZ needs an even number of objectives, got m={self.m}")
            if self.m > self.n:
                raise ConfigError(f"m-LOTZ needs m <= n, got m={self.m}, n={self.n}")
            if self.n % (self.m // 2):
                raise ConfigError(f"m-LOTZ needs n divisible by m/2, got n={self.n}, m={self.m}")
        else:
            if self.m != 2:
                raise ConfigError(f"{self.kind.value} is bi-objective, got m={self.m}")
            if self.kind is BenchmarkKind.COCZ and self.n % 2:
                raise ConfigError(f"COCZ needs an even problem size, got n={self.n}")

    @classmethod
    def from_name(cls, name: str, n: int, m: int = 2) -> "Benchmark":
        """Build from the CLI name ``mlotz``, ``lotz``, ``omm`` or ``cocz``."""
        key = name.strip().lower()
        if key == "lotz":
            return cls(BenchmarkKind.MLOTZ, n, 2)
        try:
            kind = BenchmarkKind(key)
        except ValueError:
            raise ConfigError(f"Unknown benchmark {name!r}; expected mlotz, omm or cocz") from None
        return cls(kind, n, m)

    @property
    def name(self) -> str:
        return self.kind.value

    @property
    def blocks(self) -> int:
        """Number of m-LOTZ blocks (1 for the bi-objective benchmarks)."""
        return self.m // 2 if self.kind is BenchmarkKind.MLOTZ else 1

    @property
    def block_length(self) -> int:
        return self.n // self.blocks

    @property
    def f_max(self) -> int:
        if self.kind is BenchmarkKind.MLOTZ:
            return 2 * self.n // self.m
        return self.n

    def describe(self) -> str:
        return f"{self.name}(m={self.m}, n={self.n})"

    def evaluate(self, x: Bitstring) -> FitnessVector:
        """Fitness vector of genotype ``x``."""
        if x.n != self.n:
            raise DimensionError(f"{self.describe()} expects length {self.n}, got {x.n}")
        bits = x.bits
        if self.kind is BenchmarkKind.MLOTZ:
            length = self.block_length
            mask = (1 << length) - 1
            values: List[int] = []
            for shift in range(self.n - length, -1, -length):
                block = (bits >> shift) & mask
                values.append(packed_leading_ones(block, length))
                values.append(packed_trailing_zeros(block, length))
            return tuple(values)
        ones = bits.bit_count()
        if self.kind is BenchmarkKind.OMM:
            return (ones, self.n - ones)
        half = self.n // 2
        first = (bits >> half).bit_count()
        second = ones - first
        return (ones, first + half - second)

    def evaluate_by_positions(self, x: Bitstring) -> FitnessVector:
        """Position-by-position evaluation; the debug cross-check for :meth:`evaluate`."""
        bits = [x[i] for i in range(1, x.n + 1)]
        if self.kind is BenchmarkKind.MLOTZ:
            length = self.block_length
            values: List[int] = []
            for start in range(0, self.n, length):
                block = bits[start:start + length]
                lo = next((i for i, bit in enumerate(block) if bit == 0), length)
                tz = next((i for i, bit in enumerate(reversed(block)) if bit == 1), length)
                values.extend((lo, tz))
            return fitness_vector(values, self.f_max)
        ones = sum(bits)
        if self.kind is BenchmarkKind.OMM:
            return fitness_vector((ones, self.n - ones), self.f_max)
        half = self.n // 2
        return fitness_vector((ones, sum(bits[:half]) + bits[half:].count(0)), self.f_max)

    def potential(self, x: Bitstring) -> int:
        """W = sum over blocks of LO + TZ; equals n exactly on the m-LOTZ front."""
        if self.kind is not BenchmarkKind.MLOTZ:
            raise ConfigError("The LO+TZ potential is only defined for m-LOTZ")
        return sum(self.evaluate(x))

    def pareto_front_fitness(self) -> FrozenSet[FitnessVector]:
        """Every Pareto-optimal fitness vector."""
        return _front(self)

    @property
    def front_size(self) -> int:
        if self.kind is BenchmarkKind.MLOTZ:
            return (self.block_length + 1) ** self.blocks
        if self.kind is BenchmarkKind.OMM:
            return self.n + 1
        return self.n // 2 + 1

    def is_pareto_optimal(self, v: FitnessVector) -> bool:
        """Membership in the Pareto front, decided arithmetically."""
        if len(v) != self.m:
            raise DimensionError(f"{self.describe()} has {self.m} objectives, got {len(v)}")
        if self.kind is BenchmarkKind.MLOTZ:
            length = self.block_length
            for i in range(0, self.m, 2):
                lo, tz = v[i], v[i + 1]
                if lo < 0 or tz < 0 or lo + tz != length:
                    return False
            return True
        if self.kind is BenchmarkKind.OMM:
            return 0 <= v[0] <= self.n and v[0] + v[1] == self.n
        half = self.n // 2
        k = v[0] - half
        return 0 <= k <= half and v[1] == self.n - k

    def attainable_fitness(self) -> FrozenSet[FitnessVector]:
        """Every fitness vector attained by at least one genotype."""
        return _attainable(self)

    def front_genotypes(self) -> List[Bitstring]:
        """
        The canonical Pareto-optimal genotypes.

        For m-LOTZ this is the full Pareto set; for OMM and COCZ one preimage
        per front vector is returned.
        """
        if self.kind is BenchmarkKind.MLOTZ:
            length = self.block_length
            words = [((1 << i) - 1) << (length - i) for i in range(length + 1)]
            genotypes = []
            for combo in itertools.product(words, repeat=self.blocks):
                bits = 0
                for word in combo:
                    bits = (bits << length) | word
                genotypes.append(Bitstring(bits, self.n))
            return genotypes
        if self.kind is BenchmarkKind.OMM:
            return [Bitstring(((1 << i) - 1) << (self.n - i), self.n) for i in range(self.n + 1)]
        half = self.n // 2
        first = ((1 << half) - 1) << half
        return [Bitstring(first | (((1 << k) - 1) << (half - k)), self.n) for k in range(half + 1)]


@lru_cache(maxsize=64)
def _front(benchmark: Benchmark) -> FrozenSet[FitnessVector]:
    n = benchmark.n
    if benchmark.kind is BenchmarkKind.MLOTZ:
        length = benchmark.block_length
        pairs = [(i, length - i) for i in range(length + 1)]
        return frozenset(
            tuple(v for pair in combo for v in pair)
            for combo in itertools.product(pairs, repeat=benchmark.blocks)
        )
    if benchmark.kind is BenchmarkKind.OMM:
        return frozenset((i, n - i) for i in range(n + 1))
    half = n // 2
    return frozenset((half + k, n - k) for k in range(half + 1))


@lru_cache(maxsize=64)
def _attainable(benchmark: Benchmark) -> FrozenSet[FitnessVector]:
    n = benchmark.n
    if benchmark.kind is BenchmarkKind.MLOTZ:
        length = benchmark.block_length
        pairs: Set[tuple] = set()
        for lo in range(length + 1):
            for tz in range(length + 1 - lo):
                # a block with LO=lo, TZ=tz needs a 0 at lo+1 and a 1 at length-tz
                if lo + tz == length or lo + tz <= length - 2:
                    pairs.add((lo, tz))
        return frozenset(
            tuple(v for pair in combo for v in pair)
            for combo in itertools.product(sorted(pairs), repeat=benchmark.blocks)
        )
    if benchmark.kind is BenchmarkKind.OMM:
        return frozenset((i, n - i) for i in range(n + 1))
    half = n // 2
    return frozenset((a + c, a + half - c) for a in range(half + 1) for c in range(half + 1))


def evaluate(b: Benchmark, x: Bitstring) -> FitnessVector:
    return b.evaluate(x)


def pareto_front_fitness(b: Benchmark) -> FrozenSet[FitnessVector]:
    return b.pareto_front_fitness()


def is_pareto_optimal(b: Benchmark, v: FitnessVector) -> bool:
    return b.is_pareto_optimal(v)
