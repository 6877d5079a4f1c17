"""
One-bit and standard-bit mutation on packed bitstrings.
"""
from dataclasses import dataclass
from enum import Enum

from .core import Bitstring
from .errors import ConfigError
from .rng import RandomStream


class MutationKind(Enum):
    ONE_BIT = "one-bit"
    STANDARD_BIT = "standard-bit"

    @classmethod
    def from_name(cls, name: str) -> "MutationKind":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise ConfigError(f"Unknown mutation {name!r}; expected one-bit or standard-bit") from None


@dataclass(frozen=True)
class MutationOperator:
    """
    A stateless variation operator.

    Standard-bit mutation draws the number of flips from Binomial(n, 1/n) and
    then picks that many distinct positions, so a call costs O(expected flips).
    """
    kind: MutationKind = MutationKind.ONE_BIT

    def flip_mask(self, n: int, rng: RandomStream) -> int:
        """Packed mask of the positions to flip in an ``n``-bit genotype."""
        if self.kind is MutationKind.ONE_BIT:
            return 1 << rng.randbelow(n)
        flips = rng.binomial(n, 1.0 / n)
        if flips == 0:
            return 0
        if flips == 1:
            return 1 << rng.randbelow(n)
        mask = 0
        for offset in rng.sample_distinct(n, flips):
            mask |= 1 << offset
        return mask

    def mutate(self, x: Bitstring, rng: RandomStream) -> Bitstring:
        """Mutated copy of ``x``; ``x`` itself is never changed."""
        return Bitstring(x.bits ^ self.flip_mask(x.n, rng), x.n)


def mutate(op: MutationOperator, x: Bitstring, rng: RandomStream) -> Bitstring:
    return op.mutate(x, rng)
