"""
Bitstrings, fitness vectors and the dominance order.

Bitstrings are packed into a single Python integer. Position 1 (the leftmost
character of the text form) is the most significant of the ``n`` bits, so
leading ones and trailing zeros reduce to ``int.bit_length`` arithmetic.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence, Tuple

from .errors import DimensionError, RangeError

FitnessVector = Tuple[int, ...]


class Dominance(Enum):
    """Outcome of comparing fitness vector ``u`` against ``v``."""
    STRICTLY_DOMINATES = "strictly_dominates"
    EQUAL = "equal"
    STRICTLY_DOMINATED_BY = "strictly_dominated_by"
    INCOMPARABLE = "incomparable"

    @property
    def weakly_dominates(self) -> bool:
        return self is Dominance.STRICTLY_DOMINATES or self is Dominance.EQUAL

    @property
    def weakly_dominated_by(self) -> bool:
        return self is Dominance.STRICTLY_DOMINATED_BY or self is Dominance.EQUAL

    def reverse(self) -> "Dominance":
        """The relation of ``v`` against ``u``."""
        if self is Dominance.STRICTLY_DOMINATES:
            return Dominance.STRICTLY_DOMINATED_BY
        if self is Dominance.STRICTLY_DOMINATED_BY:
            return Dominance.STRICTLY_DOMINATES
        return self


@dataclass(frozen=True)
class Bitstring:
    """A fixed-length genotype in {0,1}^n."""
    bits: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise DimensionError(f"Bitstring length must be positive, got {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise RangeError(f"Bit pattern does not fit into {self.n} positions")

    @classmethod
    def from_string(cls, text: str) -> "Bitstring":
        """Parse the ASCII form, most significant position first."""
        text = text.strip()
        if not text:
            raise DimensionError("Bitstring text is empty")
        if any(ch not in "01" for ch in text):
            raise RangeError(f"Bitstring text may only contain 0 and 1: {text!r}")
        return cls(int(text, 2), len(text))

    @classmethod
    def from_bits(cls, values: Sequence[int]) -> "Bitstring":
        """Build from a sequence of 0/1 values, position 1 first."""
        if any(v not in (0, 1) for v in values):
            raise RangeError("Every element of a bitstring must be 0 or 1")
        return cls.from_string("".join(str(v) for v in values))

    @classmethod
    def zeros(cls, n: int) -> "Bitstring":
        return cls(0, n)

    @classmethod
    def ones(cls, n: int) -> "Bitstring":
        return cls((1 << n) - 1, n)

    def __str__(self) -> str:
        return format(self.bits, f"0{self.n}b")

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, position: int) -> int:
        """Bit at 1-based position ``position`` (1 = leftmost)."""
        if not 1 <= position <= self.n:
            raise IndexError(f"position {position} outside 1..{self.n}")
        return (self.bits >> (self.n - position)) & 1

    def flip(self, positions: Iterable[int]) -> "Bitstring":
        """Copy with the given 1-based positions flipped."""
        mask = 0
        for position in positions:
            if not 1 <= position <= self.n:
                raise IndexError(f"position {position} outside 1..{self.n}")
            mask ^= 1 << (self.n - position)
        return Bitstring(self.bits ^ mask, self.n)

    def count_ones(self) -> int:
        return self.bits.bit_count()

    def hamming(self, other: "Bitstring") -> int:
        if other.n != self.n:
            raise DimensionError(f"Cannot compare bitstrings of length {self.n} and {other.n}")
        return (self.bits ^ other.bits).bit_count()


def packed_leading_ones(bits: int, length: int) -> int:
    """Leading ones of a ``length``-bit packed word."""
    inverted = ~bits & ((1 << length) - 1)
    if inverted == 0:
        return length
    return length - inverted.bit_length()


def packed_trailing_zeros(bits: int, length: int) -> int:
    """Trailing zeros of a ``length``-bit packed word."""
    if bits == 0:
        return length
    return (bits & -bits).bit_length() - 1


def leading_ones(x: Bitstring) -> int:
    """Length of the longest all-ones prefix of ``x``."""
    return packed_leading_ones(x.bits, x.n)


def trailing_zeros(x: Bitstring) -> int:
    """Length of the longest all-zeros suffix of ``x``."""
    return packed_trailing_zeros(x.bits, x.n)


def fitness_vector(values: Iterable[int], f_max: int = None) -> FitnessVector:
    """
    Validate and freeze a fitness vector.

    :param values: Objective values
    :param f_max: Optional upper bound per component
    :return: Tuple of non-negative integers with at least two components
    """
    vector = tuple(int(v) for v in values)
    if len(vector) < 2:
        raise DimensionError(f"A fitness vector needs at least two objectives, got {len(vector)}")
    if any(v < 0 for v in vector):
        raise RangeError(f"Fitness components must be non-negative: {vector}")
    if f_max is not None and any(v > f_max for v in vector):
        raise RangeError(f"Fitness components must not exceed {f_max}: {vector}")
    return vector


def compare(u: Sequence[int], v: Sequence[int]) -> Dominance:
    """
    Compare two fitness vectors under maximisation.

    :raises DimensionError: if the vectors differ in length
    """
    if len(u) != len(v):
        raise DimensionError(f"Cannot compare vectors with {len(u)} and {len(v)} objectives")
    greater = False
    smaller = False
    for a, b in zip(u, v):
        if a > b:
            greater = True
        elif a < b:
            smaller = True
        if greater and smaller:
            return Dominance.INCOMPARABLE
    if greater:
        return Dominance.STRICTLY_DOMINATES
    if smaller:
        return Dominance.STRICTLY_DOMINATED_BY
    return Dominance.EQUAL


def weakly_dominates(u: Sequence[int], v: Sequence[int]) -> bool:
    """True iff ``u >= v`` componentwise."""
    for a, b in zip(u, v):
        if a < b:
            return False
    return True


def strictly_dominates(u: Sequence[int], v: Sequence[int]) -> bool:
    """True iff ``u >= v`` componentwise with at least one strict inequality."""
    return u != v and weakly_dominates(u, v)


def mutually_incomparable(vectors: Sequence[Sequence[int]]) -> bool:
    """True iff no vector in the list weakly dominates another one."""
    for i in range(len(vectors)):
        for j in range(i + 1, len(vectors)):
            if compare(vectors[i], vectors[j]) is not Dominance.INCOMPARABLE:
                return False
    return True
