"""
Seeded random streams shared by mutation, archivers, the PAES loop and the oracles.
"""
from typing import Dict, List, Sequence, Tuple, TypeVar

import numpy as np

T = TypeVar("T")

_SEED_MASK = (1 << 64) - 1
_WORD_RANGE = 1 << 64


def derive_seed(base_seed: int, *keys: int) -> int:
    """
    Derive a stable 64-bit seed from a base seed and integer keys.

    Sweeps use ``derive_seed(base_seed, n, replicate)`` so that serial and
    parallel execution hand every replicate the same stream.

    :param base_seed: Base seed of the sweep
    :param keys: Non-negative integer keys, e.g. problem size and replicate index
    :return: Seed in ``0 .. 2**64 - 1``
    """
    sequence = np.random.SeedSequence(entropy=base_seed & _SEED_MASK, spawn_key=tuple(int(k) for k in keys))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


class RandomStream:
    """
    A PCG64 generator with buffered scalar draws.

    Scalar calls into numpy cost microseconds each, which dominates a one-bit
    PAES iteration, so uniforms and binomials are drawn in blocks and served
    from Python lists.
    """

    def __init__(self, seed: int, buffer_size: int = 4096):
        if buffer_size < 1:
            raise ValueError("buffer_size must be positive")
        self.seed = int(seed) & _SEED_MASK
        self.buffer_size = buffer_size
        self.generator = np.random.default_rng(self.seed)
        self._uniforms: List[float] = []
        self._uniform_pos = 0
        self._words: List[int] = []
        self._word_pos = 0
        self._binomials: Dict[Tuple[int, float], List[int]] = {}
        self._binomial_pos: Dict[Tuple[int, float], int] = {}

    def random(self) -> float:
        """Uniform float in [0, 1)."""
        if self._uniform_pos >= len(self._uniforms):
            self._uniforms = self.generator.random(self.buffer_size).tolist()
            self._uniform_pos = 0
        value = self._uniforms[self._uniform_pos]
        self._uniform_pos += 1
        return value

    def _word(self) -> int:
        if self._word_pos >= len(self._words):
            self._words = self.generator.bit_generator.random_raw(self.buffer_size).tolist()
            self._word_pos = 0
        value = self._words[self._word_pos]
        self._word_pos += 1
        return value

    def randbelow(self, k: int) -> int:
        """Exactly uniform integer in ``0 .. k-1`` (rejection on raw 64-bit words)."""
        if k <= 0:
            raise ValueError("randbelow requires k >= 1")
        if k > _WORD_RANGE:
            raise ValueError(f"randbelow supports k up to 2**64, got {k}")
        limit = _WORD_RANGE - _WORD_RANGE % k
        while True:
            word = self._word()
            if word < limit:
                return word % k

    def choice(self, items: Sequence[T]) -> T:
        """Uniformly random element of a non-empty sequence."""
        if not items:
            raise ValueError("choice from an empty sequence")
        return items[self.randbelow(len(items))]

    def binomial(self, n: int, p: float) -> int:
        """Binomial(n, p) draw, buffered per (n, p) pair."""
        key = (n, p)
        buffer = self._binomials.get(key)
        pos = self._binomial_pos.get(key, 0)
        if buffer is None or pos >= len(buffer):
            buffer = self.generator.binomial(n, p, size=self.buffer_size).tolist()
            self._binomials[key] = buffer
            pos = 0
        self._binomial_pos[key] = pos + 1
        return buffer[pos]

    def sample_distinct(self, n: int, k: int) -> List[int]:
        """``k`` distinct integers from ``0 .. n-1`` in draw order."""
        if k > n:
            raise ValueError(f"cannot sample {k} distinct values below {n}")
        if k * 2 > n:
            return [int(v) for v in self.generator.permutation(n)[:k]]
        chosen: List[int] = []
        seen = set()
        while len(chosen) < k:
            value = self.randbelow(n)
            if value not in seen:
                seen.add(value)
                chosen.append(value)
        return chosen

    def getrandbits(self, n: int) -> int:
        """Uniform integer with ``n`` random bits."""
        if n <= 0:
            return 0
        nbytes = (n + 7) // 8
        value = int.from_bytes(self.generator.bytes(nbytes), "big")
        return value >> (nbytes * 8 - n)
