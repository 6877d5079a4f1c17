"""
Exact hypervolume over integer fitness lattices (maximisation).

The measure of a point set is the number of unit cells ``[u, u+1)`` with
``h_i <= u_i <= v_i - 1`` for some point ``v``; it is always an integer.
"""
import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .core import FitnessVector
from .errors import DimensionError, RangeError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReferencePoint:
    """Reference point ``h`` with every component ``<= 0``."""
    h: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "h", tuple(int(v) for v in self.h))
        if len(self.h) < 2:
            raise DimensionError(f"A reference point needs at least two components, got {len(self.h)}")
        if any(v > 0 for v in self.h):
            raise RangeError(f"Reference point components must be <= 0: {self.h}")

    @classmethod
    def default(cls, m: int) -> "ReferencePoint":
        """The all ``-1`` reference point used throughout the runtime analysis."""
        return cls((-1,) * m)

    @property
    def m(self) -> int:
        return len(self.h)


def _reference(h: Optional[ReferencePoint], m: int) -> Tuple[int, ...]:
    if h is None:
        return (-1,) * m
    if h.m != m:
        raise DimensionError(f"Reference point has {h.m} components, points have {m}")
    return h.h


def _hv2(points: Iterable[FitnessVector], h1: int, h2: int) -> int:
    volume = 0
    best = h2
    for a, b in sorted(points, reverse=True):
        if b > best:
            volume += (a - h1) * (b - best)
            best = b
    return volume


def _hv_lattice(points: List[FitnessVector], ref: Tuple[int, ...]) -> int:
    m = len(ref)
    edges = [np.unique(np.array([ref[i]] + [p[i] for p in points], dtype=np.int64)) for i in range(m)]
    covered = np.zeros(tuple(len(e) - 1 for e in edges), dtype=bool)
    for p in points:
        # number of compressed intervals lying below p_i on each axis
        covered[tuple(slice(0, int(np.searchsorted(edges[i], p[i]))) for i in range(m))] = True
    widths = np.ones(covered.shape, dtype=np.int64)
    for i in range(m):
        shape = [1] * m
        shape[i] = -1
        widths = widths * np.diff(edges[i]).reshape(shape)
    return int(widths[covered].sum())


def hypervolume(points: Iterable[FitnessVector], h: Optional[ReferencePoint] = None) -> int:
    """
    Exact hypervolume of a point set.

    :param points: Fitness vectors of equal length
    :param h: Reference point, defaults to ``(-1, ..., -1)``
    :return: Number of unit lattice cells covered by the union of boxes
    """
    unique = list(set(tuple(p) for p in points))
    if not unique:
        return 0
    m = len(unique[0])
    if any(len(p) != m for p in unique):
        raise DimensionError("All points must have the same number of objectives")
    ref = _reference(h, m)
    # points not above the reference in every objective add nothing
    unique = [p for p in unique if all(v > r for v, r in zip(p, ref))]
    if not unique:
        return 0
    if m == 2:
        return _hv2(unique, ref[0], ref[1])
    return _hv_lattice(unique, ref)


def hv_contribution(x: FitnessVector, others: Iterable[FitnessVector], h: Optional[ReferencePoint] = None) -> int:
    """Volume lost when ``x`` is taken out of ``others | {x}``."""
    rest = set(tuple(p) for p in others)
    x = tuple(x)
    if x in rest:
        return 0
    return hypervolume(rest | {x}, h) - hypervolume(rest, h)


def _mutually_nondominated_2d(ordered: Sequence[FitnessVector]) -> bool:
    for left, right in zip(ordered, ordered[1:]):
        if not (left[0] < right[0] and left[1] > right[1]):
            return False
    return True


def contributions(points: Sequence[FitnessVector], h: Optional[ReferencePoint] = None) -> List[int]:
    """
    Contribution of every entry of ``points`` to the hypervolume of the whole list.

    Repeated vectors contribute 0 each. Mutually incomparable bi-objective sets,
    the case the archivers produce, take the closed form
    ``(a_i - a_{i-1}) * (b_i - b_{i+1})`` along the sorted staircase.
    """
    points = [tuple(p) for p in points]
    if not points:
        return []
    m = len(points[0])
    if any(len(p) != m for p in points):
        raise DimensionError("All points must have the same number of objectives")
    ref = _reference(h, m)
    if m == 2 and len(set(points)) == len(points):
        order = sorted(range(len(points)), key=lambda i: points[i])
        ordered = [points[i] for i in order]
        if _mutually_nondominated_2d(ordered) and ordered[0][0] >= ref[0] and ordered[-1][1] >= ref[1]:
            result = [0] * len(points)
            for rank, index in enumerate(order):
                left = ordered[rank - 1][0] if rank > 0 else ref[0]
                below = ordered[rank + 1][1] if rank + 1 < len(ordered) else ref[1]
                result[index] = (ordered[rank][0] - left) * (ordered[rank][1] - below)
            return result
    total = hypervolume(points, h)
    result = []
    for i in range(len(points)):
        if points[i] in points[:i] or points[i] in points[i + 1:]:
            result.append(0)
        else:
            result.append(total - hypervolume(points[:i] + points[i + 1:], h))
    return result


def chain_hv_formula(n: int, a: int, b: int) -> int:
    """
    Hypervolume of the hole-free LOTZ chain ``{(i, n-i) : a <= i <= b}`` w.r.t. ``(-1, -1)``.

    :return: ``(n+1)(b+1) - a(a+1)/2 - b(b+1)/2``
    """
    if not 0 <= a <= b <= n:
        raise RangeError(f"chain_hv_formula needs 0 <= a <= b <= n, got a={a}, b={b}, n={n}")
    return (n + 1) * (b + 1) - a * (a + 1) // 2 - b * (b + 1) // 2


def hva_spread_bound(n: int, archive_size: int) -> int:
    """
    Lower bound on the archive hypervolume HVA keeps on LOTZ once the spread has settled.

    With ``c = ceil(L/2)`` the settled archive spans ``L + c - 2`` LO values with
    ``c - 1`` isolated holes. When that span would not fit into ``0..n`` the
    archive instead covers as much of the front as its capacity allows.
    """
    if n < 1 or archive_size < 1:
        raise RangeError(f"hva_spread_bound needs n >= 1 and L >= 1, got n={n}, L={archive_size}")
    half = (archive_size + 1) // 2
    if archive_size + half > n + 2:
        return (n + 2) * (n + 1) // 2 - max(n + 1 - archive_size, 0)
    span = archive_size + half - 2
    return (span + 1) * (2 * (n + 1) - span) // 2 - half + 1
