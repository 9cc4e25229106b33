"""Set-systems over {0,1}^n stored as integer bitmasks (setsys).

Coordinate k (1-based) of a point is bit k-1 of its mask; bitstrings are
written left to right, character k being coordinate k.
"""

import logging
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, List, Optional, Set, Tuple, Union

from ..common import config
from ..common.errors import ArgumentError, DimensionError, IndexSetError


logger = logging.getLogger(__name__)

PointLike = Union[int, str]


def bits_of(mask: int) -> Iterator[int]:
    """0-based positions of the set bits, increasing."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    """1-based indices -> bitmask."""
    mask = 0
    for i in indices:
        mask |= 1 << (i - 1)
    return mask


def point_from_bits(text: str) -> int:
    mask = 0
    for k, ch in enumerate(text):
        if ch == '1':
            mask |= 1 << k
        elif ch != '0':
            raise ArgumentError(f"bitstring may only contain 0 and 1: {text!r}")
    return mask


def point_to_bits(point: int, n: int) -> str:
    return ''.join('1' if point >> k & 1 else '0' for k in range(n))


def as_point(value: PointLike, n: int) -> int:
    """Accept a bitstring of length n or a mask below 2^n."""
    if isinstance(value, str):
        if len(value) != n:
            raise DimensionError(f"point {value!r} has length {len(value)}, expected {n}")
        return point_from_bits(value)
    if value < 0 or value >> n:
        raise DimensionError(f"point mask {value} does not fit in dimension {n}")
    return value


class SetSystem:
    """Immutable finite subset of {0,1}^n."""

    __slots__ = ('n', 'points', '_sorted')

    def __init__(self, n: int, points: Iterable[int] = ()):
        cap = config.settings().max_n
        if n < 1:
            raise ArgumentError(f"dimension must be at least 1, got {n}")
        config.require_cap('n', n, cap)
        pts = frozenset(points)
        for p in pts:
            if p < 0 or p >> n:
                raise DimensionError(f"point mask {p} does not fit in dimension {n}")
        self.n = n
        self.points = pts
        self._sorted: Optional[Tuple[int, ...]] = None

    @classmethod
    def from_bitstrings(cls, strings: Iterable[str], n: Optional[int] = None) -> 'SetSystem':
        strings = list(strings)
        if n is None:
            if not strings:
                raise ArgumentError("dimension of an empty set-system must be given")
            n = len(strings[0])
        return cls(n, (as_point(s, n) for s in strings))

    def to_bitstrings(self) -> List[str]:
        return [point_to_bits(p, self.n) for p in self.sorted_points()]

    def sorted_points(self) -> Tuple[int, ...]:
        """Points in lexicographic order of their bitstrings."""
        if self._sorted is None:
            self._sorted = tuple(sorted(self.points, key=lambda p: point_to_bits(p, self.n)))
        return self._sorted

    def min_point(self) -> int:
        return self.sorted_points()[0]

    def is_full_cube(self) -> bool:
        return len(self.points) == 1 << self.n

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[int]:
        return iter(self.sorted_points())

    def __contains__(self, point: object) -> bool:
        return point in self.points

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetSystem):
            return NotImplemented
        return self.n == other.n and self.points == other.points

    def __hash__(self) -> int:
        return hash((self.n, self.points))

    def __repr__(self) -> str:
        shown = self.to_bitstrings()
        if len(shown) > 8:
            shown = shown[:8] + ['...']
        return f"SetSystem(n={self.n}, size={len(self)}, points=[{', '.join(shown)}])"


def full_cube(n: int) -> SetSystem:
    return SetSystem(n, range(1 << n))


def example_chain(n: int) -> SetSystem:
    """The chain 0, e1, e1+e2, ..., 1 (cube-ideal with connectivity 2)."""
    return SetSystem(n, ((1 << k) - 1 for k in range(n + 1)))


def twist(S: SetSystem, q: PointLike) -> SetSystem:
    qm = as_point(q, S.n)
    return SetSystem(S.n, (p ^ qm for p in S.points))


def _check_indices(S: SetSystem, indices: Iterable[int]) -> List[int]:
    idx = sorted(set(indices))
    if not idx:
        raise ArgumentError("index set must be nonempty")
    bad = [i for i in idx if i < 1 or i > S.n]
    if bad:
        raise IndexSetError(f"indices {bad} outside [1, {S.n}]")
    return idx


def project(S: SetSystem, indices: Iterable[int]) -> SetSystem:
    idx = _check_indices(S, indices)
    out = set()
    for p in S.points:
        r = 0
        for pos, i in enumerate(idx):
            if p >> (i - 1) & 1:
                r |= 1 << pos
        out.add(r)
    return SetSystem(len(idx), out)


def projection_profile(S: SetSystem, support: int) -> Set[int]:
    """Restrictions of the points to a 0-based support mask, kept in place."""
    return {p & support for p in S.points}


def is_shattered(S: SetSystem, support: int) -> bool:
    return len(projection_profile(S, support)) == 1 << bin(support).count('1')


def _supports(n: int, size: int) -> Iterator[int]:
    for combo in combinations(range(n), size):
        mask = 0
        for k in combo:
            mask |= 1 << k
        yield mask


def shattered_sets(S: SetSystem, d: int) -> List[Tuple[int, ...]]:
    """All 1-based index sets of size d onto which S projects fully."""
    if d < 0 or d > S.n:
        raise ArgumentError(f"size {d} outside [0, {S.n}]")
    return [tuple(k + 1 for k in bits_of(U)) for U in _supports(S.n, d) if is_shattered(S, U)]


def vc_dimension(S: SetSystem) -> int:
    if not S.points:
        return 0
    # a shattered set of size d needs 2^d distinct points
    top = min(S.n, len(S).bit_length() - 1)
    for d in range(top, 0, -1):
        for U in _supports(S.n, d):
            if is_shattered(S, U):
                logger.debug("vc dimension %d witnessed by support %s", d, bin(U))
                return d
    return 0


def subset_count(n: int, k: int) -> int:
    """Number of subsets of [n] of size at most k."""
    return sum(comb(n, i) for i in range(0, min(n, k) + 1))
