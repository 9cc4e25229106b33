"""Laminar families of odd sets and their size bound (graphs)."""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional, Tuple

from ..common.errors import ArgumentError, ConsistencyError, IndexSetError


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LaminarCheck:
    laminar: bool
    odd: bool
    size: int
    bound: int
    holds: Optional[bool]


def is_laminar(family: Iterable[FrozenSet[int]]) -> bool:
    members = list(family)
    for a, b in combinations(members, 2):
        if a & b and not (a <= b or b <= a):
            return False
    return True


def laminar_bound_check(family: Iterable[Iterable[int]], n: int) -> LaminarCheck:
    """|family| <= 3n - 1 for a laminar family of odd subsets of [2n].

    A family that is not laminar, or has an even member, is flagged and the
    bound is not evaluated (holds is None).
    """
    if n < 1:
        raise ArgumentError(f"n must be positive, got {n}")
    members = {frozenset(s) for s in family}
    for s in members:
        if any(not 1 <= v <= 2 * n for v in s):
            raise IndexSetError(f"member {sorted(s)} leaves [1, {2 * n}]")
    laminar = is_laminar(members)
    odd = all(len(s) % 2 for s in members)
    bound = 3 * n - 1
    holds = len(members) <= bound if laminar and odd else None
    if holds is False:
        logger.warning("laminar odd family of size %d exceeds %d", len(members), bound)
    return LaminarCheck(laminar, odd, len(members), bound, holds)


@lru_cache(maxsize=None)
def _inside(s: int) -> Tuple[int, Tuple[int, ...]]:
    """Best family strictly inside a block of s elements: (size, top-level part sizes).

    Top-level members are disjoint odd blocks; a block of size b contributes
    itself plus the best family inside it. An odd block cannot use itself.
    """
    parts = [p for p in range(1, s + 1, 2) if p < s]

    # unbounded knapsack over the odd part sizes, capacity s
    table: List[Tuple[int, Tuple[int, ...]]] = [(0, ())] * (s + 1)
    for cap in range(1, s + 1):
        table[cap] = table[cap - 1]
        for p in parts:
            if p <= cap:
                value = table[cap - p][0] + 1 + _inside(p)[0]
                if value > table[cap][0]:
                    table[cap] = (value, table[cap - p][1] + (p,))
    return table[s]


def _witness(start: int, size: int, top: bool = False) -> List[FrozenSet[int]]:
    family: List[FrozenSet[int]] = [] if top else [frozenset(range(start, start + size))]
    offset = start
    for p in sorted(_inside(size)[1], reverse=True):
        family.extend(_witness(offset, p))
        offset += p
    return family


@dataclass(frozen=True)
class LaminarMaximum:
    n: int
    size: int
    family: Tuple[Tuple[int, ...], ...]


def max_laminar_odd_family(n: int) -> LaminarMaximum:
    """Exact maximum size of a laminar family of odd subsets of [2n], with a witness."""
    if n < 1:
        raise ArgumentError(f"n must be positive, got {n}")
    size, _ = _inside(2 * n)
    family = _witness(1, 2 * n, top=True)
    if len(family) != size or not is_laminar(family):
        raise ConsistencyError(f"witness construction disagrees with the maximum {size}")
    return LaminarMaximum(n, size, tuple(sorted(tuple(sorted(s)) for s in family)))
