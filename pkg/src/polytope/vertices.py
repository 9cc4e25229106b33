"""Inequality systems and exact vertex enumeration (polytope)."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..common import config
from ..common.errors import ArgumentError, ConsistencyError, DimensionError, PreconditionError
from ..common.linalg import RationalVector, dot, is_integral, solve_exact
from ..setsys.gsc import GscIneq, minimal_valid_gsc
from ..setsys.set_system import SetSystem


logger = logging.getLogger(__name__)

# above this many n-subsets of rows the double description method is used
BASIS_LIMIT = 20000


@dataclass(frozen=True)
class IneqRow:
    """coeffs . x >= rhs"""

    coeffs: Tuple[Fraction, ...]
    rhs: Fraction
    label: str = ''

    def slack(self, x: Sequence[Fraction]) -> Fraction:
        return dot(self.coeffs, x) - self.rhs

    def negated(self) -> 'IneqRow':
        return IneqRow(tuple(-c for c in self.coeffs), -self.rhs, f"-({self.label})")


@dataclass(frozen=True)
class IneqSystem:
    """Rows over n variables; always contains the box lo <= x_i <= hi."""

    n: int
    rows: Tuple[IneqRow, ...]
    lo: Fraction = Fraction(0)
    hi: Fraction = Fraction(1)

    @classmethod
    def boxed(cls, n: int, extra: Iterable[IneqRow] = (), lo: Fraction = Fraction(0),
              hi: Fraction = Fraction(1)) -> 'IneqSystem':
        if lo > hi:
            raise ArgumentError(f"empty box [{lo}, {hi}]")
        box: List[IneqRow] = []
        for i in range(n):
            unit = tuple(Fraction(1 if k == i else 0) for k in range(n))
            box.append(IneqRow(unit, Fraction(lo), f"x{i + 1} >= {lo}"))
            box.append(IneqRow(tuple(-c for c in unit), -Fraction(hi), f"x{i + 1} <= {hi}"))
        extra = tuple(extra)
        for row in extra:
            if len(row.coeffs) != n:
                raise DimensionError(f"row {row.label!r} has {len(row.coeffs)} coefficients, expected {n}")
        return cls(n, tuple(box) + extra, Fraction(lo), Fraction(hi))

    @property
    def box_rows(self) -> int:
        return 2 * self.n

    def satisfied_by(self, x: Sequence[Fraction]) -> bool:
        if len(x) != self.n:
            raise DimensionError(f"point has {len(x)} coordinates, expected {self.n}")
        return all(row.slack(x) >= 0 for row in self.rows)

    def tight_rows(self, x: Sequence[Fraction]) -> Tuple[IneqRow, ...]:
        return tuple(row for row in self.rows if row.slack(x) == 0)


def gsc_row(g: GscIneq, n: int) -> IneqRow:
    coeffs, rhs = g.as_row(n)
    return IneqRow(coeffs, rhs, g.format())


def description(S: SetSystem) -> IneqSystem:
    """Capacity rows plus the minimal valid GSC inequalities of S."""
    return IneqSystem.boxed(S.n, (gsc_row(g, S.n) for g in minimal_valid_gsc(S)))


def _basis_vertices(system: IneqSystem) -> List[RationalVector]:
    n, rows = system.n, system.rows
    found = set()
    for combo in combinations(range(len(rows)), n):
        A = [rows[i].coeffs for i in combo]
        b = [rows[i].rhs for i in combo]
        x = solve_exact(A, b)
        if x is not None and system.satisfied_by(x):
            found.add(x)
    return sorted(found)


def _zero_set(rows: Sequence[IneqRow], x: Sequence[Fraction]) -> int:
    z = 0
    for k, row in enumerate(rows):
        if row.slack(x) == 0:
            z |= 1 << k
    return z


def _double_description(system: IneqSystem) -> List[RationalVector]:
    """Cut the box by one row at a time, keeping the vertex list exact.

    Two vertices of a polytope span an edge iff no third vertex is tight on
    every row that both are tight on; new vertices are the crossings of edges
    with the incoming hyperplane.
    """
    n = system.n
    processed: List[IneqRow] = list(system.rows[:system.box_rows])
    vertices: Dict[RationalVector, int] = {}
    for corner in product((system.lo, system.hi), repeat=n):
        vertices[corner] = _zero_set(processed, corner)

    for row in system.rows[system.box_rows:]:
        slack = {v: row.slack(v) for v in vertices}
        pos = [v for v, s in slack.items() if s > 0]
        neg = [v for v, s in slack.items() if s < 0]
        k = len(processed)
        processed.append(row)
        if not neg:
            for v, s in slack.items():
                if s == 0:
                    vertices[v] |= 1 << k
            continue

        created: Dict[RationalVector, int] = {}
        for u in pos:
            zu = vertices[u]
            for w in neg:
                common = zu & vertices[w]
                if bin(common).count('1') < n - 1:
                    continue
                if any(z & common == common for other, z in vertices.items() if other != u and other != w):
                    continue
                su, sw = slack[u], slack[w]
                t = su / (su - sw)
                point = tuple(a + t * (b - a) for a, b in zip(u, w))
                created[point] = _zero_set(processed, point)

        kept: Dict[RationalVector, int] = {}
        for v, s in slack.items():
            if s > 0:
                kept[v] = vertices[v]
            elif s == 0:
                kept[v] = vertices[v] | (1 << k)
        kept.update(created)
        vertices = kept
        logger.debug("after row %d (%s): %d vertices", k, row.label, len(vertices))
        if not vertices:
            break
    return sorted(vertices)


def enumerate_vertices(system: IneqSystem, method: str = 'auto', cap: Optional[int] = None) -> List[RationalVector]:
    """All vertices, exact and sorted lexicographically."""
    config.require_cap('n', system.n, cap if cap is not None else config.settings().polytope_max_n)
    if method == 'auto':
        method = 'basis' if comb(len(system.rows), system.n) <= BASIS_LIMIT else 'double_description'
    if method == 'basis':
        return _basis_vertices(system)
    if method == 'double_description':
        return _double_description(system)
    raise ArgumentError(f"unknown vertex enumeration method {method!r}")


@dataclass(frozen=True)
class CubeIdealVerdict:
    verdict: bool
    witness: Optional[RationalVector]
    vertex_count: int

    def __bool__(self) -> bool:
        return self.verdict


def _vector_to_point(v: Sequence[Fraction]) -> int:
    return sum(1 << k for k, x in enumerate(v) if x == 1)


def is_cube_ideal(S: SetSystem) -> CubeIdealVerdict:
    if not S.points:
        raise ArgumentError("the set-system is empty")
    # caps are checked on every call, outside the cache
    config.require_cap('n', S.n, config.settings().polytope_max_n)
    return _cube_ideal_verdict(S)


@lru_cache(maxsize=256)
def _cube_ideal_verdict(S: SetSystem) -> CubeIdealVerdict:
    if S.is_full_cube():
        return CubeIdealVerdict(True, None, len(S))
    vertices = enumerate_vertices(description(S))
    integral = {_vector_to_point(v) for v in vertices if is_integral(v)}
    if integral != set(S.points):
        raise ConsistencyError(
            f"integral vertices ({len(integral)}) differ from the set-system ({len(S)})")
    witness = next((v for v in vertices if not is_integral(v)), None)
    logger.debug("cube-ideal check: %d vertices, witness %s", len(vertices), witness)
    return CubeIdealVerdict(witness is None, witness, len(vertices))


def require_cube_ideal(S: SetSystem) -> IneqSystem:
    verdict = is_cube_ideal(S)
    if not verdict.verdict:
        raise PreconditionError(f"set-system is not cube-ideal; fractional vertex {verdict.witness}")
    return description(S)


def membership(S: SetSystem, x: Sequence[Fraction]) -> bool:
    system = require_cube_ideal(S)
    if len(x) != S.n:
        raise DimensionError(f"point has {len(x)} coordinates, expected {S.n}")
    return system.satisfied_by([Fraction(v) for v in x])


def check_subcube(S: SetSystem, lam: int) -> bool:
    """conv(S) contains [1/lam, 1 - 1/lam]^n, decided on the corners."""
    if lam < 2:
        raise ArgumentError(f"lambda must be at least 2, got {lam}")
    return subcube_corners_inside(S, lam) == 1 << S.n


def subcube_corners_inside(S: SetSystem, lam: int) -> int:
    if lam < 2:
        raise ArgumentError(f"lambda must be at least 2, got {lam}")
    system = require_cube_ideal(S)
    lo, hi = Fraction(1, lam), 1 - Fraction(1, lam)
    return sum(1 for corner in product((lo, hi), repeat=S.n) if system.satisfied_by(corner))
