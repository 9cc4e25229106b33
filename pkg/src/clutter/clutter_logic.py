"""Clutters, blockers, idealness, cuboids and cores (clutter).

Members are bitmasks over the ground set: element k (1-based) is bit k-1.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx
import numpy as np

from ..common import config
from ..common.errors import ArgumentError, IndexSetError, PreconditionError
from ..common.linalg import RationalVector, is_integral, rank
from ..polytope.faces import minimal_face
from ..polytope.vertices import IneqRow, IneqSystem, enumerate_vertices
from ..setsys.gsc import connectivity
from ..setsys.set_system import SetSystem, bits_of, mask_of, vc_dimension


logger = logging.getLogger(__name__)


def _popcount(mask: int) -> int:
    return bin(mask).count('1')


def minimize(masks: Iterable[int]) -> FrozenSet[int]:
    """Inclusion-minimal members of a family of masks."""
    kept: List[int] = []
    for m in sorted(set(masks), key=_popcount):
        if not any(k & m == k for k in kept):
            kept.append(m)
    return frozenset(kept)


class Clutter:
    """Antichain of subsets of [m]."""

    __slots__ = ('ground', 'members')

    def __init__(self, ground: int, members: Iterable[int] = ()):
        if ground < 0:
            raise ArgumentError(f"ground set size must be nonnegative, got {ground}")
        mem = frozenset(members)
        for c in mem:
            if c < 0 or c >> ground:
                raise IndexSetError(f"member {sorted(k + 1 for k in bits_of(c))} outside [1, {ground}]")
        if minimize(mem) != mem:
            raise ArgumentError("members do not form an antichain")
        self.ground = ground
        self.members = mem

    @classmethod
    def from_sets(cls, ground: int, sets: Iterable[Iterable[int]]) -> 'Clutter':
        """Build from 1-based element sets, keeping only the minimal ones."""
        return cls(ground, minimize(mask_of(s) for s in sets))

    def sets(self) -> List[Tuple[int, ...]]:
        return sorted(tuple(k + 1 for k in bits_of(c)) for c in self.members)

    @property
    def has_no_members(self) -> bool:
        return not self.members

    @property
    def has_empty_member(self) -> bool:
        return 0 in self.members

    @property
    def degenerate(self) -> bool:
        return self.has_no_members or self.has_empty_member

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Clutter):
            return NotImplemented
        return self.ground == other.ground and self.members == other.members

    def __hash__(self) -> int:
        return hash((self.ground, self.members))

    def __repr__(self) -> str:
        return f"Clutter(ground={self.ground}, members={self.sets()})"


def blocker(C: Clutter) -> Clutter:
    """Minimal covers, built member by member (Berge multiplication)."""
    config.require_cap('ground size', C.ground, config.settings().blocker_max_m)
    covers = {0}
    for c in sorted(C.members):
        grown = set()
        for b in covers:
            if b & c:
                grown.add(b)
            else:
                grown.update(b | (1 << e) for e in bits_of(c))
        covers = set(minimize(grown))
    return Clutter(C.ground, covers)


def covering_number(C: Clutter) -> Optional[int]:
    """tau(C); None when no cover exists or C has no members."""
    if C.has_no_members:
        return None
    b = blocker(C)
    if not b.members:
        return None
    return min(_popcount(m) for m in b.members)


def minimum_covers(C: Clutter) -> List[int]:
    tau = covering_number(C)
    if tau is None:
        return []
    return sorted(m for m in blocker(C).members if _popcount(m) == tau)


@dataclass(frozen=True)
class IdealVerdict:
    verdict: bool
    witness: Optional[RationalVector]
    witness_in_q: bool
    degenerate: bool

    def __bool__(self) -> bool:
        return self.verdict


def covering_system(C: Clutter) -> IneqSystem:
    rows = []
    for c in sorted(C.members):
        coeffs = tuple(Fraction(c >> k & 1) for k in range(C.ground))
        rows.append(IneqRow(coeffs, Fraction(1), 'x(' + ' '.join(str(k + 1) for k in bits_of(c)) + ') >= 1'))
    return IneqSystem.boxed(C.ground, rows)


def is_ideal(C: Clutter) -> IdealVerdict:
    """Q(C) is integral iff its unit-box truncation is."""
    config.require_cap('ground size', C.ground, config.settings().ideal_max_m)
    if C.degenerate:
        logger.info("degenerate clutter treated as ideal")
        return IdealVerdict(True, None, False, True)
    if C.ground == 0:
        return IdealVerdict(True, None, False, True)
    system = covering_system(C)
    fractional = [v for v in enumerate_vertices(system, cap=config.settings().ideal_max_m)
                  if not is_integral(v)]
    if not fractional:
        return IdealVerdict(True, None, False, False)
    # a vertex of Q(C) has m linearly independent tight rows among x >= 0 and x(C) >= 1
    lower = [row for k, row in enumerate(system.rows) if k >= system.box_rows or k % 2 == 0]
    for v in fractional:
        tight = [row.coeffs for row in lower if row.slack(v) == 0]
        if rank(tight) == C.ground:
            return IdealVerdict(False, v, True, False)
    return IdealVerdict(False, fractional[0], False, False)


def cuboid(S: SetSystem) -> Clutter:
    """Element 2k-1 stands for x_k = 1 and element 2k for x_k = 0."""
    if not S.points:
        raise ArgumentError("the set-system is empty")
    members = []
    for p in S.points:
        m = 0
        for k in range(S.n):
            m |= 1 << (2 * k if p >> k & 1 else 2 * k + 1)
        members.append(m)
    return Clutter(2 * S.n, members)


def monotone_system(C: Clutter) -> SetSystem:
    """All 0/1 points whose support contains a member."""
    config.require_cap('ground size', C.ground, config.settings().monotone_max_m)
    full = (1 << C.ground) - 1
    points = set()
    for c in C.members:
        free = full & ~c
        sub = free
        while True:
            points.add(c | sub)
            if sub == 0:
                break
            sub = (sub - 1) & free
    return SetSystem(C.ground, points)


def minor(C: Clutter, delete: Iterable[int] = (), contract: Iterable[int] = ()) -> Clutter:
    """Delete I, contract J, relabel the remaining elements increasingly."""
    I, J = set(delete), set(contract)
    if I & J:
        raise ArgumentError(f"cannot both delete and contract {sorted(I & J)}")
    bad = sorted(k for k in I | J if k < 1 or k > C.ground)
    if bad:
        raise IndexSetError(f"elements {bad} outside [1, {C.ground}]")
    imask, jmask = mask_of(I), mask_of(J)
    remaining = [k for k in range(C.ground) if not (imask | jmask) >> k & 1]
    relabel = {old: new for new, old in enumerate(remaining)}
    members = []
    for c in C.members:
        if c & imask:
            continue
        rest = c & ~jmask
        members.append(sum(1 << relabel[k] for k in bits_of(rest)))
    return Clutter(len(remaining), minimize(members))


@dataclass(frozen=True)
class TauCoverMinimal:
    verdict: bool
    tau: Optional[int]

    def __bool__(self) -> bool:
        return self.verdict


def is_tau_cover_minimal(C: Clutter) -> TauCoverMinimal:
    if C.has_no_members:
        raise ArgumentError("clutter has no members")
    tau = covering_number(C)
    if tau is None:
        return TauCoverMinimal(False, None)
    covered = 0
    for b in minimum_covers(C):
        covered |= b
    return TauCoverMinimal(covered == (1 << C.ground) - 1, tau)


def core_clutter(C: Clutter) -> Clutter:
    """Members meeting every minimum cover exactly once."""
    if C.has_no_members or not is_tau_cover_minimal(C).verdict:
        raise PreconditionError("clutter is not cover-minimal")
    covers = minimum_covers(C)
    return Clutter(C.ground, (c for c in C.members if all(_popcount(c & b) == 1 for b in covers)))


def _incidence(ground: int, masks: Iterable[int]) -> np.ndarray:
    masks = sorted(masks)
    return np.array([[m >> k & 1 for k in range(ground)] for m in masks], dtype=np.int64).reshape(len(masks), ground)


def _width_length_violated(M: np.ndarray, B: np.ndarray, w: np.ndarray, ell: np.ndarray) -> bool:
    width = int((M @ w).min())
    length = int((B @ ell).min())
    return width * length > int(w @ ell)


def width_length_check(C: Clutter, trials: int = 100, seed: int = 0) -> bool:
    """min_C w(C) * min_B l(B) <= w.l on seeded random weights in {0..5}."""
    if C.degenerate:
        logger.info("width-length check skipped on a degenerate clutter")
        return True
    return find_width_length_violation(C, trials=trials, seed=seed, exhaustive=False) is None


def find_width_length_violation(C: Clutter, max_weight: int = 5, trials: int = 100, seed: int = 0,
                                exhaustive: Optional[bool] = None) -> Optional[Tuple[List[int], List[int]]]:
    """A weight pair breaking the width-length inequality, or None.

    Small instances are searched exhaustively over {0..max_weight}^m twice
    unless exhaustive is False.
    """
    if C.degenerate:
        return None
    M = _incidence(C.ground, C.members)
    B = _incidence(C.ground, blocker(C).members)
    m = C.ground
    if exhaustive is None:
        exhaustive = (max_weight + 1) ** (2 * m) <= 10 ** 6
    if exhaustive:
        for wt in product(range(max_weight + 1), repeat=m):
            w = np.array(wt, dtype=np.int64)
            for lt in product(range(max_weight + 1), repeat=m):
                ell = np.array(lt, dtype=np.int64)
                if _width_length_violated(M, B, w, ell):
                    return list(wt), list(lt)
        return None
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        w = rng.integers(0, max_weight + 1, size=m)
        ell = rng.integers(0, max_weight + 1, size=m)
        if _width_length_violated(M, B, w, ell):
            logger.info("width-length violation found: w=%s l=%s", w.tolist(), ell.tolist())
            return w.tolist(), ell.tolist()
    return None


def cover_graph(C: Clutter) -> nx.Graph:
    """G(C): an edge for every minimum cover of size two."""
    G = nx.Graph()
    G.add_nodes_from(range(1, C.ground + 1))
    for b in minimum_covers(C):
        if _popcount(b) == 2:
            G.add_edge(*(k + 1 for k in bits_of(b)))
    return G


@dataclass(frozen=True)
class RainbowCover:
    mu: Optional[int]
    d: int
    components: Tuple[FrozenSet[int], ...]


def rainbow_covering_number(C: Clutter) -> RainbowCover:
    tcm = is_tau_cover_minimal(C)
    if tcm.tau != 2 or not tcm.verdict:
        raise PreconditionError(f"clutter is not 2-cover-minimal (tau={tcm.tau})")
    G = cover_graph(C)
    comps = tuple(sorted((frozenset(c) for c in nx.connected_components(G)), key=min))
    label = {v: i for i, comp in enumerate(comps) for v in comp}
    mu: Optional[int] = None
    for b in blocker(C).members:
        elems = [k + 1 for k in bits_of(b)]
        tags = [label[e] for e in elems]
        if len(set(tags)) == len(tags) and (mu is None or len(elems) < mu):
            mu = len(elems)
    return RainbowCover(mu, len(comps), comps)


def up_monotone_vc_bound(C: Clutter) -> Tuple[int, Fraction]:
    """(vc dimension of S(C), the bound (1 - 1/tau) m)."""
    tau = covering_number(C)
    if tau is None:
        raise PreconditionError("clutter has no finite covering number")
    return vc_dimension(monotone_system(C)), (1 - Fraction(1, tau)) * C.ground


def minimum_cover_rank(C: Clutter) -> int:
    covers = minimum_covers(C)
    return rank([[b >> k & 1 for k in range(C.ground)] for b in covers])


@dataclass(frozen=True)
class UphullCheck:
    connectivity: Optional[int]
    tau: int
    face_dim: int
    expected_dim: int
    face_points_match: bool

    @property
    def holds(self) -> bool:
        return self.connectivity == self.tau and self.face_dim == self.expected_dim and self.face_points_match


def uphull_face_check(C: Clutter) -> UphullCheck:
    """Face of conv(S(C)) at (1/tau) 1 against the minimum covers and the core.

    For ideal tau-cover-minimal C: S(C) has connectivity tau, the face has
    dimension m - rank(minimum covers), and its 0/1 points are the core members.
    """
    tcm = is_tau_cover_minimal(C)
    if not tcm.verdict or tcm.tau is None:
        raise PreconditionError("clutter is not cover-minimal")
    S = monotone_system(C)
    x = tuple(Fraction(1, tcm.tau) for _ in range(C.ground))
    face = minimal_face(S, x)
    core = core_clutter(C)
    return UphullCheck(
        connectivity(S), tcm.tau, face.dim, C.ground - minimum_cover_rank(C),
        set(face.lattice_points.points) == set(core.members),
    )
