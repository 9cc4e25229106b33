"""GSC inequalities, connectivity, the 2-cover graph and the core (setsys).

A GSC inequality (I, J) reads sum_{i in I} x_i + sum_{j in J} (1 - x_j) >= 1.
Its only violating 0/1 pattern on the support I | J is 0 on I and 1 on J, so
(I, J) is valid for S exactly when that pattern is missing from the
projection of S onto the support.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from ..common.errors import (
    ArgumentError, ConsistencyError, IndexSetError, ParseError, PreconditionError,
)
from .set_system import (
    SetSystem, bits_of, mask_of, point_to_bits, projection_profile, twist,
)


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GscIneq:
    I: FrozenSet[int]
    J: FrozenSet[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, 'I', frozenset(self.I))
        object.__setattr__(self, 'J', frozenset(self.J))
        if self.I & self.J:
            raise ArgumentError(f"I and J overlap in {sorted(self.I & self.J)}")
        if not self.I and not self.J:
            raise ArgumentError("a GSC inequality needs at least one variable")
        if any(i < 1 for i in self.I | self.J):
            raise IndexSetError("GSC indices are 1-based")

    @classmethod
    def from_masks(cls, i_mask: int, j_mask: int) -> 'GscIneq':
        return cls(frozenset(k + 1 for k in bits_of(i_mask)), frozenset(k + 1 for k in bits_of(j_mask)))

    @property
    def size(self) -> int:
        return len(self.I) + len(self.J)

    @property
    def variables(self) -> FrozenSet[int]:
        return self.I | self.J

    @property
    def i_mask(self) -> int:
        return mask_of(self.I)

    @property
    def j_mask(self) -> int:
        return mask_of(self.J)

    def sort_key(self) -> Tuple[int, Tuple[int, ...], Tuple[int, ...]]:
        return (self.size, tuple(sorted(self.I)), tuple(sorted(self.J)))

    def check_dimension(self, n: int) -> None:
        bad = sorted(i for i in self.variables if i > n)
        if bad:
            raise IndexSetError(f"inequality {self.format()} uses indices {bad} outside [1, {n}]")

    def violated_by(self, point: int) -> bool:
        j = self.j_mask
        return point & self.i_mask == 0 and point & j == j

    def value(self, x: Sequence[Fraction]) -> Fraction:
        """Left-hand side at a rational point."""
        total = Fraction(0)
        for i in self.I:
            total += Fraction(x[i - 1])
        for j in self.J:
            total += 1 - Fraction(x[j - 1])
        return total

    def as_row(self, n: int) -> Tuple[Tuple[Fraction, ...], Fraction]:
        """Rewritten form sum_I x - sum_J x >= 1 - |J|."""
        self.check_dimension(n)
        coeffs = [Fraction(0)] * n
        for i in self.I:
            coeffs[i - 1] = Fraction(1)
        for j in self.J:
            coeffs[j - 1] = Fraction(-1)
        return tuple(coeffs), Fraction(1 - len(self.J))

    def twisted(self, q: int) -> 'GscIneq':
        """The inequality describing the twist of S by q (swap sides on q's support)."""
        I = {i for i in self.I if not q >> (i - 1) & 1} | {j for j in self.J if q >> (j - 1) & 1}
        J = {j for j in self.J if not q >> (j - 1) & 1} | {i for i in self.I if q >> (i - 1) & 1}
        return GscIneq(frozenset(I), frozenset(J))

    def format(self) -> str:
        left = ' '.join(str(i) for i in sorted(self.I)) or '-'
        right = ' '.join(str(j) for j in sorted(self.J)) or '-'
        return f"I: {left} ; J: {right}"

    @classmethod
    def parse(cls, text: str, source: str = '<string>', line: Optional[int] = None) -> 'GscIneq':
        parts = text.split(';')
        if len(parts) != 2:
            raise ParseError("expected 'I: ... ; J: ...'", source, line)
        sides = []
        for part, tag in zip(parts, ('I', 'J')):
            head, _, body = part.partition(':')
            if head.strip() != tag:
                raise ParseError(f"expected '{tag}:' label", source, line)
            body = body.strip()
            if body == '-':
                sides.append(frozenset())
                continue
            try:
                sides.append(frozenset(int(tok) for tok in body.split()))
            except ValueError:
                raise ParseError(f"non-integer index in {tag} side: {body!r}", source, line)
        try:
            return cls(sides[0], sides[1])
        except (ArgumentError, IndexSetError) as e:
            raise ParseError(str(e), source, line)

    def __str__(self) -> str:
        return self.format()


def _require_nonempty(S: SetSystem) -> None:
    if not S.points:
        raise ArgumentError("the set-system is empty")


def is_valid(S: SetSystem, g: GscIneq) -> bool:
    _require_nonempty(S)
    g.check_dimension(S.n)
    return not any(g.violated_by(p) for p in S.points)


def _submasks(U: int) -> Iterable[int]:
    c = U
    while True:
        yield c
        if c == 0:
            return
        c = (c - 1) & U


def minimal_valid_gsc(S: SetSystem) -> List[GscIneq]:
    """Valid GSC inequalities none of whose proper sub-inequalities is valid.

    (I, J) on support U with violating pattern c is minimal iff c is missing
    from proj_U(S) while every c ^ e (e in U) is present; dropping e from the
    support keeps the inequality valid exactly when c ^ e is missing too.
    """
    _require_nonempty(S)
    n = S.n
    out: List[GscIneq] = []
    for U in range(1, 1 << n):
        profile = projection_profile(S, U)
        if len(profile) == 1 << bin(U).count('1'):
            continue
        singles = [1 << k for k in bits_of(U)]
        for c in _submasks(U):
            if c in profile:
                continue
            if all((c ^ e) in profile for e in singles):
                out.append(GscIneq.from_masks(U & ~c, c))
    out.sort(key=GscIneq.sort_key)
    logger.debug("%d minimal valid GSC inequalities for n=%d, |S|=%d", len(out), n, len(S))
    return out


def connectivity(S: SetSystem) -> Optional[int]:
    """Fewest variables in a valid GSC inequality; None for the full cube."""
    _require_nonempty(S)
    for k in range(1, S.n + 1):
        for combo in combinations(range(S.n), k):
            U = 0
            for b in combo:
                U |= 1 << b
            if len(projection_profile(S, U)) < 1 << k:
                return k
    return None


def valid_two_gsc(S: SetSystem) -> List[GscIneq]:
    _require_nonempty(S)
    out = []
    for i, j in combinations(range(S.n), 2):
        U = (1 << i) | (1 << j)
        profile = projection_profile(S, U)
        for c in _submasks(U):
            if c not in profile:
                out.append(GscIneq.from_masks(U & ~c, c))
    out.sort(key=GscIneq.sort_key)
    return out


def _require_connectivity_two(S: SetSystem) -> None:
    lam = connectivity(S)
    if lam is not None and lam < 2:
        raise PreconditionError(f"connectivity is {lam}, at least 2 is required")


@dataclass(frozen=True)
class CoverGraph:
    n: int
    edges: FrozenSet[Tuple[int, int]]
    components: Tuple[FrozenSet[int], ...]
    labels: Dict[int, int] = field(compare=False)

    @property
    def d(self) -> int:
        return len(self.components)

    def graph(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(1, self.n + 1))
        G.add_edges_from(self.edges)
        return G


def _components(n: int, edges: Iterable[Tuple[int, int]]) -> Tuple[Tuple[FrozenSet[int], ...], Dict[int, int]]:
    G = nx.Graph()
    G.add_nodes_from(range(1, n + 1))
    G.add_edges_from(edges)
    comps = sorted((frozenset(c) for c in nx.connected_components(G)), key=min)
    labels = {v: idx for idx, comp in enumerate(comps) for v in comp}
    return tuple(comps), labels


def cover_graph(S: SetSystem) -> CoverGraph:
    _require_connectivity_two(S)
    edges = set()
    for g in valid_two_gsc(S):
        i, j = sorted(g.variables)
        edges.add((i, j))
    comps, labels = _components(S.n, edges)
    return CoverGraph(S.n, frozenset(edges), comps, labels)


def core_points(S: SetSystem) -> SetSystem:
    """Points tight for every valid 2-GSC inequality.

    A 2-GSC inequality evaluates to the Hamming distance from its violating
    pattern, so tightness means the restriction is not the complement of it.
    """
    _require_connectivity_two(S)
    forbidden = []
    for g in valid_two_gsc(S):
        U = g.i_mask | g.j_mask
        forbidden.append((U, g.j_mask ^ U))
    return SetSystem(S.n, (p for p in S.points if all(p & U != bad for U, bad in forbidden)))


def is_rainbow(S: SetSystem, g: GscIneq) -> bool:
    if not is_valid(S, g):
        raise PreconditionError(f"{g.format()} is not valid for S")
    cg = cover_graph(S)
    seen: Set[int] = set()
    for v in g.variables:
        label = cg.labels[v]
        if label in seen:
            return False
        seen.add(label)
    return True


def kappa(S: SetSystem) -> Optional[int]:
    """Fewest variables of a rainbow member of minimal_valid_gsc; None if none."""
    cg = cover_graph(S)
    best: Optional[int] = None
    for g in minimal_valid_gsc(S):
        labels = [cg.labels[v] for v in g.variables]
        if len(set(labels)) == len(labels):
            if best is None or g.size < best:
                best = g.size
    return best


@dataclass(frozen=True)
class CanonicalTwist:
    q: int
    n: int
    preorder: FrozenSet[Tuple[int, int]]
    is_comparability: bool

    def dominates(self, i: int, j: int) -> bool:
        """i >= j in the preorder (reflexive)."""
        return i == j or (i, j) in self.preorder

    def q_bits(self) -> str:
        return point_to_bits(self.q, self.n)


def canonical_twist(S: SetSystem) -> CanonicalTwist:
    """Twist by a core point so that every valid 2-GSC inequality reads x_i >= x_j."""
    from ..polytope.hull import hull_contains

    _require_nonempty(S)
    half = tuple(Fraction(1, 2) for _ in range(S.n))
    if not hull_contains(S, half):
        raise PreconditionError("the all-halves point is not in conv(S)")
    core = core_points(S)
    if not core.points:
        raise ConsistencyError("all-halves point lies in conv(S) but the core is empty")
    q = core.min_point()
    T = twist(S, q)

    relation = set()
    for a, b in combinations(range(S.n), 2):
        U = (1 << a) | (1 << b)
        profile = projection_profile(T, U)
        if 0 not in profile or U not in profile:
            raise ConsistencyError(f"twisted system misses a constant pattern on {{{a + 1},{b + 1}}}")
        if (1 << b) not in profile:
            relation.add((a + 1, b + 1))
        if (1 << a) not in profile:
            relation.add((b + 1, a + 1))

    for i, j in relation:
        for j2, k in relation:
            if j == j2 and i != k and (i, k) not in relation:
                raise ConsistencyError(f"preorder not transitive: {i}>={j}>={k} but not {i}>={k}")

    comparability = {tuple(sorted(pair)) for pair in relation}
    is_comp = comparability == set(cover_graph(S).edges)
    if not is_comp:
        logger.warning("comparability graph of the preorder differs from the 2-cover graph")
    return CanonicalTwist(q, S.n, frozenset(relation), is_comp)
