"""Theorem and conjecture rows for set-systems, orientations, dijoins, r-graphs and clutters (bounds).

Asserted rows are theorems at desk scale: a failing asserted row is a bug
signal. Conjecture rows and rows whose constant only bites beyond desk scale
are recorded with asserted=False and never fail a run.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from ..clutter.clutter_logic import (
    Clutter, blocker, core_clutter, covering_number, is_ideal, is_tau_cover_minimal,
    uphull_face_check, rainbow_covering_number, up_monotone_vc_bound,
)
from ..common import config
from ..common.errors import ConsistencyError, PreconditionError
from ..common.report import inf_or, jsonable
from ..graphs.dijoins import tight_dijoins
from ..graphs.matchings import odd_cut_clutter, postman_clutter, rgraph_suite
from ..graphs.mixed_graph import MixedGraph, edge_connectivity, ear_count
from ..graphs.orientations import (
    checked_pseudo_dicuts, scr, scr_cross_validate, two_pseudo_dicut_graph,
)
from ..polytope.faces import check_face_subcube, core_is_cube_ideal, minimal_face
from ..polytope.vertices import is_cube_ideal, subcube_corners_inside
from ..setsys.gsc import canonical_twist, connectivity, core_points, cover_graph, kappa
from ..setsys.set_system import SetSystem, vc_dimension
from .barvinok import theta_faces
from .entropy import entropy, rates, sauer_shelah_check


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TheoremRow:
    theorem: str
    lhs: Any
    rhs: Any
    passed: Optional[bool]
    conjecture: bool = False
    asserted: bool = True
    params: Dict[str, Any] = field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return self.asserted and self.passed is False

    def to_json(self) -> Dict[str, Any]:
        return {
            'asserted': self.asserted,
            'conjecture': self.conjecture,
            'lhs': jsonable(self.lhs),
            'params': jsonable(self.params),
            'pass': self.passed,
            'rhs': jsonable(self.rhs),
            'theorem': self.theorem,
        }


def failures(rows: List[TheoremRow]) -> List[TheoremRow]:
    bad = [r for r in rows if r.failed]
    for r in bad:
        logger.warning("theorem row failed: %s (lhs=%s, rhs=%s)", r.theorem, r.lhs, r.rhs)
    return bad


def _slack() -> float:
    return config.settings().slack


def _size_row(name: str, count: int, exponent: float, **params) -> TheoremRow:
    """count >= 2^exponent, compared in log space."""
    passed = math.log2(count) >= exponent - _slack() if count > 0 else False
    return TheoremRow(name, count, 2 ** exponent, passed, params=params)


def _g(lam: Optional[int]) -> float:
    """1 - H(1/lam), with 1 for lam = infinity."""
    return 1.0 if lam is None else 1 - entropy(1 / lam)


def _theta_or_none(lam: int, beta: float) -> Optional[float]:
    try:
        return theta_faces(lam, beta)
    except ConsistencyError as e:
        logger.info("theta unavailable: %s", e)
        return None


def _exp_row(name: str, count: int, theta: Optional[float], scale: int, conjecture: bool,
             **params) -> TheoremRow:
    """count >= e^{theta * scale}; reported only."""
    params = dict(params, theta=theta, scale=scale)
    if theta is None:
        return TheoremRow(name, count, None, None, conjecture=conjecture, asserted=False, params=params)
    rhs = math.exp(theta * scale)
    return TheoremRow(name, count, rhs, count >= rhs - _slack(), conjecture=conjecture, asserted=False,
                      params=params)


def verify_theorems(S: SetSystem) -> List[TheoremRow]:
    verdict = is_cube_ideal(S)
    if not verdict.verdict:
        raise PreconditionError(f"set-system is not cube-ideal; fractional vertex {verdict.witness}")
    lam = connectivity(S)
    if lam is not None and lam < 2:
        raise PreconditionError(f"connectivity is {lam}, at least 2 is required")
    n, size, vc = S.n, len(S), vc_dimension(S)
    rows: List[TheoremRow] = []

    if lam is None or lam >= 3:
        rows.append(_size_row('size bound', size, _g(lam) * n, **{'lambda': inf_or(lam), 'n': n}))
    if lam is not None and lam >= 3:
        inside = subcube_corners_inside(S, lam)
        rows.append(TheoremRow('subcube corners', inside, 1 << n, inside == 1 << n, params={'lambda': lam}))
        r = rates(lam)
        rows.append(TheoremRow('vc lower bound', vc, r.f * n, vc >= r.f * n - _slack(), params={'lambda': lam, 'f': r.f}))
        rows.append(TheoremRow('vc conjecture', vc, r.h * n + 1, vc >= r.h * n + 1 - _slack(), conjecture=True,
                               asserted=False, params={'lambda': lam, 'h': r.h}))

    core = core_points(S)
    cg = cover_graph(S)
    kap = kappa(S)
    rows.append(_size_row('core size', len(core), _g(kap) * cg.d, d=cg.d, kappa=inf_or(kap)))
    twist = canonical_twist(S)
    rows.append(TheoremRow('canonical twist', twist.is_comparability, True, twist.is_comparability,
                           params={'q': twist.q_bits()}))
    core_ok = core_is_cube_ideal(S)
    rows.append(TheoremRow('core cube-ideal', core_ok, True, core_ok, params={'core_size': len(core)}))
    half = minimal_face(S, [Fraction(1, 2)] * n)
    face_ok = half.dim == cg.d and set(half.lattice_points.points) == set(core.points)
    rows.append(TheoremRow('face at 1/2', half.dim, cg.d, face_ok,
                           params={'core_matches': set(half.lattice_points.points) == set(core.points)}))
    ss = sauer_shelah_check(S)
    rows.append(TheoremRow('Sauer-Shelah', size, ss.subset_bound, ss.holds, params={'vc': vc}))

    if lam is not None and lam >= 3:
        sub = check_face_subcube(S, lam)
        rows.append(TheoremRow('face subcube', sub.holds, True, sub.holds, asserted=sub.hypothesis,
                               params={'face_dim': sub.face_dim, 'hypothesis': sub.hypothesis,
                                       'slice_vertices': sub.slice_vertices, 'violation': sub.violation}))
        face = minimal_face(S, [Fraction(1, lam)] * n)
        if face.dim > 0:
            beta = face.dim / n
            rows.append(_exp_row('face lattice points', len(face.lattice_points), _theta_or_none(lam, beta), n, False,
                                 **{'lambda': lam, 'beta': beta}))
            rows.append(_exp_row('face conjecture', len(face.lattice_points), _theta_or_none(lam, 1.0), face.dim, True,
                                 **{'lambda': lam, 'stand_in': 'theta(lambda, 1)'}))
    logger.debug("%d theorem rows for n=%d", len(rows), n)
    return rows


def verify_orientations(G: MixedGraph) -> List[TheoremRow]:
    cuts = checked_pseudo_dicuts(G)
    S = scr(G)
    m = len(G.edges)
    rows: List[TheoremRow] = []
    rows.append(TheoremRow('orientation cut system', None, None, scr_cross_validate(G)))
    if m <= config.settings().polytope_max_n:
        ideal = is_cube_ideal(S).verdict
        rows.append(TheoremRow('orientations cube-ideal', ideal, True, ideal))
    pdg = two_pseudo_dicut_graph(G)
    rows.append(_size_row('orientation count', len(S), _g(pdg.kappa) * pdg.d, d=pdg.d, kappa=inf_or(pdg.kappa)))
    lam = min(len(c.edges) for c in cuts)
    if lam >= 3:
        rows.append(_size_row('orientation size', len(S), _g(lam) * m, **{'lambda': lam, 'edges': m}))
    if G.is_graph:
        ears = ear_count(G)
        rows.append(_size_row('ear bound', len(S), ears, ears=ears))
        conn = edge_connectivity(G)
        if conn is not None and conn >= 2:
            rhs = (1 - 2 / conn) * m + 1
            rows.append(TheoremRow('ear count', ears, rhs, ears >= rhs - _slack(), params={'lambda': conn}))
    return rows


def verify_dijoins(D: MixedGraph) -> List[TheoremRow]:
    result = tight_dijoins(D)
    tau, m = result.tau, len(D.arcs)
    sinks = sorted({v for _, v in D.arcs})
    regular = all(sum(1 for _, v in D.arcs if v == t) == tau for t in sinks)
    rows = [TheoremRow('rank <= |V|', result.rank, D.vcount, result.rank <= D.vcount)]
    rows.append(TheoremRow('tight dijoin exists', len(result.members), 1, len(result.members) >= 1,
                           asserted=regular, params={'sink_regular': regular, 'tau': tau}))
    if regular:
        rows.append(TheoremRow('rank <= 2|A|/tau', result.rank, Fraction(2 * m, tau),
                               result.rank <= Fraction(2 * m, tau), params={'tau': tau}))
        # the beta = 1/3 bound needs tau >= 3; below that the row is reported only
        rows.append(TheoremRow('dijoin rank', result.rank, Fraction(2 * m, 3),
                               result.rank <= Fraction(2 * m, 3), asserted=tau >= 3, params={'tau': tau}))
    if regular and tau >= 3:
        rows.append(_exp_row('tight dijoin count', len(result.members), _theta_or_none(tau, 1 / 3), m, False,
                             tau=tau))
    return rows


def verify_rgraph(G: MixedGraph, r: int) -> List[TheoremRow]:
    suite = rgraph_suite(G, r)
    m = len(G.edges)
    rows = [TheoremRow('r-graph', suite.is_r_graph, True, suite.is_r_graph, asserted=False, params={'r': r})]
    if not suite.is_r_graph:
        return rows
    rows.append(TheoremRow('matching rank', suite.rank, suite.rank_bound, suite.rank <= suite.rank_bound))
    if r >= 4:
        beta = 1 - Fraction(3, r)
        rhs = (1 - beta) * m
        rows.append(TheoremRow('core matching rank', suite.rank, rhs, suite.rank <= rhs, params={'beta': beta}))
        rows.append(_exp_row('core matching count', len(suite.core_matchings), _theta_or_none(r, float(beta)), m,
                             False, r=r))
    if r == 3:
        rows.append(_exp_row('matching conjecture', len(suite.core_matchings), _theta_or_none(3, 1.0),
                             m - suite.rank, True, rank=suite.rank, stand_in='theta(3, 1)'))
    if G.vcount <= 8:
        dual = blocker(postman_clutter(G)) == odd_cut_clutter(G)
        rows.append(TheoremRow('postman blocker', dual, True, dual))
    return rows


def verify_clutter(C: Clutter) -> List[TheoremRow]:
    if C.degenerate:
        raise PreconditionError("degenerate clutters are excluded from theorem checks")
    ideal = is_ideal(C).verdict
    rows = [TheoremRow('ideal', ideal, True, ideal, asserted=False)]
    if C.ground <= 10:
        dual = is_ideal(blocker(C)).verdict == ideal and blocker(blocker(C)) == C
        rows.append(TheoremRow('blocker duality', dual, True, dual))
    if not ideal:
        return rows
    tau = covering_number(C)
    vc, bound = up_monotone_vc_bound(C)
    rows.append(TheoremRow('up-monotone vc', vc, bound, vc >= bound, params={'tau': inf_or(tau)}))
    tcm = is_tau_cover_minimal(C)
    if tcm.verdict and C.ground <= config.settings().polytope_max_n:
        check = uphull_face_check(C)
        rows.append(TheoremRow('up-hull face', check.face_dim, check.expected_dim, check.holds,
                               params={'connectivity': inf_or(check.connectivity), 'tau': check.tau,
                                       'core_matches': check.face_points_match}))
    if tcm.verdict and tcm.tau == 2:
        rb = rainbow_covering_number(C)
        core = core_clutter(C)
        rows.append(_size_row('core clutter size', len(core), _g(rb.mu) * rb.d, d=rb.d, mu=inf_or(rb.mu)))
        core_ideal = is_ideal(core).verdict
        rows.append(TheoremRow('core clutter ideal', core_ideal, True, core_ideal))
    return rows
