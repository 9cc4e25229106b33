"""Command-line front end: one subcommand per package, JSON report on stdout (cli).

Exit codes: 0 success, 1 a theorem row or cross-check failed, 2 bad input.
"""

import argparse
import dataclasses
import logging
import math
import os
import sys
from fractions import Fraction
from importlib import import_module
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..bounds import barvinok, verify
from ..clutter import clutter_logic as cl
from ..common import config
from ..common.data_manager import (
    CLUTTER_EXT, GRAPH_EXT, SET_SYSTEM_EXT, DataManager, Loaded, dumps,
)
from ..common.errors import ArgumentError, ConsistencyError, CubeIdealError
from ..common.linalg import constant_vector, format_vector, parse_vector
from ..common.report import FAIL, INFO, PASS, Report, digest_file, inf_or
from ..graphs import dijoins, generators, matchings, mixed_graph, orientations
from ..polytope import faces, vertices
from ..setsys import gsc
from ..setsys.set_system import (
    SetSystem, bits_of, point_from_bits, project, shattered_sets, twist, vc_dimension,
)
from . import fixtures

# `src.bounds` re-exports the function `entropy`, shadowing the submodule attribute.
ent = import_module("..bounds.entropy", __package__)


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

LOG_FORMAT = '%(levelname)s %(name)s: %(message)s'

# reference anchors: gamma-hat, and gamma at alpha=1, beta=lam/(lam-2), eps=0.1, rho=3.462
GAMMA_LAMBDAS = (3, 10 ** 2, 10 ** 6, 10 ** 12)
GAMMA_EPSILON = 0.1
GAMMA_RHO = 3.462

ACTIONS = {
    'setsys': ('vcdim', 'connectivity', 'core', 'cover-graph', 'twist', 'project'),
    'poly': ('check', 'face', 'subcube'),
    'clutter': ('blocker', 'tau', 'ideal', 'cuboid', 'core', 'minor', 'widthlength', 'mu'),
    'graph': ('scr', 'orient-count', 'pdg', 'dijoins', 'rgraph', 'staircase', 'cyclespace', 'ears'),
    'bounds': ('rates', 'gamma', 'optimize', 'theta', 'entropy', 'verify'),
}


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-i', '--input', help='input file (.ss, .cl or .mg)')
    common.add_argument('-o', '--output', help='write the report here instead of stdout')
    common.add_argument('-v', '--verbose', action='count', default=0, help='more logging (repeatable)')
    common.add_argument('--lambda', dest='lam', type=int, help='connectivity parameter lambda')
    common.add_argument('--beta', type=float, help='beta for gamma/theta')
    common.add_argument('--alpha', type=float, help='alpha for gamma')
    common.add_argument('--epsilon', type=float, help='epsilon for gamma')
    common.add_argument('--rho', type=float, help='rho for gamma')
    common.add_argument('--seed', type=int, default=0, help='seed for randomised checks')
    common.add_argument('--trials', type=int, default=100, help='number of randomised trials')
    common.add_argument('--threads', type=int, help='worker cap')
    common.add_argument('--max-n', dest='max_n', type=int, help='cap on the dimension n')
    common.add_argument('--sweep', help='lambda range lo..hi for bounds rates')
    common.add_argument('--dat', action='store_true', help='emit the rates sweep as a plain table')
    common.add_argument('--point', help='comma-separated rationals, e.g. 1/2,1/2,1/2')
    common.add_argument('--value', type=float, help='argument y for inverse entropy')
    common.add_argument('--q', help='bitstring to twist by')
    common.add_argument('--indices', help='1-based coordinates, e.g. 1,3')
    common.add_argument('--delete', default='', help='elements to delete for clutter minor')
    common.add_argument('--contract', default='', help='elements to contract for clutter minor')
    common.add_argument('--k', type=int, help='staircase size, or n for chain')
    common.add_argument('--r', type=int, help='regularity r for the r-graph suite')
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='cube-ideal', description='Exact checks for cube-ideal set-systems, clutters and graphs.')
    common = _common_flags()
    sub = parser.add_subparsers(dest='command', required=True)
    for command, actions in ACTIONS.items():
        p = sub.add_parser(command, parents=[common])
        p.add_argument('action', choices=actions)
    gen = sub.add_parser('gen', parents=[common], help='write a built-in fixture')
    gen.add_argument('fixture', choices=fixtures.names())
    return parser


def _indices(text: str) -> List[int]:
    try:
        return [int(tok) for tok in text.replace(',', ' ').split()]
    except ValueError:
        raise ArgumentError(f"indices must be integers, got {text!r}")


def _sweep(text: str) -> Tuple[int, int]:
    lo, sep, hi = text.partition('..')
    try:
        if not sep:
            raise ValueError
        return int(lo), int(hi)
    except ValueError:
        raise ArgumentError(f"--sweep takes lo..hi, got {text!r}")


class Runner:
    """Holds the parsed arguments and the report being filled in."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.report = Report()

    def load(self, kind: str) -> Loaded:
        if not self.args.input:
            raise ArgumentError("this subcommand needs --input")
        manager = DataManager(self.args.input, kind)
        obj = manager.load()
        self.report.input_digest = digest_file(self.args.input)
        return obj

    def set_system(self) -> SetSystem:
        S = self.load(SET_SYSTEM_EXT)
        assert isinstance(S, SetSystem)
        return S

    def clutter(self) -> cl.Clutter:
        C = self.load(CLUTTER_EXT)
        assert isinstance(C, cl.Clutter)
        return C

    def graph(self) -> mixed_graph.MixedGraph:
        G = self.load(GRAPH_EXT)
        assert isinstance(G, mixed_graph.MixedGraph)
        return G

    def check(self, name: str):
        return self.report.check(name)

    def rows(self, name: str, rows: List[verify.TheoremRow]) -> None:
        with self.check(name) as c:
            c.values['rows'] = [r.to_json() for r in rows]
            bad = verify.failures(rows)
            c.witnesses = [r.theorem for r in bad]
            c.status = FAIL if bad else PASS

    # setsys

    def setsys(self, action: str) -> None:
        S = self.set_system()
        with self.check(f'setsys {action}') as c:
            if action == 'vcdim':
                vc = vc_dimension(S)
                c.values['vc_dimension'] = vc
                c.witnesses = shattered_sets(S, vc)[:1] if vc else []
            elif action == 'connectivity':
                c.values['connectivity'] = inf_or(gsc.connectivity(S))
                c.witnesses = [g.format() for g in gsc.minimal_valid_gsc(S)]
            elif action == 'core':
                core = gsc.core_points(S)
                c.values.update(size=len(core), points=core.to_bitstrings())
            elif action == 'cover-graph':
                cg = gsc.cover_graph(S)
                c.values.update(d=cg.d, edges=sorted(cg.edges), kappa=inf_or(gsc.kappa(S)),
                                components=[sorted(comp) for comp in cg.components])
            elif action == 'twist':
                if self.args.q:
                    T = twist(S, point_from_bits(self.args.q))
                    c.values['points'] = T.to_bitstrings()
                else:
                    ct = gsc.canonical_twist(S)
                    c.values.update(q=ct.q_bits(), preorder=sorted(ct.preorder),
                                    comparability=ct.is_comparability,
                                    points=twist(S, ct.q).to_bitstrings())
            elif action == 'project':
                if not self.args.indices:
                    raise ArgumentError("project needs --indices")
                P = project(S, _indices(self.args.indices))
                c.values.update(n=P.n, points=P.to_bitstrings())

    # polytope

    def poly(self, action: str) -> None:
        S = self.set_system()
        with self.check(f'poly {action}') as c:
            if action == 'check':
                verdict = vertices.is_cube_ideal(S)
                c.values.update(cube_ideal=verdict.verdict, vertex_count=verdict.vertex_count,
                                connectivity=inf_or(gsc.connectivity(S)))
                if verdict.witness is not None:
                    c.witnesses = [format_vector(verdict.witness)]
            elif action == 'face':
                x = parse_vector(self.args.point, S.n) if self.args.point else constant_vector(Fraction(1, 2), S.n)
                face = faces.minimal_face(S, x)
                c.values.update(point=format_vector(x), dim=face.dim, tight=[r.label for r in face.tight],
                                lattice_points=face.lattice_points.to_bitstrings())
            elif action == 'subcube':
                lam = self.args.lam or gsc.connectivity(S)
                if lam is None:
                    raise ArgumentError("the full cube has no finite connectivity; pass --lambda")
                inside = vertices.subcube_corners_inside(S, lam)
                c.values.update({'lambda': lam, 'corners_inside': inside, 'corners': 1 << S.n})
                if lam >= 3:
                    sub = faces.check_face_subcube(S, lam)
                    c.values.update(face_subcube=sub.holds, hypothesis=sub.hypothesis, face_dim=sub.face_dim)
                c.status = PASS if inside == 1 << S.n else INFO

    # clutter

    def clutter_action(self, action: str) -> None:
        if action == 'cuboid':
            S = self.set_system()
            with self.check('clutter cuboid') as c:
                C = cl.cuboid(S)
                c.values.update(ground=C.ground, members=C.sets())
            return
        C = self.clutter()
        with self.check(f'clutter {action}') as c:
            c.values['degenerate'] = C.degenerate
            if action == 'blocker':
                B = cl.blocker(C)
                c.values.update(ground=B.ground, members=B.sets())
            elif action == 'tau':
                tcm = cl.is_tau_cover_minimal(C)
                c.values.update(tau=inf_or(tcm.tau), cover_minimal=tcm.verdict)
            elif action == 'ideal':
                verdict = cl.is_ideal(C)
                c.values['ideal'] = verdict.verdict
                if verdict.witness is not None:
                    c.witnesses = [format_vector(verdict.witness)]
            elif action == 'core':
                core = cl.core_clutter(C)
                c.values.update(size=len(core), members=core.sets())
            elif action == 'minor':
                M = cl.minor(C, _indices(self.args.delete), _indices(self.args.contract))
                c.values.update(ground=M.ground, members=M.sets())
            elif action == 'widthlength':
                ok = cl.width_length_check(C, self.args.trials, self.args.seed)
                c.values['holds'] = ok
                found = cl.find_width_length_violation(C, trials=self.args.trials, seed=self.args.seed)
                if found is not None:
                    c.witnesses = [{'w': found[0], 'l': found[1]}]
            elif action == 'mu':
                rb = cl.rainbow_covering_number(C)
                c.values.update(mu=inf_or(rb.mu), d=rb.d, components=[sorted(comp) for comp in rb.components])

    # graphs

    def graph_action(self, action: str) -> None:
        if action == 'staircase':
            G = generators.staircase(self.args.k or 4)
        else:
            G = self.graph()
        with self.check(f'graph {action}') as c:
            if action == 'scr':
                S = orientations.scr(G)
                c.values.update(count=len(S), points=S.to_bitstrings(),
                                cross_validated=orientations.scr_cross_validate(G))
                c.status = PASS if c.values['cross_validated'] else FAIL
            elif action == 'orient-count':
                count = orientations.orientation_count(G)
                if G.is_graph:
                    exponent = float(mixed_graph.ear_count(G))
                else:
                    pdg = orientations.two_pseudo_dicut_graph(G)
                    exponent = pdg.d * (1.0 if pdg.kappa is None else 1 - ent.entropy(1 / pdg.kappa))
                bound = 2 ** exponent
                c.values.update(count=count, bound=bound)
                c.status = PASS if math.log2(count) >= exponent - config.settings().slack else FAIL
            elif action == 'pdg':
                pdg = orientations.two_pseudo_dicut_graph(G)
                c.values.update(d=pdg.d, kappa=inf_or(pdg.kappa), edges=sorted(pdg.graph.edges()),
                                components=[sorted(comp) for comp in pdg.components])
            elif action == 'dijoins':
                res = dijoins.tight_dijoins(G)
                c.values.update(tau=res.tau, members=res.members.sets(), rank=res.rank,
                                minimum_dicuts=[[k + 1 for k in bits_of(m)] for m in res.minimum_dicuts])
            elif action in ('rgraph', 'staircase'):
                r = self.args.r or (3 if action == 'staircase' else G.degree(1))
                suite = matchings.rgraph_suite(G, r)
                c.values.update(r=r, is_r_graph=suite.is_r_graph, matchings=len(suite.matchings),
                                core_matchings=suite.core_matchings.sets(), rank=suite.rank,
                                rank_bound=suite.rank_bound, edges=len(G.edges))
                if action == 'staircase':
                    c.values['graph'] = dumps(G)
            elif action == 'cyclespace':
                S = matchings.cycle_space(G)
                c.values.update(size=len(S), vc_dimension=vc_dimension(S), points=S.to_bitstrings())
            elif action == 'ears':
                c.values['ears'] = mixed_graph.ear_count(G)

    # bounds

    def bounds(self, action: str) -> None:
        a = self.args
        if action == 'verify':
            self.verify()
            return
        with self.check(f'bounds {action}') as c:
            if action == 'rates':
                lo, hi = _sweep(a.sweep) if a.sweep else (a.lam or 3, a.lam or 3)
                c.values['table'] = [[t.lam, t.f, t.g, t.h] for t in ent.rates_table(lo, hi)]
            elif action == 'gamma':
                if a.epsilon is not None or a.rho is not None:
                    p = barvinok.barvinok_gamma(a.alpha or 1.0, a.beta or 1.0, a.epsilon or GAMMA_EPSILON,
                                                a.rho or GAMMA_RHO)
                    c.values.update(gamma=p.gamma, valid=p.valid)
                else:
                    c.values['gamma_hat'] = {str(lam): barvinok.gamma_hat(lam) for lam in GAMMA_LAMBDAS}
                    c.values['gamma'] = {
                        str(lam): barvinok.barvinok_gamma(1.0, barvinok.beta_for(lam), GAMMA_EPSILON, GAMMA_RHO).gamma
                        for lam in GAMMA_LAMBDAS
                    }
            elif action == 'optimize':
                lam = a.lam or 10 ** 6
                p = barvinok.optimize_gamma(a.alpha or 1.0, a.beta or barvinok.beta_for(lam))
                hat = barvinok.gamma_hat(lam)
                c.values.update({'lambda': lam, 'gamma': p.gamma, 'epsilon': p.epsilon, 'rho': p.rho,
                                 'valid': p.valid, 'gamma_hat': hat, 'ratio': hat / p.gamma})
            elif action == 'theta':
                lam = a.lam or 3
                beta = a.beta if a.beta is not None else 1.0
                c.values.update({'lambda': lam, 'beta': beta, 'theta': barvinok.theta_faces(lam, beta)})
            elif action == 'entropy':
                if a.value is not None:
                    c.values['inverse'] = ent.entropy_inv(a.value)
                if a.lam:
                    c.values['entropy'] = ent.entropy(1 / a.lam)
                    c.values['rates'] = dataclasses.asdict(ent.rates(a.lam)) if a.lam >= 3 else None
                if not c.values:
                    raise ArgumentError("bounds entropy needs --lambda or --value")

    def verify(self) -> None:
        if not self.args.input:
            raise ArgumentError("bounds verify needs --input")
        kind = os.path.splitext(self.args.input)[1]
        if kind == SET_SYSTEM_EXT:
            self.rows('verify set-system', verify.verify_theorems(self.set_system()))
        elif kind == CLUTTER_EXT:
            self.rows('verify clutter', verify.verify_clutter(self.clutter()))
        else:
            G = self.graph()
            if G.is_digraph:
                self.rows('verify dijoins', verify.verify_dijoins(G))
            elif self.args.r:
                self.rows('verify r-graph', verify.verify_rgraph(G, self.args.r))
            else:
                self.rows('verify orientations', verify.verify_orientations(G))

    def gen(self, name: str) -> str:
        return dumps(fixtures.build(name, self.args.k or 0))


DISPATCH: Dict[str, Callable[[Runner, str], None]] = {
    'setsys': Runner.setsys,
    'poly': Runner.poly,
    'clutter': Runner.clutter_action,
    'graph': Runner.graph_action,
    'bounds': Runner.bounds,
}


def run(args: argparse.Namespace) -> Report:
    runner = Runner(args)
    DISPATCH[args.command](runner, args.action)
    return runner.report


def configure_logging(verbose: int) -> None:
    if verbose:
        level = logging.DEBUG if verbose > 1 else logging.INFO
    else:
        level = getattr(logging, os.environ.get(config.ENV_LOG_LEVEL, 'WARNING').upper(), logging.WARNING)
    logging.basicConfig(level=level, stream=sys.stderr, format=LOG_FORMAT)


def _write(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _dat(report: Report) -> str:
    lines = ['# lambda f g h']
    for lam, f, g, h in report.checks[0].values['table']:
        lines.append(f"{lam} {f:.10f} {g:.10f} {h:.10f}")
    return '\n'.join(lines) + '\n'


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        config.configure(max_n=args.max_n, threads=args.threads)
        if args.command == 'gen':
            _write(Runner(args).gen(args.fixture), args.output)
            return EXIT_OK
        report = run(args)
    except ConsistencyError as e:
        logger.error("internal cross-check failed: %s", e)
        return EXIT_FAILED
    except CubeIdealError as e:
        logger.error("%s", e)
        return EXIT_INPUT
    if args.command == 'bounds' and args.action == 'rates' and args.dat:
        _write(_dat(report), args.output)
    else:
        _write(report.dumps() + '\n', args.output)
    return EXIT_FAILED if report.failed else EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
