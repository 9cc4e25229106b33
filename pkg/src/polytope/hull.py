"""Convex-hull membership for arbitrary set-systems (polytope).

HiGHS proposes convex weights (or a separating hyperplane) in floating
point; the answer is only returned once it has been certified exactly.
"""

import logging
from fractions import Fraction
from typing import List, Sequence

import numpy as np
import sympy
from scipy.optimize import linprog

from ..common.errors import ConsistencyError, DimensionError
from ..setsys.set_system import SetSystem


logger = logging.getLogger(__name__)

_DENOMINATOR_LIMIT = 10 ** 6


def _point_columns(S: SetSystem) -> List[List[int]]:
    return [[p >> k & 1 for k in range(S.n)] for p in S.sorted_points()]


def _certify_weights(cols: List[List[int]], x: Sequence[Fraction], support: List[int]) -> bool:
    """Exact convex weights on the given columns, if any exist there."""
    n = len(x)
    A = sympy.Matrix([[cols[c][k] for c in support] for k in range(n)] + [[1] * len(support)])
    b = sympy.Matrix([sympy.Rational(v.numerator, v.denominator) for v in x] + [1])
    try:
        sol, params = A.gauss_jordan_solve(b)
    except ValueError:
        return False
    if params.shape[0]:
        sol = sol.subs({p: 0 for p in params})
    return all(v >= 0 for v in sol)


def _certify_separation(cols: List[List[int]], x: Sequence[Fraction], a: np.ndarray, b0: float) -> bool:
    coeffs = [Fraction(float(v)).limit_denominator(_DENOMINATOR_LIMIT) for v in a]
    rhs = Fraction(float(b0)).limit_denominator(_DENOMINATOR_LIMIT)
    if any(sum(c * v for c, v in zip(coeffs, col)) < rhs for col in cols):
        return False
    return sum(c * v for c, v in zip(coeffs, x)) < rhs


def hull_contains(S: SetSystem, x: Sequence[Fraction]) -> bool:
    if len(x) != S.n:
        raise DimensionError(f"point has {len(x)} coordinates, expected {S.n}")
    if not S.points:
        return False
    x = [Fraction(v) for v in x]
    if all(v.denominator == 1 for v in x):
        mask = sum(1 << k for k, v in enumerate(x) if v == 1)
        if any(v not in (0, 1) for v in x):
            return False
        return mask in S.points

    cols = _point_columns(S)
    m = len(cols)
    A_eq = np.array([[col[k] for col in cols] for k in range(S.n)] + [[1] * m], dtype=float)
    b_eq = np.array([float(v) for v in x] + [1.0])
    res = linprog(np.zeros(m), A_eq=A_eq, b_eq=b_eq, bounds=[(0, None)] * m, method='highs-ds')
    if res.status == 0:
        support = [i for i, w in enumerate(res.x) if w > 1e-9]
        if _certify_weights(cols, x, support):
            return True
        logger.debug("weight proposal failed exact certification, retrying on all points")
        if _certify_weights(cols, x, list(range(m))):
            return True

    # separation: minimise a.x - b0 subject to a.p >= b0 for all p in S
    n = S.n
    c = np.array([float(v) for v in x] + [-1.0])
    A_ub = np.array([[-col[k] for k in range(n)] + [1.0] for col in cols])
    b_ub = np.zeros(m)
    bounds = [(-1, 1)] * n + [(-n, n)]
    sep = linprog(c, A_ub=A_ub, b_ub=b_ub, bounds=bounds, method='highs-ds')
    if sep.status == 0 and sep.fun < -1e-9:
        if _certify_separation(cols, x, sep.x[:n], sep.x[n]):
            return False
    raise ConsistencyError(f"could not certify hull membership of {[str(v) for v in x]}")

