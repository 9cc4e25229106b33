"""Binary entropy, the rate functions f, g, h and counting lemmas (bounds)."""

import logging
import math
from dataclasses import dataclass
from typing import List, Tuple

from ..common import config
from ..common.errors import ArgumentError, ConsistencyError
from ..setsys.set_system import SetSystem, subset_count, vc_dimension


logger = logging.getLogger(__name__)

INVERSE_TOLERANCE = 1e-12


def entropy(x: float) -> float:
    """H(x) in bits on [0, 1/2], with H(0) = 0."""
    if not 0 <= x <= 0.5:
        raise ArgumentError(f"entropy is taken on [0, 1/2], got {x}")
    if x == 0:
        return 0.0
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


def entropy_inv(y: float) -> float:
    """The x in [0, 1/2] with H(x) = y, by bisection."""
    if not 0 <= y <= 1:
        raise ArgumentError(f"inverse entropy is taken on [0, 1], got {y}")
    if y == 0:
        return 0.0
    if y == 1:
        return 0.5
    lo, hi = 0.0, 0.5
    while hi - lo > INVERSE_TOLERANCE:
        mid = (lo + hi) / 2
        if entropy(mid) < y:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def _require_lambda(lam: int, least: int) -> None:
    if lam < least:
        raise ArgumentError(f"lambda must be at least {least}, got {lam}")


@dataclass(frozen=True)
class RateTriple:
    lam: int
    f: float
    g: float
    h: float


def rates(lam: int) -> RateTriple:
    """f = H^-1(1 - H(1/lam)), g = 1 - H(1/lam), h = 1 - 2/lam."""
    _require_lambda(lam, 3)
    g = 1 - entropy(1 / lam)
    f = entropy_inv(g)
    h = 1 - 2 / lam
    if not 0 <= f <= g <= h < 1:
        raise ConsistencyError(f"rates out of order at lambda={lam}: f={f}, g={g}, h={h}")
    return RateTriple(lam, f, g, h)


def rates_table(lo: int, hi: int) -> List[RateTriple]:
    if lo > hi:
        raise ArgumentError(f"empty sweep {lo}..{hi}")
    return [rates(lam) for lam in range(lo, hi + 1)]


def subset_count_check(n: int, lam: int) -> bool:
    """sum_{k <= n/lam} C(n, k) <= 2^{H(1/lam) n}, compared in log space."""
    _require_lambda(lam, 2)
    if n < 0:
        raise ArgumentError(f"n must be nonnegative, got {n}")
    count = subset_count(n, n // lam)
    return math.log2(count) <= entropy(1 / lam) * n + config.settings().slack


@dataclass(frozen=True)
class SauerShelahRow:
    lam: int
    size_bound_met: bool
    vc_at_least: float
    holds: bool


@dataclass(frozen=True)
class SauerShelahCheck:
    size: int
    vc: int
    subset_bound: int
    holds: bool
    corollary: Tuple[SauerShelahRow, ...]


def sauer_shelah_check(S: SetSystem) -> SauerShelahCheck:
    """|S| <= sum_{k <= vc} C(n, k), and vc >= n/lam whenever |S| >= 2^{H(1/lam) n}."""
    if not S.points:
        raise ArgumentError("the set-system is empty")
    n, vc = S.n, vc_dimension(S)
    bound = subset_count(n, vc)
    slack = config.settings().slack
    rows = []
    for lam in range(2, n + 1):
        big = math.log2(len(S)) > entropy(1 / lam) * n + slack
        need = n / lam
        rows.append(SauerShelahRow(lam, big, need, (not big) or vc >= need - slack))
    holds = len(S) <= bound and all(r.holds for r in rows)
    if not holds:
        logger.warning("Sauer-Shelah check failed: |S|=%d, vc=%d, bound=%d", len(S), vc, bound)
    return SauerShelahCheck(len(S), vc, bound, holds, tuple(rows))
