"""The explicit vertex-count rate gamma(alpha, beta) and the face constant theta (bounds).

gamma = (1 - eps)^2 / (2 beta^2 rho^2) * t + alpha * ln t,  t = 1 - exp(-rho^2 / 2),
valid when alpha * ln t > -eps^2 / 4. For fixed rho gamma falls as eps grows,
so the optimum sits on the validity boundary eps = 2 sqrt(-alpha ln t).
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from ..common.errors import ArgumentError, ConsistencyError
from .entropy import entropy


logger = logging.getLogger(__name__)

GRID_STEP = 1e-3
RHO_MAX = 10.0
# keeps eps strictly inside the validity region after refinement
BOUNDARY_NUDGE = 1e-12
REFINE_WINDOW = 0.05


@dataclass(frozen=True)
class BarvinokParams:
    alpha: float
    beta: float
    epsilon: float
    rho: float
    gamma: float
    valid: bool


def _require_alpha_beta(alpha: float, beta: float) -> None:
    if alpha < 1 or beta < 1:
        raise ArgumentError(f"alpha and beta must be at least 1, got {alpha} and {beta}")


def barvinok_gamma(alpha: float, beta: float, epsilon: float, rho: float) -> BarvinokParams:
    _require_alpha_beta(alpha, beta)
    if not 0 < epsilon < 1:
        raise ArgumentError(f"epsilon must lie in (0, 1), got {epsilon}")
    if rho <= 0:
        raise ArgumentError(f"rho must be positive, got {rho}")
    t = -math.expm1(-rho * rho / 2)
    log_t = math.log(t)
    gamma = (1 - epsilon) ** 2 / (2 * beta ** 2 * rho ** 2) * t + alpha * log_t
    valid = alpha * log_t > -epsilon ** 2 / 4 and gamma > 0
    return BarvinokParams(alpha, beta, epsilon, rho, gamma, valid)


def boundary_epsilon(alpha: float, rho: float) -> float:
    return 2 * math.sqrt(-alpha * math.log(-math.expm1(-rho * rho / 2)))


def optimize_gamma(alpha: float, beta: float) -> BarvinokParams:
    """Maximise gamma over (eps, rho): a fixed rho grid, then bounded refinement in rho."""
    _require_alpha_beta(alpha, beta)
    rho = np.arange(1, int(round(RHO_MAX / GRID_STEP)) + 1) * GRID_STEP
    t = -np.expm1(-rho ** 2 / 2)
    log_t = np.log(t)
    # smallest grid eps strictly above the boundary
    eps = (np.floor(2 * np.sqrt(-alpha * log_t) / GRID_STEP) + 1) * GRID_STEP
    gamma = (1 - eps) ** 2 / (2 * beta ** 2 * rho ** 2) * t + alpha * log_t
    gamma = np.where(eps < 1, gamma, -np.inf)
    best = int(np.argmax(gamma))
    coarse = barvinok_gamma(alpha, beta, float(eps[best]), float(rho[best]))
    logger.debug("grid optimum gamma=%.7f at eps=%.3f rho=%.3f", coarse.gamma, coarse.epsilon, coarse.rho)

    def objective(r: float) -> float:
        e = boundary_epsilon(alpha, r) + BOUNDARY_NUDGE
        if e >= 1:
            return math.inf
        return -barvinok_gamma(alpha, beta, e, r).gamma

    lo = max(float(rho[best]) - REFINE_WINDOW, GRID_STEP / 2)
    hi = float(rho[best]) + REFINE_WINDOW
    res = minimize_scalar(objective, bounds=(lo, hi), method='bounded', options={'xatol': 1e-9})
    if res.success and math.isfinite(res.fun):
        r = float(res.x)
        refined = barvinok_gamma(alpha, beta, boundary_epsilon(alpha, r) + BOUNDARY_NUDGE, r)
        if refined.gamma >= coarse.gamma:
            return refined
    return coarse


def beta_for(lam: float) -> float:
    """lam / (lam - 2), the beta that pairs with alpha = 1 for the cube bound."""
    if lam <= 2:
        raise ArgumentError(f"lambda must exceed 2, got {lam}")
    return lam / (lam - 2)


def gamma_hat(lam: float) -> float:
    """(1 - H(1/lam)) ln 2"""
    if lam < 2:
        raise ArgumentError(f"lambda must be at least 2, got {lam}")
    return (1 - entropy(1 / lam)) * math.log(2)


def theta_faces(lam: int, beta: float) -> float:
    """beta * gamma*(1/beta, (lam+1)^2 / sqrt(beta))"""
    if lam < 3:
        raise ArgumentError(f"lambda must be at least 3, got {lam}")
    if not 0 < beta <= 1:
        raise ArgumentError(f"beta must lie in (0, 1], got {beta}")
    params = optimize_gamma(1 / beta, (lam + 1) ** 2 / math.sqrt(beta))
    theta = beta * params.gamma
    if theta <= 0 or not params.valid:
        raise ConsistencyError(
            f"no valid positive gamma on the search grid for lambda={lam}, beta={beta} (best {params.gamma})")
    return theta
