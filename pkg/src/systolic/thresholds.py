"""Genus thresholds: when a surface must be Loewner, and when the entropy bound wins."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bounds import LOEWNER, GROMOV_ASPHERICAL, AdmissiblePair, gromov_genus_bound
from .errors import DomainError
from .inversion import (
    DEFAULT_GRID,
    DEFAULT_PARAM_TOL,
    best_sigma_upper,
    grid_golden_min,
    log_corollary_root,
)

SQRT3 = math.sqrt(3.0)
ALPHA_MAX = 0.125
LOOP_DISKS = 15


@dataclass(frozen=True)
class ThresholdReport:
    objective_min: float
    argmin_alpha: float
    genus_threshold: int
    evaluations: tuple


@dataclass(frozen=True)
class PackingFixedPoint:
    alpha: float
    ball_count: int
    coefficient: float
    objective: float
    iterations: int


@dataclass(frozen=True)
class CrossoverReport:
    genus: int
    corollary_bound: float
    gromov_bound: float
    pair: AdmissiblePair


def _check_alpha(alpha: float):
    if not 0.0 < alpha < ALPHA_MAX:
        raise DomainError(f"alpha must lie in (0, 1/8), got {alpha}")


def packing_objective(alpha: float, coefficient: float = 2.0) -> float:
    """Largest g - 1 compatible with an un-Loewner surface, for disk-area coefficient ``coefficient``.

    Pinning sigma at 2/sqrt(3) in log(c a^2 s)^2 / s >= 4 pi (1/2 - 4a)^2 (g - 1)
    and solving for g - 1.
    """
    _check_alpha(alpha)
    ratio = math.log(SQRT3 / (2.0 * coefficient * alpha * alpha)) / (0.5 - 4.0 * alpha)
    return SQRT3 / (8.0 * math.pi) * ratio * ratio


def loewner_objective(alpha: float) -> float:
    return packing_objective(alpha, 2.0)


def loewner_genus_threshold(n_grid: int = DEFAULT_GRID, tol: float = DEFAULT_PARAM_TOL) -> ThresholdReport:
    search = grid_golden_min(loewner_objective, 0.0, ALPHA_MAX, n_grid, tol)
    # an un-Loewner surface has g - 1 <= objective_min
    threshold = math.floor(search.fx) + 2
    return ThresholdReport(search.fx, search.x, threshold, tuple(zip(search.grid, search.values)))


def packing_coefficient(ball_count: int) -> float:
    """Average disk-area coefficient when 15 of the disks reach 3 r^2 and the rest 2 r^2."""
    if ball_count < LOOP_DISKS:
        raise DomainError(f"packing has fewer than {LOOP_DISKS} disks: {ball_count}")
    return (3.0 * LOOP_DISKS + 2.0 * (ball_count - LOOP_DISKS)) / ball_count


def _ball_count(coefficient: float, alpha: float) -> int:
    # unit systole and sigma = 2/sqrt(3) give area sqrt(3)/2
    return math.floor(1.0 / (coefficient * alpha * alpha * LOEWNER))


def improved_packing_fixed_point(alpha: float, max_iter: int = 100) -> PackingFixedPoint:
    _check_alpha(alpha)
    if 2.0 * LOOP_DISKS * alpha > 1.0 + 1e-12:
        raise DomainError(
            f"{LOOP_DISKS} disjoint disks of radius {alpha} do not fit along a unit-systole loop"
        )
    n = _ball_count(2.0, alpha)
    previous = None
    for it in range(1, max_iter + 1):
        c = packing_coefficient(n)
        nxt = _ball_count(c, alpha)
        if nxt == n:
            return PackingFixedPoint(alpha, n, c, packing_objective(alpha, c), it)
        previous, n = n, nxt
    raise DomainError(
        f"ball count iteration did not converge after {max_iter} steps; last iterates {previous}, {n}"
    )


def gromov_loewner_crossover(limit: int = 10_000) -> int:
    """First genus whose Gromov genus bound lies strictly below the Loewner constant."""
    for g in range(1, limit + 1):
        if gromov_genus_bound(g) < LOEWNER:
            return g
    raise DomainError(f"no crossover below genus {limit}")


# ---------------------------------------------------------------------------


def asymptotic_pair(lam: float) -> AdmissiblePair:
    if lam >= math.pi:
        raise DomainError(f"lambda = {lam} exceeds asymptotic constant pi")
    if not lam > 0.0:
        raise DomainError(f"lambda must be positive, got {lam}")
    lam_plus = 0.5 * (lam + math.pi)
    beta = math.sqrt(lam_plus / (4.0 * math.pi))
    alpha = 0.9 * (0.5 - beta) / 4.0
    return AdmissiblePair(alpha, beta)


def _asymptotic_holds(pair: AdmissiblePair, lam: float, log_g: float) -> bool:
    # sigma_upper(g) <= log(g)^2 / (lam g), compared in logs
    log_gm1 = log_g + math.log1p(-math.exp(-log_g))
    log_sigma = min(math.log(GROMOV_ASPHERICAL), log_corollary_root(pair.alpha, pair.beta, log_gm1))
    return log_sigma <= 2.0 * math.log(log_g) - math.log(lam) - log_g


def _window_holds(pair, lam, g: int, samples: int) -> bool:
    log_g = math.log(g)
    step = math.log(100.0) / (samples - 1)
    return all(_asymptotic_holds(pair, lam, log_g + i * step) for i in range(samples))


def asymptotic_genus(lam: float, samples: int = 9, linear_scan: int = 1000) -> int:
    """Smallest genus from which the bound log(g)^2/(lam g) holds over [g, 100 g].

    Genera up to ``linear_scan`` are checked one by one; beyond that the
    search doubles (then squares) g and bisects, assuming the property
    persists once it holds.
    """
    pair = asymptotic_pair(lam)
    for g in range(2, linear_scan + 1):
        if _window_holds(pair, lam, g, samples):
            return g
    lo, hi = linear_scan, 2 * linear_scan
    while not _window_holds(pair, lam, hi, samples):
        lo = hi
        hi = hi * 2 if hi < 2**64 else hi * hi
        if hi.bit_length() > 1 << 16:
            raise DomainError(f"no asymptotic genus found below 2^{1 << 16} for lambda {lam}")
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _window_holds(pair, lam, mid, samples):
            hi = mid
        else:
            lo = mid
    return hi


def crossover_genus(n_grid: int = DEFAULT_GRID, limit: int = 10_000) -> CrossoverReport:
    """First genus where the optimized (unclamped) entropy bound beats Gromov's genus bound.

    The 4/3 clamp is left off: with it the comparison is decided at g = 2 by the
    clamp alone, since Gromov's genus bound exceeds 4/3 up to g = 27.
    """
    for g in range(2, limit + 1):
        value, pair = best_sigma_upper(g, n_grid, clamp=False)
        gromov = gromov_genus_bound(g)
        if value < gromov:
            return CrossoverReport(g, value, gromov, pair)
    raise DomainError(f"no crossover below genus {limit}")
