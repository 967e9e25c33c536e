"""Turn the implicit systolic inequalities into explicit numbers.

Every root is found by bisection: the functions involved have unbounded
derivatives at the edges of their domains.  Optimization over admissible
pairs is a nested one-dimensional search, a coarse grid followed by
golden-section refinement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.optimize import bisect

from .bounds import (
    GROMOV_ASPHERICAL,
    AdmissiblePair,
    BallGrowthConstant,
    sphere_isoembolic,
)
from .errors import DomainError

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
DEFAULT_GRID = 64
DEFAULT_PARAM_TOL = 1e-10


@dataclass(frozen=True)
class Bracket:
    lo: float
    hi: float
    tol: float = 1e-12

    def __post_init__(self):
        if not self.lo < self.hi:
            raise DomainError(f"bracket invalid: lo = {self.lo} is not below hi = {self.hi}")
        if not self.tol > 0:
            raise DomainError(f"bracket tolerance must be positive, got {self.tol}")


def solve_monotone(f: Callable[[float], float], target: float, bracket: Bracket) -> float:
    """Bisect for ``x`` in the bracket with ``f(x) == target``; ``f`` must be strictly monotone."""
    flo = f(bracket.lo) - target
    fhi = f(bracket.hi) - target
    if not (math.isfinite(flo) and math.isfinite(fhi)):
        raise DomainError(f"bracket invalid: f is not finite at the endpoints ({flo}, {fhi})")
    if flo == 0.0:
        return bracket.lo
    if fhi == 0.0:
        return bracket.hi
    if (flo > 0) == (fhi > 0):
        raise DomainError(
            f"bracket invalid: no sign change of f - target on [{bracket.lo}, {bracket.hi}]"
        )
    return bisect(lambda x: f(x) - target, bracket.lo, bracket.hi, xtol=bracket.tol, maxiter=400)


def golden_section(f: Callable[[float], float], lo: float, hi: float, tol: float = DEFAULT_PARAM_TOL):
    """Minimize a unimodal ``f`` on the open interval (lo, hi); endpoints are never evaluated."""
    a, b = lo, hi
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    return (c, fc) if fc <= fd else (d, fd)


@dataclass(frozen=True)
class GridSearch:
    x: float
    fx: float
    grid: tuple
    values: tuple


def grid_golden_min(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    n_grid: int = DEFAULT_GRID,
    tol: float = DEFAULT_PARAM_TOL,
    f_grid: Optional[Callable[[np.ndarray], np.ndarray]] = None,
) -> GridSearch:
    """Coarse interior grid on (lo, hi), then golden section around the best grid point.

    Ties on the grid go to the smallest abscissa.  ``f_grid`` evaluates the
    whole grid at once when given.
    """
    xs = lo + (hi - lo) * np.arange(1, n_grid + 1) / (n_grid + 1)
    if f_grid is not None:
        fs = np.asarray(f_grid(xs), dtype=float)
    else:
        fs = np.array([f(float(x)) for x in xs])
    i = int(np.argmin(fs))
    a = float(xs[i - 1]) if i > 0 else lo
    b = float(xs[i + 1]) if i < n_grid - 1 else hi
    x, fx = golden_section(f, a, b, tol)
    if not fx <= fs[i]:
        x, fx = float(xs[i]), float(fs[i])
    return GridSearch(x, fx, tuple(xs.tolist()), tuple(fs.tolist()))


# ---------------------------------------------------------------------------
# systolic ratio bound for extremal surfaces
#
# With w = -log(2 a^2 s) > 0 the equation log(2 a^2 s)^2 / s = 4 pi b^2 (g-1)
# becomes w + 2 log w = log(4 pi b^2 (g-1)) - log(2 a^2), increasing in w.


def _w_bracket(t: float):
    lo = math.exp(min(t, 0.0) / 2.0 - 1.0)
    hi = max(t, 0.0) + 1.0
    return lo, hi


def _solve_w(t: float) -> float:
    lo, hi = _w_bracket(t)
    return solve_monotone(lambda w: w + 2.0 * math.log(w), t, Bracket(lo, hi, 1e-14))


def _solve_w_vec(t: np.ndarray, iterations: int = 80) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    lo = np.exp(np.minimum(t, 0.0) / 2.0 - 1.0)
    hi = np.maximum(t, 0.0) + 1.0
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        above = mid + 2.0 * np.log(mid) > t
        hi = np.where(above, mid, hi)
        lo = np.where(above, lo, mid)
    return 0.5 * (lo + hi)


def log_corollary_root(alpha: float, beta: float, log_genus_minus_one: float) -> float:
    """log of the unclamped systolic-ratio bound, taking log(g - 1) so that huge genera fit."""
    log_k = math.log(2.0 * alpha * alpha)
    t = math.log(4.0 * math.pi * beta * beta) + log_genus_minus_one - log_k
    return -log_k - _solve_w(t)


def _log_corollary_root_vec(alphas: np.ndarray, beta: float, log_genus_minus_one: float) -> np.ndarray:
    log_k = np.log(2.0 * alphas * alphas)
    t = math.log(4.0 * math.pi * beta * beta) + log_genus_minus_one - log_k
    return -log_k - _solve_w_vec(t)


def _log_gm1(genus: int) -> float:
    if genus < 2:
        raise DomainError(f"genus must be at least 2, got {genus}")
    return math.log(genus - 1)


def corollary_root(pair: AdmissiblePair, genus: int) -> float:
    """The systolic ratio at which the extremal-surface inequality becomes an equality."""
    return math.exp(log_corollary_root(pair.alpha, pair.beta, _log_gm1(genus)))


def sigma_upper(pair: AdmissiblePair, genus: int) -> float:
    return min(GROMOV_ASPHERICAL, corollary_root(pair, genus))


def _nested_search(objective, objective_grid, n_grid: int, tol: float):
    """Minimize objective(alpha, beta) over admissible pairs; returns (value, pair)."""

    def inner(beta: float) -> GridSearch:
        amax = (0.5 - beta) / 4.0
        grid = None if objective_grid is None else (lambda xs: objective_grid(xs, beta))
        return grid_golden_min(lambda a: objective(a, beta), 0.0, amax, n_grid, tol, grid)

    outer = grid_golden_min(lambda b: inner(b).fx, 0.0, 0.5, n_grid, tol)
    best_inner = inner(outer.x)
    return best_inner.fx, AdmissiblePair(best_inner.x, outer.x)


def best_sigma_upper(
    genus: int, n_grid: int = DEFAULT_GRID, tol: float = DEFAULT_PARAM_TOL, clamp: bool = True
):
    """Smallest systolic-ratio bound over admissible pairs, with the pair achieving it.

    The search runs on the unclamped bound so the optimizing pair stays
    meaningful at small genus; ``clamp`` then caps the value at 4/3.
    """
    lgm1 = _log_gm1(genus)
    log_sigma, pair = _nested_search(
        lambda a, b: log_corollary_root(a, b, lgm1),
        lambda alphas, b: _log_corollary_root_vec(alphas, b, lgm1),
        n_grid,
        tol,
    )
    value = math.exp(log_sigma)
    if clamp:
        value = min(GROMOV_ASPHERICAL, value)
    return value, pair


@dataclass(frozen=True)
class BoundEntry:
    genus: int
    sigma_upper: float
    best_pair: AdmissiblePair


@dataclass(frozen=True)
class BoundCurve:
    entries: tuple

    def genera(self):
        return [e.genus for e in self.entries]

    def values(self):
        return [e.sigma_upper for e in self.entries]


def bound_curve(genera: Sequence[int], n_grid: int = DEFAULT_GRID) -> BoundCurve:
    entries = []
    for g in sorted(genera):
        value, pair = best_sigma_upper(g, n_grid)
        entries.append(BoundEntry(g, value, pair))
    return BoundCurve(tuple(entries))


# ---------------------------------------------------------------------------
# x log x inversions


def invert_rho_log_rho(delta: float) -> float:
    """Root of rho*log(rho) = delta on the branch rho >= e."""
    if not delta >= math.e:
        raise DomainError(f"outside monotone range: delta = {delta} < e")
    hi = delta + math.e
    return solve_monotone(lambda r: r * math.log(r), delta, Bracket(math.e, hi, 1e-15 * hi))


def invert_scaled_log(a: float, delta: float) -> float:
    """Root of u*log(u/a) = delta on the branch u >= a*e."""
    if not a > 0:
        raise DomainError(f"scale must be positive, got {a}")
    if not delta / a >= math.e:
        raise DomainError(f"outside monotone range: delta/a = {delta / a} < e")
    lo = a * math.e
    hi = delta + lo
    return solve_monotone(lambda u: u * math.log(u / a), delta, Bracket(lo, hi, 1e-15 * hi))


# ---------------------------------------------------------------------------
# isoembolic ratio versus minimal entropy


@dataclass(frozen=True)
class MinEntValue:
    value: float
    dim: int = 2

    def __post_init__(self):
        if not self.value >= 0:
            raise DomainError(f"minimal entropy must be nonnegative, got {self.value}")


@dataclass(frozen=True)
class EmbBound:
    """Lower bound on the optimal isoembolic ratio.

    ``constant`` is the lambda with value = lambda * m^n / log(1+m)^n for the
    input entropy m; ``pair`` is None when the sphere floor is the binding bound.
    """

    value: float
    pair: Optional[AdmissiblePair]
    constant: Optional[float]
    from_entropy: float


def emb_lower_bound(
    minent: MinEntValue, growth: BallGrowthConstant, n_grid: int = DEFAULT_GRID
) -> EmbBound:
    # Normalizing inj = 1 and writing u = Emb^(1/n), the entropy bound gives
    # u log(u / (c^(1/n) alpha)) >= beta * MinEnt / n.
    n = minent.dim
    if n != growth.dim:
        raise DomainError(f"dimension mismatch: MinEnt in dim {n}, growth constant in dim {growth.dim}")
    floor = sphere_isoembolic(n)
    m = minent.value
    if m == 0:
        return EmbBound(floor, None, None, -math.inf)
    c_root = growth.c ** (1.0 / n)

    def neg_log_bound(alpha: float, beta: float) -> float:
        a = c_root * alpha
        delta = beta * m / n
        if not delta / a >= math.e:
            return math.inf
        return -n * math.log(invert_scaled_log(a, delta))

    neg, pair = _nested_search(neg_log_bound, None, n_grid, DEFAULT_PARAM_TOL)
    from_entropy = math.exp(-neg) if math.isfinite(neg) else -math.inf
    if from_entropy > floor:
        value, best = from_entropy, pair
    else:
        value, best = floor, None
    constant = value * math.log1p(m) ** n / m**n
    return EmbBound(value, best, constant, from_entropy)
