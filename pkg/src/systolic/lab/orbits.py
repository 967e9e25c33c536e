"""Orbit growth of the fundamental group and the volume entropy it measures."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import DomainError, EnumerationError
from .flat import Lattice2, lattice_points
from .fuchsian import FuchsianSurface, _bfs, displacement

DEFAULT_STEP = 0.1


@dataclass(frozen=True)
class OrbitTable:
    """Number of orbit points of the basepoint within distance R, for each R in the table."""

    radii: tuple
    counts: tuple

    def __post_init__(self):
        if len(self.radii) != len(self.counts):
            raise ValueError("radii and counts differ in length")
        if any(b < a for a, b in zip(self.counts, self.counts[1:])):
            raise ValueError("orbit counts must be nondecreasing in R")

    @property
    def rows(self):
        return list(zip(self.radii, self.counts))

    def count_at(self, radius: float) -> int:
        i = int(np.searchsorted(np.asarray(self.radii), radius * (1 + 1e-12), side="right")) - 1
        if i < 0:
            raise DomainError(f"radius {radius} below the table")
        return self.counts[i]


@dataclass(frozen=True)
class EntropyFit:
    slope: float
    window: tuple
    residual: float
    saturated_depth_flag: bool
    table: OrbitTable
    depth: int


def radius_grid(rmax: float, step: float = DEFAULT_STEP) -> np.ndarray:
    n = int(round(rmax / step))
    return np.linspace(0.0, rmax, n + 1)


def _table(distances: np.ndarray, radii) -> OrbitTable:
    d = np.sort(distances)
    radii = np.asarray(radii, dtype=float)
    counts = np.searchsorted(d, radii * (1 + 1e-12), side="right")
    return OrbitTable(tuple(radii.tolist()), tuple(int(c) for c in counts))


def fuchsian_orbit_counts(
    surf: FuchsianSurface, radii, max_depth: int = 60, slack=None, max_elements: int = 5_000_000
):
    """Orbit counts at each radius, growing word length until the count at max(radii) stabilizes.

    Words whose orbit point leaves the ball of radius max(radii) + ``slack``
    are not extended; the default slack is the largest generator
    displacement, which covers Dirichlet-domain side pairings.
    Returns (table, depth, saturated).
    """
    radii = np.asarray(radii, dtype=float)
    rmax = float(radii.max())
    if slack is None:
        slack = float(displacement(surf.alphabet, surf.base_half_plane).max())
    history = []

    def stop(depth, disp):
        history.append(int(np.count_nonzero(disp <= rmax * (1 + 1e-12))))
        if disp.size > max_elements:
            raise EnumerationError(
                f"orbit enumeration exceeded {max_elements} elements at depth {depth}",
                saturated_depth_flag=True,
            )
        return len(history) >= 2 and history[-1] == history[-2]

    ball = _bfs(surf, max_depth, max_displacement=rmax + slack, on_layer=stop)
    stabilized = len(history) >= 2 and history[-1] == history[-2]
    if not (stabilized or ball.exhausted):
        raise EnumerationError(
            f"orbit count at R = {rmax} still changing at depth {max_depth}: {history[-3:]}",
            saturated_depth_flag=True,
        )
    return _table(ball.displacement, radii), len(history), False


def fit_growth(table: OrbitTable, window) -> tuple:
    """Least-squares slope and RMS residual of log(count) against R over the window."""
    lo, hi = window
    r = np.asarray(table.radii)
    c = np.asarray(table.counts, dtype=float)
    sel = (r >= lo - 1e-12) & (r <= hi + 1e-12) & (c > 0)
    if sel.sum() < 2:
        raise DomainError(f"fewer than two table rows in window [{lo}, {hi}]")
    x, y = r[sel], np.log(c[sel])
    coef = np.polyfit(x, y, 1)
    resid = y - np.polyval(coef, x)
    return float(coef[0]), float(np.sqrt(np.mean(resid**2)))


def orbit_entropy(
    surf: FuchsianSurface, rmax: float, step: float = DEFAULT_STEP, max_depth: int = 60
) -> EntropyFit:
    if not rmax > 2:
        raise DomainError(f"Rmax must exceed 2, got {rmax}")
    table, depth, saturated = fuchsian_orbit_counts(surf, radius_grid(rmax, step), max_depth)
    window = (rmax / 2.0, rmax)
    slope, residual = fit_growth(table, window)
    return EntropyFit(max(slope, 0.0), window, residual, saturated, table, depth)


def flat_orbit_table(lat: Lattice2, rmax: float, step: float = DEFAULT_STEP) -> OrbitTable:
    pts = lattice_points(lat, rmax)
    return _table(np.hypot(pts[:, 0], pts[:, 1]), radius_grid(rmax, step))


def flat_entropy(lat: Lattice2, rmax: float, step: float = DEFAULT_STEP) -> EntropyFit:
    """Same fit as for hyperbolic surfaces; polynomial growth drives the slope toward zero."""
    table = flat_orbit_table(lat, rmax, step)
    window = (rmax / 2.0, rmax)
    slope, residual = fit_growth(table, window)
    return EntropyFit(max(slope, 0.0), window, residual, False, table, 0)


def katok_check(surf: FuchsianSurface, rmax: float, step: float = DEFAULT_STEP) -> float:
    """h^2 * area / (2 pi |chi|) for the fitted entropy h; Katok's inequality says this is >= 1."""
    if surf.genus < 2:
        raise DomainError(f"nonnegative Euler characteristic for genus {surf.genus}")
    fit = orbit_entropy(surf, rmax, step)
    return fit.slope**2 * surf.area / (2.0 * math.pi * abs(surf.euler_characteristic))
