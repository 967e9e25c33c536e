"""Check the packing bound on the number of based homotopy classes against real counts.

A maximal packing by disks of radius alpha*sys with area >= c r^2 has at most
(c alpha^2 sigma)^-1 disks, and loops of length T deform into paths through
at most T/(beta sys) disk centers, so P'(T) <= (c alpha^2 sigma)^(-T/(beta sys)).
On a flat torus or a hyperbolic surface P'(T) is an orbit count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

from ..bounds import AdmissiblePair
from ..errors import CountBoundViolation, DomainError
from .flat import Lattice2, flat_invariants, flat_orbit_count
from .fuchsian import FuchsianSurface, fuchsian_systole
from .orbits import fuchsian_orbit_counts


@dataclass(frozen=True)
class CountRow:
    T: float
    count: int
    log_bound: float

    @property
    def log_margin(self) -> float:
        return self.log_bound - math.log(self.count)


@dataclass(frozen=True)
class CountReport:
    sys: float
    area: float
    sigma: float
    pair: AdmissiblePair
    c: float
    rows: tuple

    @property
    def passed(self) -> bool:
        return all(r.log_margin >= 0 for r in self.rows)


def homotopy_count_check(
    target: Union[Lattice2, FuchsianSurface],
    pair: AdmissiblePair,
    c: float,
    T_grid: Sequence[float],
    systole_depth: int = 4,
) -> CountReport:
    """Compare P'(T) with the packing bound for each T; raises on any violation.

    Bounds are compared in logs since they overflow floats for moderate T.
    """
    T_grid = [float(t) for t in T_grid]
    if not T_grid:
        raise DomainError("empty T grid")
    if min(T_grid) < 0:
        raise DomainError("lengths in the T grid must be nonnegative")
    if isinstance(target, Lattice2):
        inv = flat_invariants(target)
        sys, area = inv.sys, inv.area
        counts = [flat_orbit_count(target, t) for t in T_grid]
    elif isinstance(target, FuchsianSurface):
        sys, area = fuchsian_systole(target, systole_depth), target.area
        table, _, _ = fuchsian_orbit_counts(target, sorted(T_grid))
        counts = [table.count_at(t) for t in T_grid]
    else:
        raise TypeError(f"expected Lattice2 or FuchsianSurface, got {type(target).__name__}")
    sigma = sys * sys / area
    x = c * pair.alpha**2 * sigma
    if not 0 < x < 1:
        raise DomainError(f"bound vacuous: c*alpha^2*sigma = {x}")
    rows = tuple(
        CountRow(t, n, -t / (pair.beta * sys) * math.log(x)) for t, n in zip(T_grid, counts)
    )
    report = CountReport(sys, area, sigma, pair, c, rows)
    bad = [r.T for r in rows if r.log_margin < 0]
    if bad:
        raise CountBoundViolation(bad)
    return report
