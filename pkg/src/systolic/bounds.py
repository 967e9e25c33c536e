"""Closed-form systolic and entropy bounds for surfaces and n-manifolds.

All logarithms are natural.  Lengths are in units of the systole unless a
``sys`` argument says otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

LOEWNER = 2.0 / math.sqrt(3.0)
GROMOV_ASPHERICAL = 4.0 / 3.0
BALACHEFF_COEFF = 8.0 / (3.0 * math.log(2.0) ** 2)
BUSER_SARNAK_COEFF = 4.0 / (9.0 * math.pi)


@dataclass(frozen=True)
class AdmissiblePair:
    """Packing radius ``alpha`` and partition step ``beta``, both as fractions of the systole.

    The coarsened loops in the counting argument are contractible only when
    ``4*alpha + beta < 1/2``; construction enforces this strictly.
    """

    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.alpha > 0 and self.beta > 0):
            raise DomainError(f"alpha and beta must be positive, got ({self.alpha}, {self.beta})")
        if not 4.0 * self.alpha + self.beta < 0.5:
            raise DomainError(
                f"inadmissible pair: 4*alpha + beta = {4 * self.alpha + self.beta!r} is not below 1/2"
            )


@dataclass(frozen=True)
class GenusClass:
    genus: int
    orientable: bool = True

    def __post_init__(self):
        if self.genus < 1:
            raise DomainError(f"genus must be at least 1, got {self.genus}")

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus if self.orientable else 2 - self.genus


@dataclass(frozen=True)
class SystolicRatio:
    value: float

    def __post_init__(self):
        if not self.value > 0:
            raise DomainError(f"systolic ratio must be positive, got {self.value}")


@dataclass(frozen=True)
class BallGrowthConstant:
    """Lower bound ``vol B(r) >= c * r**dim`` for small balls."""

    c: float
    dim: int = 2

    def __post_init__(self):
        if not self.c > 0:
            raise DomainError(f"ball growth constant must be positive, got {self.c}")
        if self.dim < 2:
            raise DomainError(f"dimension must be at least 2, got {self.dim}")


EXTREMAL_SURFACE = BallGrowthConstant(2.0, 2)


@dataclass(frozen=True)
class BoundRecord:
    genus: int
    loewner: float
    gromov_aspherical: float
    gromov_genus: float
    buser_sarnak_lower: float
    balacheff_coeff: float
    asymptotic_upper: float


def _as_sigma(sigma) -> float:
    return sigma.value if isinstance(sigma, SystolicRatio) else float(sigma)


def katok_entropy_lower(genus: int, area: float) -> float:
    """Smallest volume entropy a metric of the given area on a genus-``genus`` surface can have."""
    if genus <= 1:
        raise DomainError(f"nonnegative Euler characteristic for genus {genus}")
    if not area > 0:
        raise DomainError(f"area must be positive, got {area}")
    return math.sqrt(2.0 * math.pi * abs(2 - 2 * genus) / area)


def gromov_genus_bound(genus: float) -> float:
    return 64.0 / (4.0 * math.sqrt(genus) + 27.0)


def classical_bounds(genus: int) -> BoundRecord:
    if genus <= 0:
        raise DomainError(f"genus must be positive, got {genus}")
    if genus == 1:
        buser_sarnak = asymptotic = 0.0
    else:
        lg2 = math.log(genus) ** 2 / genus
        buser_sarnak = BUSER_SARNAK_COEFF * lg2
        asymptotic = lg2 / math.pi
    return BoundRecord(
        genus=genus,
        loewner=LOEWNER,
        gromov_aspherical=GROMOV_ASPHERICAL,
        gromov_genus=gromov_genus_bound(genus),
        buser_sarnak_lower=buser_sarnak,
        balacheff_coeff=BALACHEFF_COEFF,
        asymptotic_upper=asymptotic,
    )


def extremal_disk_area_lower(r: float, sys: float) -> float:
    if not r > 0:
        raise DomainError(f"radius must be positive, got {r}")
    if r > sys / 2.0:
        raise DomainError(f"radius exceeds half-systole: r = {r}, sys = {sys}")
    return 2.0 * r * r


def corollary_residual(pair: AdmissiblePair, genus: int, sigma) -> float:
    """Left minus right side of the genus/systolic-ratio inequality for extremal metrics.

    ``log(2 a^2 s)^2 / s - 4 pi b^2 (g - 1)``.  A nonnegative value means ``sigma``
    is not excluded by the inequality.
    """
    s = _as_sigma(sigma)
    if genus < 2:
        raise DomainError(f"genus must be at least 2, got {genus}")
    if not s > 0:
        raise DomainError(f"systolic ratio must be positive, got {s}")
    x = 2.0 * pair.alpha**2 * s
    if x >= 1.0:
        raise DomainError(f"argument of log not below one: 2*alpha^2*sigma = {x}")
    return math.log(x) ** 2 / s - 4.0 * math.pi * pair.beta**2 * (genus - 1)


def entropy_upper(
    pair: AdmissiblePair, sys: float, sigma, growth: BallGrowthConstant = EXTREMAL_SURFACE
) -> float:
    """Upper bound on volume entropy from a maximal disk packing of radius ``alpha*sys``.

    With the default growth constant (c=2, n=2) this is the bound for
    systolically extremal surfaces.
    """
    s = _as_sigma(sigma)
    if not sys > 0:
        raise DomainError(f"systole must be positive, got {sys}")
    x = growth.c * pair.alpha**growth.dim * s
    if x >= 1.0:
        raise DomainError(f"bound vacuous: c*alpha^n*sigma = {x} >= 1")
    return -math.log(x) / (pair.beta * sys)


def entropy_upper_isoembolic(
    pair: AdmissiblePair, inj: float, emb: float, growth: BallGrowthConstant
) -> float:
    if not inj > 0:
        raise DomainError(f"injectivity radius must be positive, got {inj}")
    floor = growth.c * pair.alpha**growth.dim
    if not emb > floor:
        raise DomainError(f"bound vacuous: Emb = {emb} <= c*alpha^n = {floor}")
    return math.log(emb / floor) / (pair.beta * inj)


def sphere_volume(n: int) -> float:
    """Volume of the unit round n-sphere, 2 pi^((n+1)/2) / Gamma((n+1)/2)."""
    return 2.0 * math.pi ** ((n + 1) / 2.0) / math.gamma((n + 1) / 2.0)


def sphere_isoembolic(n: int) -> float:
    """vol/inj^n of the unit round n-sphere, whose injectivity radius is pi."""
    if n <= 0:
        raise DomainError(f"dimension must be positive, got {n}")
    return sphere_volume(n) / math.pi**n
