"""Flat tori as plane lattices: reduction, systole, lattice-point counts, disk packings."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import DomainError

DEGENERACY_TOL = 1e-12


@dataclass(frozen=True)
class Lattice2:
    b1: tuple
    b2: tuple

    def __post_init__(self):
        object.__setattr__(self, "b1", tuple(float(x) for x in self.b1))
        object.__setattr__(self, "b2", tuple(float(x) for x in self.b2))
        n1, n2 = math.hypot(*self.b1), math.hypot(*self.b2)
        if not abs(self.det) > DEGENERACY_TOL * n1 * n2:
            raise DomainError(f"degenerate basis {self.b1}, {self.b2} (det = {self.det:.3e})")

    @property
    def det(self) -> float:
        return self.b1[0] * self.b2[1] - self.b1[1] * self.b2[0]

    @property
    def area(self) -> float:
        return abs(self.det)

    def matrix(self) -> np.ndarray:
        """Basis vectors as rows."""
        return np.array([self.b1, self.b2])

    @classmethod
    def hexagonal(cls, scale: float = 1.0) -> "Lattice2":
        return cls((scale, 0.0), (0.5 * scale, 0.5 * math.sqrt(3.0) * scale))

    @classmethod
    def square(cls, scale: float = 1.0) -> "Lattice2":
        return cls((scale, 0.0), (0.0, scale))


def _dot(u, v) -> float:
    return u[0] * v[0] + u[1] * v[1]


def lattice_reduce(lat: Lattice2) -> Lattice2:
    """Lagrange-Gauss reduction: |b1| <= |b2| <= |b2 - b1| and |b2 + b1|."""
    # swaps need a relative gain beyond round-off, so equal-length bases stay put
    tol = 1e-12
    u, v = lat.b1, lat.b2
    if _dot(u, u) > _dot(v, v) * (1 + tol):
        u, v = v, u
    for _ in range(10_000):
        k = round(_dot(u, v) / _dot(u, u))
        v = (v[0] - k * u[0], v[1] - k * u[1])
        if _dot(v, v) >= _dot(u, u) * (1 - tol):
            break
        u, v = v, u
    else:
        raise DomainError("lattice reduction did not terminate")
    # sign convention: the second vector makes an acute angle with the first
    if _dot(u, v) < 0:
        v = (-v[0], -v[1])
    return Lattice2(u, v)


@dataclass(frozen=True)
class FlatInvariants:
    sys: float
    area: float
    ratio: float


def flat_invariants(lat: Lattice2) -> FlatInvariants:
    red = lattice_reduce(lat)
    sys = math.hypot(*red.b1)
    area = lat.area
    return FlatInvariants(sys, area, sys * sys / area)


def _coefficient_box(lat: Lattice2, radius: float):
    # |m| = |det(v, b2)| / area <= |v| |b2| / area, likewise for n
    n1, n2 = math.hypot(*lat.b1), math.hypot(*lat.b2)
    m_max = int(math.floor(radius * n2 / lat.area)) + 1
    n_max = int(math.floor(radius * n1 / lat.area)) + 1
    return m_max, n_max


def lattice_points(lat: Lattice2, radius: float) -> np.ndarray:
    """All lattice vectors of length <= radius (inclusive up to 1e-12 relative slack)."""
    if radius < 0:
        raise DomainError(f"radius must be nonnegative, got {radius}")
    m_max, n_max = _coefficient_box(lat, radius)
    m, n = np.meshgrid(np.arange(-m_max, m_max + 1), np.arange(-n_max, n_max + 1), indexing="ij")
    coeffs = np.stack([m.ravel(), n.ravel()], axis=1)
    vecs = coeffs @ lat.matrix()
    keep = np.einsum("ij,ij->i", vecs, vecs) <= radius * radius * (1 + 1e-12)
    return vecs[keep]


def flat_orbit_count(lat: Lattice2, radius: float) -> int:
    return int(lattice_points(lat, radius).shape[0])


def torus_distance(lat: Lattice2, points: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Distance on R^2/lattice from ``x`` to each row of ``points``; assumes a reduced basis."""
    shifts = np.array([(i, j) for i in range(-2, 3) for j in range(-2, 3)]) @ lat.matrix()
    diff = points[:, None, :] - x[None, None, :] + shifts[None, :, :]
    return np.sqrt(np.min(np.einsum("ijk,ijk->ij", diff, diff), axis=1))


@dataclass(frozen=True)
class PackingResult:
    count: int
    bound: float
    centers: np.ndarray
    radius: float
    candidates: np.ndarray


def maximal_packing_flat(lat: Lattice2, alpha: float) -> PackingResult:
    """Greedy maximal packing by disks of radius alpha*sys on a deterministic candidate grid.

    Candidates have pitch alpha*sys/8 along each reduced basis direction and
    are scanned row by row; a candidate is kept when it is at torus distance
    >= 2*alpha*sys from every kept center.
    """
    if not 0.0 < alpha < 0.25:
        raise DomainError(f"alpha must lie in (0, 1/4), got {alpha}")
    red = lattice_reduce(lat)
    inv = flat_invariants(red)
    r = alpha * inv.sys
    pitch = r / 8.0
    n1 = math.ceil(math.hypot(*red.b1) / pitch)
    n2 = math.ceil(math.hypot(*red.b2) / pitch)
    s, t = np.meshgrid(np.arange(n2) / n2, np.arange(n1) / n1, indexing="ij")
    candidates = np.stack([t.ravel(), s.ravel()], axis=1) @ red.matrix()
    centers = np.empty((0, 2))
    for x in candidates:
        if centers.shape[0] == 0 or torus_distance(red, centers, x).min() >= 2.0 * r * (1 - 1e-12):
            centers = np.vstack([centers, x])
    bound = inv.area / (math.pi * r * r)
    return PackingResult(centers.shape[0], bound, centers, r, candidates)
