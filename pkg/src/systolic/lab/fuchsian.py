"""Closed hyperbolic surfaces as Fuchsian groups, and orbit counting in the universal cover.

Group elements are real SL(2, R) matrices acting on the upper half-plane.
Points are given in the Poincare disk and moved to the half-plane by the
Cayley map w -> i(1 + w)/(1 - w), so the disk origin sits at i.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from ..errors import DomainError, EnumerationError

log = logging.getLogger(__name__)

HASH_DECIMALS = 6
ZERO_TOL = 1e-6
RELATOR_TOL = 1e-6


@dataclass(frozen=True, eq=False)
class HyperbolicIsometry:
    m: np.ndarray

    def __post_init__(self):
        m = np.array(self.m, dtype=float).reshape(2, 2)
        det = np.linalg.det(m)
        if not det > 0:
            raise DomainError(f"not orientation preserving: det = {det}")
        m = m / math.sqrt(det)
        m.setflags(write=False)
        object.__setattr__(self, "m", m)

    def __matmul__(self, other: "HyperbolicIsometry") -> "HyperbolicIsometry":
        return HyperbolicIsometry(self.m @ other.m)

    def inverse(self) -> "HyperbolicIsometry":
        (a, b), (c, d) = self.m
        return HyperbolicIsometry(np.array([[d, -b], [-c, a]]))

    @property
    def trace(self) -> float:
        return float(self.m[0, 0] + self.m[1, 1])

    def is_hyperbolic(self) -> bool:
        return abs(self.trace) > 2.0

    def key(self) -> tuple:
        return tuple(_projective_keys(self.m[None])[0][0].tolist())

    def __eq__(self, other):
        if not isinstance(other, HyperbolicIsometry):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"HyperbolicIsometry({self.m.tolist()!r})"


IDENTITY = HyperbolicIsometry(np.eye(2))


def translation_length(g: HyperbolicIsometry) -> float:
    """Length of the closed geodesic of ``g``: 2 arccosh(|tr|/2), zero unless hyperbolic."""
    t = abs(g.trace)
    return 2.0 * math.acosh(t / 2.0) if t > 2.0 else 0.0


def disk_to_half_plane(w: complex) -> complex:
    if not abs(w) < 1:
        raise DomainError(f"point {w} is not inside the unit disk")
    return 1j * (1 + w) / (1 - w)


def rotation_about(theta: float) -> HyperbolicIsometry:
    """Rotation by ``theta`` about the disk origin."""
    c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
    return HyperbolicIsometry(np.array([[c, s], [-s, c]]))


def translation_through_origin(length: float) -> HyperbolicIsometry:
    """Translation by ``length`` along a geodesic through the disk origin."""
    return HyperbolicIsometry(np.diag([math.exp(length / 2.0), math.exp(-length / 2.0)]))


def displacement(mats: np.ndarray, z: complex) -> np.ndarray:
    """Hyperbolic distance from z to g(z), for a stack of matrices."""
    mats = np.asarray(mats)
    a, b, c, d = mats[..., 0, 0], mats[..., 0, 1], mats[..., 1, 0], mats[..., 1, 1]
    gz = (a * z + b) / (c * z + d)
    cosh_d = 1.0 + np.abs(z - gz) ** 2 / (2.0 * z.imag * gz.imag)
    return np.arccosh(np.maximum(cosh_d, 1.0))


@dataclass(frozen=True)
class FuchsianSurface:
    generators: tuple
    relator: tuple
    genus: int
    basepoint: complex = 0j
    name: str = ""

    def __post_init__(self):
        gens = tuple(g if isinstance(g, HyperbolicIsometry) else HyperbolicIsometry(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        for i, g in enumerate(gens):
            if not g.is_hyperbolic():
                raise DomainError(f"generator {i} is not hyperbolic (trace {g.trace})")
        r = self.evaluate(self.relator)
        if not (np.allclose(r, np.eye(2), atol=RELATOR_TOL) or np.allclose(r, -np.eye(2), atol=RELATOR_TOL)):
            raise DomainError(f"relator does not evaluate to the identity: {r.tolist()}")

    @property
    def alphabet(self) -> np.ndarray:
        """Generators followed by their inverses; letter i + k inverts letter i."""
        gens = [g.m for g in self.generators]
        invs = [g.inverse().m for g in self.generators]
        return np.array(gens + invs)

    def evaluate(self, word) -> np.ndarray:
        letters = self.alphabet
        m = np.eye(2)
        for i in word:
            m = m @ letters[i]
        return m

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus

    @property
    def area(self) -> float:
        # Gauss-Bonnet for curvature -1
        return 2.0 * math.pi * abs(self.euler_characteristic)

    @property
    def base_half_plane(self) -> complex:
        return disk_to_half_plane(self.basepoint)

    def conjugate(self, h: HyperbolicIsometry) -> "FuchsianSurface":
        hinv = h.inverse()
        gens = tuple(h @ g @ hinv for g in self.generators)
        return FuchsianSurface(gens, self.relator, self.genus, self.basepoint, self.name)

    def permuted(self, order) -> "FuchsianSurface":
        """The same group with generators listed in ``order``; the relator is relabeled."""
        k = len(self.generators)
        where = {old: new for new, old in enumerate(order)}
        relabel = tuple(where[i % k] + (k if i >= k else 0) for i in self.relator)
        gens = tuple(self.generators[i] for i in order)
        return FuchsianSurface(gens, relabel, self.genus, self.basepoint, self.name)


def bolza_surface() -> FuchsianSurface:
    """Genus-2 surface glued from the regular octagon with interior angles pi/4.

    Opposite sides are paired by translations of length 2 arccosh(1 + sqrt 2)
    through the octagon's center, rotated by multiples of pi/4.
    """
    length = 2.0 * math.acosh(1.0 + math.sqrt(2.0))
    t = translation_through_origin(length)
    gens = []
    for k in range(4):
        r = rotation_about(k * math.pi / 4.0)
        gens.append(r @ t @ r.inverse())
    # g0 g1^-1 g2 g3^-1 g0^-1 g1 g2^-1 g3
    relator = (0, 5, 2, 7, 4, 1, 6, 3)
    return FuchsianSurface(tuple(gens), relator, genus=2, name="bolza")


# ---------------------------------------------------------------------------
# enumeration


def _projective_keys(mats: np.ndarray):
    """Rounded-entry keys on two grids offset by half a cell, after fixing the sign of m ~ -m."""
    v = mats.reshape(-1, 4)
    first = np.argmax(np.abs(v) > ZERO_TOL, axis=1)
    sign = np.sign(v[np.arange(v.shape[0]), first])
    sign[sign == 0] = 1.0
    v = v * sign[:, None] * 10.0**HASH_DECIMALS
    return np.rint(v).astype(np.int64), np.floor(v).astype(np.int64)


@dataclass
class _ProjectiveIndex:
    """Tolerant set of matrices up to sign.

    Two numerically equal matrices share a key on at least one of the two
    grids unless they straddle cell boundaries on both, which needs errors
    comparable to the cell size.  A key hit on one grid with a different
    element on the other grid is an inconsistency and aborts.
    """

    round_keys: dict = field(default_factory=dict)
    floor_keys: dict = field(default_factory=dict)
    size: int = 0
    straddles: int = 0

    def insert_many(self, mats: np.ndarray) -> np.ndarray:
        ka, kb = _projective_keys(mats)
        new = np.zeros(mats.shape[0], dtype=bool)
        for i, (a, b) in enumerate(zip(map(tuple, ka.tolist()), map(tuple, kb.tolist()))):
            ia = self.round_keys.get(a)
            ib = self.floor_keys.get(b)
            if ia is None and ib is None:
                self.round_keys[a] = self.floor_keys[b] = self.size
                self.size += 1
                new[i] = True
            elif ia is not None and ib is not None:
                if ia != ib:
                    raise EnumerationError(
                        f"projective hash collision: keys of one matrix point to elements {ia} and {ib}; "
                        f"entries {mats[i].ravel().tolist()}"
                    )
            else:
                self.straddles += 1
                idx = ia if ia is not None else ib
                if ia is None:
                    self.round_keys[a] = idx
                else:
                    self.floor_keys[b] = idx
        return new


@dataclass(frozen=True)
class GroupBall:
    """Distinct group elements reached by BFS over words, in order of discovery."""

    matrices: np.ndarray
    word_length: np.ndarray
    displacement: np.ndarray
    layer_sizes: tuple
    straddles: int
    exhausted: bool

    def __len__(self):
        return self.matrices.shape[0]

    def __iter__(self):
        return (HyperbolicIsometry(m) for m in self.matrices)

    def elements(self) -> set:
        return set(self)


def _bfs(surf: FuchsianSurface, depth: int, max_displacement=None, on_layer=None) -> GroupBall:
    letters = surf.alphabet
    k = len(surf.generators)
    z0 = surf.base_half_plane
    index = _ProjectiveIndex()
    start = np.eye(2)[None]
    index.insert_many(start)
    mats, lengths, disp = [start], [np.zeros(1, dtype=int)], [np.zeros(1)]
    frontier, last = start, np.array([-1])
    layer_sizes = [1]
    n_letters = letters.shape[0]
    for d in range(1, depth + 1):
        # no renormalization by the computed determinant: its cancellation error
        # grows like eps*|m|^2 and would split equal elements
        cand = np.einsum("nij,gjk->ngik", frontier, letters).reshape(-1, 2, 2)
        cand_last = np.tile(np.arange(n_letters), frontier.shape[0])
        parent_last = np.repeat(last, n_letters)
        keep = (parent_last < 0) | (cand_last != (parent_last + k) % n_letters)
        dcand = displacement(cand, z0)
        if max_displacement is not None:
            keep &= dcand <= max_displacement
        cand, dcand, cand_last = cand[keep], dcand[keep], cand_last[keep]
        new = index.insert_many(cand)
        frontier, last = cand[new], cand_last[new]
        mats.append(frontier)
        lengths.append(np.full(frontier.shape[0], d))
        disp.append(dcand[new])
        layer_sizes.append(frontier.shape[0])
        if on_layer is not None and on_layer(d, np.concatenate(disp)):
            break
        if frontier.shape[0] == 0:
            break
    if index.straddles:
        log.debug("projective hash: %d near-boundary matches resolved on the offset grid", index.straddles)
    return GroupBall(
        np.concatenate(mats),
        np.concatenate(lengths),
        np.concatenate(disp),
        tuple(layer_sizes),
        index.straddles,
        frontier.shape[0] == 0,
    )


def enumerate_ball(surf: FuchsianSurface, depth: int) -> GroupBall:
    """All distinct elements given by words of length <= depth in generators and inverses."""
    if depth < 0:
        raise DomainError(f"depth must be nonnegative, got {depth}")
    return _bfs(surf, depth)


def fuchsian_systole(surf: FuchsianSurface, depth: int = 4) -> float:
    if depth < 2:
        raise DomainError(f"depth must be at least 2, got {depth}")
    ball = enumerate_ball(surf, depth)
    traces = np.abs(ball.matrices[1:, 0, 0] + ball.matrices[1:, 1, 1])
    hyperbolic = traces[traces > 2.0 + 1e-9]
    if hyperbolic.size == 0:
        raise DomainError("no hyperbolic element found")
    return float(2.0 * np.arccosh(hyperbolic.min() / 2.0))
