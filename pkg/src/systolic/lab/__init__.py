"""Concrete surfaces on which the counting machinery can be run: flat tori and Fuchsian groups."""

from .counting import CountReport, homotopy_count_check
from .flat import (
    Lattice2,
    flat_invariants,
    flat_orbit_count,
    lattice_reduce,
    maximal_packing_flat,
)
from .fuchsian import (
    FuchsianSurface,
    HyperbolicIsometry,
    bolza_surface,
    enumerate_ball,
    fuchsian_systole,
    translation_length,
)
from .orbits import EntropyFit, OrbitTable, flat_entropy, katok_check, orbit_entropy

__all__ = [
    "CountReport",
    "EntropyFit",
    "FuchsianSurface",
    "HyperbolicIsometry",
    "Lattice2",
    "OrbitTable",
    "bolza_surface",
    "enumerate_ball",
    "flat_entropy",
    "flat_invariants",
    "flat_orbit_count",
    "fuchsian_systole",
    "homotopy_count_check",
    "katok_check",
    "lattice_reduce",
    "maximal_packing_flat",
    "orbit_entropy",
    "translation_length",
]
