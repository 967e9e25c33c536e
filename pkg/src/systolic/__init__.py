"""Systolic ratio, volume entropy and isoembolic bounds for surfaces and manifolds."""

from .bounds import (
    AdmissiblePair,
    BallGrowthConstant,
    BoundRecord,
    GenusClass,
    SystolicRatio,
    classical_bounds,
    corollary_residual,
    entropy_upper,
    entropy_upper_isoembolic,
    extremal_disk_area_lower,
    katok_entropy_lower,
    sphere_isoembolic,
)
from .errors import DomainError
from .inversion import (
    BoundCurve,
    Bracket,
    MinEntValue,
    best_sigma_upper,
    bound_curve,
    emb_lower_bound,
    invert_rho_log_rho,
    invert_scaled_log,
    sigma_upper,
    solve_monotone,
)
from .thresholds import (
    asymptotic_genus,
    crossover_genus,
    improved_packing_fixed_point,
    loewner_genus_threshold,
    loewner_objective,
)

__version__ = "0.1.0"
