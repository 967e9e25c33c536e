"""The invariant suite behind ``verify all``.

Each check returns (passed, detail).  Details hold only computed values, never
timings, so that two runs print identical bytes.
"""

from __future__ import annotations

import math
from typing import Callable, List, Tuple

import numpy as np

from . import bounds, inversion, thresholds
from .bounds import LOEWNER, AdmissiblePair, BallGrowthConstant
from .errors import DomainError
from .lab import counting, flat, fuchsian, orbits

Check = Tuple[str, Callable[[bool], Tuple[bool, str]]]

SEED = 20041012


def _loewner_objective(quick):
    v = thresholds.loewner_objective(0.031)
    return abs(v - 18.20) <= 0.01, f"objective(0.031) = {v:.6f}"


def _loewner_threshold(quick):
    r = thresholds.loewner_genus_threshold()
    ok = 18.1 <= r.objective_min <= 18.3 and r.genus_threshold == 20
    ok &= 18 <= r.objective_min < 19
    return ok, f"min = {r.objective_min:.6f} at alpha = {r.argmin_alpha:.6f}; threshold {r.genus_threshold}"


def _improved_packing(quick):
    p = thresholds.improved_packing_fixed_point(1.0 / 30.0)
    ok = abs(p.ball_count - 382) <= 1 and abs(p.coefficient - 2.039) <= 0.002
    ok &= abs(p.objective - 18.12) <= 0.02
    ok &= p.objective < thresholds.loewner_genus_threshold().objective_min
    return ok, f"N = {p.ball_count}, c = {p.coefficient:.6f}, objective = {p.objective:.6f}"


def _gromov_crossover(quick):
    g = thresholds.gromov_loewner_crossover()
    b50, b51 = bounds.gromov_genus_bound(50), bounds.gromov_genus_bound(51)
    ok = g == 51 and b50 >= LOEWNER > b51
    return ok, f"first genus {g}; bound(50) = {b50:.6f}, bound(51) = {b51:.6f}"


def _flat_loewner(quick):
    hexr = flat.flat_invariants(flat.Lattice2.hexagonal()).ratio
    rng = np.random.default_rng(SEED)
    n = 1000 if quick else 10_000
    worst = 0.0
    for _ in range(n):
        b = rng.normal(size=4)
        try:
            lat = flat.Lattice2(b[:2], b[2:])
        except DomainError:
            continue
        worst = max(worst, flat.flat_invariants(lat).ratio)
    ok = abs(hexr - LOEWNER) <= 1e-12 and worst <= LOEWNER + 1e-12
    return ok, f"hexagonal ratio {hexr:.15f}; max over {n} random lattices {worst:.12f}"


def _bolza_systole(quick):
    s = fuchsian.bolza_surface()
    exact = 2.0 * math.acosh(1.0 + math.sqrt(2.0))
    d_hi = 5 if quick else 6
    s4, s_hi = fuchsian.fuchsian_systole(s, 4), fuchsian.fuchsian_systole(s, d_hi)
    ok = abs(s4 - exact) <= 1e-9 and abs(s_hi - s4) <= 1e-9
    return ok, f"depth 4: {s4:.12f}; depth {d_hi}: {s_hi:.12f}"


def _bolza_growth_series(quick):
    # genus-2 surface group in its octagon generators: (1+2t+2t^2+2t^3+t^4)/(1-6t-6t^2-6t^3+t^4)
    depth = 5 if quick else 6
    num, den = [1, 2, 2, 2, 1], [1, -6, -6, -6, 1]
    series = []
    for n in range(depth + 1):
        v = (num[n] if n < len(num) else 0) - sum(den[k] * series[n - k] for k in range(1, min(n, 4) + 1))
        series.append(v)
    ball = fuchsian.enumerate_ball(fuchsian.bolza_surface(), depth)
    ok = list(ball.layer_sizes) == series
    return ok, f"sphere sizes {list(ball.layer_sizes)}"


def _bolza_entropy(quick):
    s = fuchsian.bolza_surface()
    fit = orbits.orbit_entropy(s, 7.0)
    k = orbits.katok_check(s, 7.0)
    ok = 0.85 <= fit.slope <= 1.10 and 0.72 <= k <= 1.21 and abs(k - fit.slope**2) <= 1e-12
    ok &= not fit.saturated_depth_flag
    return ok, f"slope {fit.slope:.6f}, katok ratio {k:.6f}, count(7) = {fit.table.counts[-1]}"


def _rho_log_rho(quick):
    deltas = np.geomspace(math.e**2, 1e9, 50 if quick else 200)
    worst, ok = 0.0, True
    for d in deltas:
        r = inversion.invert_rho_log_rho(float(d))
        worst = max(worst, abs(r * math.log(r) - d) / d)
        ok &= r >= d / math.log(d)
    ok &= worst <= 1e-9
    return ok, f"{len(deltas)} deltas; max relative residual {worst:.3e}"


def _asymptotic_trend(quick):
    genera = [10**3, 10**4, 10**5, 10**6, 10**8]
    ratios = []
    for g in genera:
        v, _ = inversion.best_sigma_upper(g)
        ratios.append(v * math.pi * g / math.log(g) ** 2)
    ok = all(b < a for a, b in zip(ratios, ratios[1:]))
    return ok, "ratios " + ", ".join(f"{r:.6f}" for r in ratios)


def _homotopy_counts(quick):
    pair = AdmissiblePair(0.1, 0.09)
    sq = counting.homotopy_count_check(flat.Lattice2.square(), pair, math.pi, range(1, 21))
    hx = counting.homotopy_count_check(flat.Lattice2.hexagonal(), pair, math.pi, range(1, 21))
    bz = counting.homotopy_count_check(fuchsian.bolza_surface(), AdmissiblePair(0.05, 0.29), math.pi, [2, 4, 6])
    counts = {r.T: r.count for r in sq.rows}
    ok = sq.passed and hx.passed and bz.passed and counts[5.0] == 81 and counts[10.0] == 317
    bolza = ", ".join(f"{r.count}" for r in bz.rows)
    return ok, f"square P'(5) = {counts[5.0]}, P'(10) = {counts[10.0]}; bolza counts {bolza}"


def _flat_packing(quick):
    p = flat.maximal_packing_flat(flat.Lattice2.square(), 0.1)
    ok = 25 <= p.count <= 31 and abs(p.bound - 1.0 / (math.pi * 0.01)) <= 1e-9
    return ok, f"greedy count {p.count}, bound {p.bound:.6f}"


def _berger_floor(quick):
    s2, s3 = bounds.sphere_isoembolic(2), bounds.sphere_isoembolic(3)
    floor = inversion.emb_lower_bound(inversion.MinEntValue(0.0, 2), BallGrowthConstant(1.0, 2)).value
    ok = abs(s2 - 4 / math.pi) <= 1e-15 and abs(s3 - 2 / math.pi) <= 1e-15 and floor == s2
    return ok, f"Emb(S^2) = {s2:.15f}, Emb(S^3) = {s3:.15f}, floor {floor:.15f}"


def _katok_identity(quick):
    worst = 0.0
    for g in range(2, 40):
        for area in (0.5, 1.0, 4 * math.pi, 100.0):
            h = bounds.katok_entropy_lower(g, area)
            worst = max(worst, abs(h * h * area / (2 * math.pi * (2 * g - 2)) - 1))
    return worst <= 1e-12, f"max relative deviation {worst:.3e}"


def _corollary_root(quick):
    pair = AdmissiblePair(0.05, 0.29)
    worst, ok = 0.0, True
    for g in (2, 5, 20, 101, 1001, 10**5):
        s = inversion.corollary_root(pair, g)
        target = 4 * math.pi * pair.beta**2 * (g - 1)
        worst = max(worst, abs(bounds.corollary_residual(pair, g, s)) / target)
        ok &= bounds.corollary_residual(pair, g, s / 2) > 0
        ok &= bounds.corollary_residual(pair, g, min(2 * s, 0.99 / (2 * pair.alpha**2))) < 0
    ok &= worst <= 1e-6
    return ok, f"max relative residual {worst:.3e}"


CHECKS: List[Check] = [
    ("loewner_objective", _loewner_objective),
    ("loewner_threshold", _loewner_threshold),
    ("improved_packing", _improved_packing),
    ("gromov_loewner_crossover", _gromov_crossover),
    ("flat_loewner", _flat_loewner),
    ("bolza_systole", _bolza_systole),
    ("bolza_growth_series", _bolza_growth_series),
    ("bolza_entropy", _bolza_entropy),
    ("rho_log_rho", _rho_log_rho),
    ("asymptotic_trend", _asymptotic_trend),
    ("homotopy_counts", _homotopy_counts),
    ("flat_packing", _flat_packing),
    ("berger_floor", _berger_floor),
    ("katok_identity", _katok_identity),
    ("corollary_root", _corollary_root),
]


def run_checks(quick: bool = False):
    results = []
    for name, fn in CHECKS:
        try:
            ok, detail = fn(quick)
        except DomainError as exc:
            ok, detail = False, f"error: {exc}"
        results.append((name, bool(ok), detail))
    return results
