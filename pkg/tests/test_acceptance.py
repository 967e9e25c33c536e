"""Acceptance gate: one test per criterion, each at its stated tolerance.

Every test records a PASS/FAIL line, printed as it runs (visible with ``-s``)
and again in the terminal summary.
"""

import io
import math
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from systolic.bounds import LOEWNER, BallGrowthConstant, gromov_genus_bound, sphere_isoembolic, AdmissiblePair
from systolic.cli import run
from systolic.errors import DomainError
from systolic.inversion import MinEntValue, best_sigma_upper, emb_lower_bound, invert_rho_log_rho
from systolic.lab.counting import homotopy_count_check
from systolic.lab.flat import Lattice2, flat_invariants, maximal_packing_flat
from systolic.lab.fuchsian import bolza_surface, fuchsian_systole
from systolic.lab.orbits import katok_check, orbit_entropy
from systolic.thresholds import (
    gromov_loewner_crossover,
    improved_packing_fixed_point,
    loewner_genus_threshold,
    loewner_objective,
)


def record(number, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {detail}"
    ACCEPTANCE_LINES[number] = line
    print(line)
    assert ok, line


def timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - t0


def test_criterion_01_loewner_objective():
    value = loewner_objective(0.031)
    reps = 1000
    t0 = time.perf_counter()
    for _ in range(reps):
        loewner_objective(0.031)
    per_call = (time.perf_counter() - t0) / reps
    ok = abs(value - 18.20) <= 0.01 and per_call < 1e-3
    record(1, ok, f"objective(0.031) = {value:.6f} (18.20 +- 0.01), {per_call * 1e6:.1f} us per call")


def test_criterion_02_loewner_threshold():
    report, secs = timed(loewner_genus_threshold)
    out = io.StringIO()
    code = run(["threshold", "loewner"], out, io.StringIO())
    last = out.getvalue().rstrip("\n").splitlines()[-1]
    ok = 18.1 <= report.objective_min <= 18.3 and report.genus_threshold == 20
    ok &= code == 0 and last == "genus_threshold: 20" and secs < 1.0
    record(2, ok, f"min {report.objective_min:.6f} in [18.1, 18.3], CLI '{last}', {secs:.3f} s")


def test_criterion_03_improved_packing():
    p, secs = timed(improved_packing_fixed_point, 1 / 30)
    ok = abs(p.ball_count - 382) <= 1
    ok &= abs(p.coefficient - 2.039) <= 0.002
    ok &= abs(p.objective - 18.12) <= 0.02
    ok &= secs < 1.0
    record(3, ok, f"N = {p.ball_count}, c = {p.coefficient:.6f}, objective = {p.objective:.6f}, {secs:.4f} s")


def test_criterion_04_gromov_crossover():
    g = gromov_loewner_crossover()
    b50, b51 = gromov_genus_bound(50), gromov_genus_bound(51)
    b51_direct = 64 / (4 * math.sqrt(51) + 27)
    ok = g == 51 and b50 >= LOEWNER > b51 and b51 == b51_direct
    record(4, ok, f"first genus below 2/sqrt3 is {g}; bound(50) = {b50:.6f}, bound(51) = {b51:.6f}")


def test_criterion_05_flat_loewner():
    hexr = flat_invariants(Lattice2.hexagonal()).ratio
    rng = np.random.default_rng(20041012)
    worst, n = 0.0, 0
    while n < 10_000:
        b = rng.normal(size=4)
        try:
            lat = Lattice2(b[:2], b[2:])
        except DomainError:
            continue
        n += 1
        worst = max(worst, flat_invariants(lat).ratio)
    ok = abs(hexr - LOEWNER) <= 1e-12 and worst <= LOEWNER + 1e-12
    record(5, ok, f"hexagonal ratio {hexr:.15f}; max over {n} random lattices {worst:.12f}")


def test_criterion_06_bolza_systole():
    exact = 2 * math.acosh(1 + math.sqrt(2))
    surf = bolza_surface()
    s4 = fuchsian_systole(surf, 4)
    s6, secs = timed(fuchsian_systole, surf, 6)
    ok = abs(s4 - exact) <= 1e-9 and abs(s6 - exact) <= 1e-9 and secs < 30
    record(6, ok, f"depth 4: {s4:.12f}, depth 6: {s6:.12f} (exact {exact:.12f}), depth 6 in {secs:.2f} s")


def test_criterion_07_bolza_entropy():
    surf = bolza_surface()
    t0 = time.perf_counter()
    fit = orbit_entropy(surf, 7.0)
    k = katok_check(surf, 7.0)
    secs = time.perf_counter() - t0
    ok = 0.85 <= fit.slope <= 1.10 and not fit.saturated_depth_flag
    ok &= abs(k - fit.slope**2) <= 1e-12 and 0.72 <= k <= 1.21 and secs < 120
    record(7, ok, f"slope {fit.slope:.6f}, katok {k:.6f}, stabilized at depth {fit.depth}, {secs:.2f} s")


def test_criterion_08_rho_log_rho():
    deltas = np.geomspace(math.e**2, 1e9, 500)
    t0 = time.perf_counter()
    worst, lower_ok = 0.0, True
    for d in deltas:
        rho = invert_rho_log_rho(float(d))
        worst = max(worst, abs(rho * math.log(rho) - d) / d)
        lower_ok &= rho >= d / math.log(d)
    secs = time.perf_counter() - t0
    ok = worst <= 1e-9 and lower_ok and secs < 1.0
    record(8, ok, f"{len(deltas)} deltas in [e^2, 1e9]: max rel residual {worst:.2e}, lower bound held, {secs:.3f} s")


def test_criterion_09_asymptotic_trend():
    genera = [10**3, 10**4, 10**5, 10**6, 10**8]
    ratios, slowest = [], 0.0
    for g in genera:
        (value, _), secs = timed(best_sigma_upper, g)
        slowest = max(slowest, secs)
        ratios.append(value * math.pi * g / math.log(g) ** 2)
    ok = all(b < a for a, b in zip(ratios, ratios[1:])) and slowest < 1.0
    shown = ", ".join(f"{r:.4f}" for r in ratios)
    record(9, ok, f"ratios {shown} strictly decreasing, slowest evaluation {slowest:.3f} s")


def test_criterion_10_homotopy_counts():
    pair_flat = AdmissiblePair(0.1, 0.09)
    sq = homotopy_count_check(Lattice2.square(), pair_flat, math.pi, range(1, 21))
    hx = homotopy_count_check(Lattice2.hexagonal(), pair_flat, math.pi, range(1, 21))
    bz = homotopy_count_check(bolza_surface(), AdmissiblePair(0.05, 0.29), math.pi, [2, 4, 6])
    counts = {r.T: r.count for r in sq.rows}
    ok = sq.passed and hx.passed and bz.passed and counts[5.0] == 81 and counts[10.0] == 317
    bolza = ", ".join(str(r.count) for r in bz.rows)
    record(10, ok, f"square/hexagonal T = 1..20 pass, P'(5) = {counts[5.0]}, P'(10) = {counts[10.0]}; bolza counts {bolza} pass")


def test_criterion_11_flat_packing():
    p = maximal_packing_flat(Lattice2.square(), 0.1)
    ok = 25 <= p.count <= 31 and abs(p.bound - 31.83) <= 0.005
    record(11, ok, f"greedy count {p.count} in [25, 31], bound {p.bound:.4f}")


def test_criterion_12_berger_floor():
    s2, s3 = sphere_isoembolic(2), sphere_isoembolic(3)
    floors = [
        emb_lower_bound(MinEntValue(0.0, n), BallGrowthConstant(c, n)).value
        for n in (2, 3)
        for c in (0.5, 1.0, math.pi)
    ]
    ok = abs(s2 - 4 / math.pi) <= 1e-15 and abs(s3 - 2 / math.pi) <= 1e-15
    ok &= floors[:3] == [s2] * 3 and floors[3:] == [s3] * 3
    record(12, ok, f"Emb(S^2) = {s2:.16f}, Emb(S^3) = {s3:.16f}; zero-entropy bound equals the floor")


def test_criterion_13_determinism():
    outputs, codes = [], []
    for _ in range(2):
        out = io.StringIO()
        codes.append(run(["verify", "all"], out, io.StringIO()))
        outputs.append(out.getvalue().encode("utf-8"))
    ok = outputs[0] == outputs[1] and codes == [0, 0]
    record(13, ok, f"two full runs byte-identical ({len(outputs[0])} bytes), exit codes {codes}")
