"""Command-line front end.

Usage:
    systolic bounds table --gmin 2 --gmax 100 --format csv
    systolic bounds corollary --alpha 0.05 --beta 0.29 --genus 2 --sigma 1.1547
    systolic invert rholog --delta 100
    systolic invert sigma --alpha 0.05 --beta 0.29 --genus 101
    systolic invert best --genus 1000
    systolic threshold loewner | improved --alpha A | asymptotic --lambda L | crossover
    systolic lab torus --basis 1,0,0.5,0.866 [--alpha A] [--count-radius R]
    systolic lab bolza --rmax 7 [--depth-limit N]
    systolic verify all [--quick]

Exit status: 0 success, 1 domain error (or a failed verification), 2 usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import math
import sys

from . import bounds, inversion, thresholds
from .bounds import AdmissiblePair
from .errors import DomainError
from .lab import flat, fuchsian, orbits
from .report import FORMATS, OutputSpec, Report, emit
from .verify import run_checks

CSV_BOUNDS_COLUMNS = (
    "genus",
    "loewner",
    "gromov_aspherical",
    "gromov_genus",
    "buser_sarnak_lower",
    "paper_asymptotic",
    "corollary_best",
)


def _precision(text):
    value = int(text)
    if not 1 <= value <= 15:
        raise argparse.ArgumentTypeError("precision must lie in [1, 15]")
    return value


def _basis(text):
    try:
        vals = [float(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid basis {text!r}") from None
    if len(vals) != 4:
        raise argparse.ArgumentTypeError("basis needs four comma-separated numbers x1,y1,x2,y2")
    return vals


# ---------------------------------------------------------------------------
# commands


def cmd_bounds_table(args):
    if args.gmin < 1 or args.gmax < args.gmin:
        raise DomainError(f"need 1 <= gmin <= gmax, got {args.gmin}, {args.gmax}")
    rows = []
    for g in range(args.gmin, args.gmax + 1):
        rec = bounds.classical_bounds(g)
        best = inversion.best_sigma_upper(g)[0] if g >= 2 else None
        rows.append((g, rec.loewner, rec.gromov_aspherical, rec.gromov_genus,
                     rec.buser_sarnak_lower, rec.asymptotic_upper, best))
    return Report().table("bounds", CSV_BOUNDS_COLUMNS, rows)


def cmd_bounds_corollary(args):
    pair = AdmissiblePair(args.alpha, args.beta)
    res = bounds.corollary_residual(pair, args.genus, args.sigma)
    return (Report().add("alpha", pair.alpha).add("beta", pair.beta).add("genus", args.genus)
            .add("sigma", args.sigma).add("residual", res).add("consistent", res >= 0))


def cmd_invert_rholog(args):
    rho = inversion.invert_rho_log_rho(args.delta)
    return Report().add("delta", args.delta).add("rho", rho).add("explicit_lower", args.delta / math.log(args.delta))


def cmd_invert_sigma(args):
    pair = AdmissiblePair(args.alpha, args.beta)
    return (Report().add("alpha", pair.alpha).add("beta", pair.beta).add("genus", args.genus)
            .add("root", inversion.corollary_root(pair, args.genus))
            .add("sigma_upper", inversion.sigma_upper(pair, args.genus)))


def cmd_invert_best(args):
    value, pair = inversion.best_sigma_upper(args.genus)
    unclamped, _ = inversion.best_sigma_upper(args.genus, clamp=False)
    return (Report().add("genus", args.genus).add("alpha", pair.alpha).add("beta", pair.beta)
            .add("unclamped", unclamped).add("sigma_upper", value))


def cmd_threshold_loewner(args):
    r = thresholds.loewner_genus_threshold()
    rep = Report().table("evaluations", ("alpha", "objective"), r.evaluations)
    return (rep.add("objective_min", r.objective_min).add("argmin_alpha", r.argmin_alpha)
            .add("genus_threshold", r.genus_threshold))


def cmd_threshold_improved(args):
    p = thresholds.improved_packing_fixed_point(args.alpha)
    return (Report().add("alpha", p.alpha).add("ball_count", p.ball_count)
            .add("coefficient", p.coefficient).add("iterations", p.iterations)
            .add("objective", p.objective))


def cmd_threshold_asymptotic(args):
    pair = thresholds.asymptotic_pair(args.lam)
    g0 = thresholds.asymptotic_genus(args.lam)
    return (Report().add("lambda", args.lam).add("alpha", pair.alpha).add("beta", pair.beta)
            .add("genus", g0))


def cmd_threshold_crossover(args):
    r = thresholds.crossover_genus()
    return (Report().add("gromov_loewner_genus", thresholds.gromov_loewner_crossover())
            .add("alpha", r.pair.alpha).add("beta", r.pair.beta)
            .add("corollary_bound", r.corollary_bound).add("gromov_bound", r.gromov_bound)
            .add("genus", r.genus))


def cmd_lab_torus(args):
    x1, y1, x2, y2 = args.basis
    lat = flat.Lattice2((x1, y1), (x2, y2))
    red = flat.lattice_reduce(lat)
    inv = flat.flat_invariants(lat)
    rep = (Report().add("reduced_b1", "{:.{p}f},{:.{p}f}".format(*red.b1, p=args.precision))
           .add("reduced_b2", "{:.{p}f},{:.{p}f}".format(*red.b2, p=args.precision))
           .add("systole", inv.sys).add("area", inv.area).add("ratio", inv.ratio)
           .add("loewner", inv.ratio <= bounds.LOEWNER + 1e-12))
    if args.alpha is not None:
        pk = flat.maximal_packing_flat(lat, args.alpha)
        rep.add("packing_count", pk.count).add("packing_bound", pk.bound)
    if args.count_radius is not None:
        table = orbits.flat_orbit_table(lat, args.count_radius)
        rep.table("orbit_table", ("R", "count"), table.rows)
        rep.add("count", flat.flat_orbit_count(lat, args.count_radius))
    return rep


def cmd_lab_bolza(args):
    surf = fuchsian.bolza_surface()
    fit = orbits.orbit_entropy(surf, args.rmax, max_depth=args.depth_limit)
    katok = fit.slope**2 * surf.area / (2.0 * math.pi * abs(surf.euler_characteristic))
    return (Report().table("orbit_table", ("R", "count"), fit.table.rows)
            .add("systole", fuchsian.fuchsian_systole(surf, 4))
            .add("entropy_slope", fit.slope).add("katok_ratio", katok))


def cmd_verify_all(args):
    results = run_checks(quick=args.quick)
    rows = [(name, "PASS" if ok else "FAIL", detail) for name, ok, detail in results]
    failed = sum(1 for _, ok, _ in results if not ok)
    rep = Report().table("checks", ("check", "status", "detail"), rows)
    rep.add("passed", len(results) - failed).add("failed", failed)
    rep.exit_code = 1 if failed else 0
    return rep


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("--format", choices=FORMATS, default="pretty")
    out.add_argument("--out", metavar="PATH", default=None)
    out.add_argument("--precision", type=_precision, default=6)

    parser = argparse.ArgumentParser(prog="systolic", description="Systolic and entropy bounds for surfaces.")
    groups = parser.add_subparsers(dest="group", required=True)

    def sub(group, name, func, **kw):
        p = group.add_parser(name, parents=[out], **kw)
        p.set_defaults(func=func)
        return p

    b = groups.add_parser("bounds").add_subparsers(dest="cmd", required=True)
    p = sub(b, "table", cmd_bounds_table)
    p.add_argument("--gmin", type=int, required=True)
    p.add_argument("--gmax", type=int, required=True)
    p = sub(b, "corollary", cmd_bounds_corollary)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--sigma", type=float, required=True)

    inv = groups.add_parser("invert").add_subparsers(dest="cmd", required=True)
    p = sub(inv, "rholog", cmd_invert_rholog)
    p.add_argument("--delta", type=float, required=True)
    p = sub(inv, "sigma", cmd_invert_sigma)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--genus", type=int, required=True)
    p = sub(inv, "best", cmd_invert_best)
    p.add_argument("--genus", type=int, required=True)

    th = groups.add_parser("threshold").add_subparsers(dest="cmd", required=True)
    sub(th, "loewner", cmd_threshold_loewner)
    p = sub(th, "improved", cmd_threshold_improved)
    p.add_argument("--alpha", type=float, required=True)
    p = sub(th, "asymptotic", cmd_threshold_asymptotic)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    sub(th, "crossover", cmd_threshold_crossover)

    lab = groups.add_parser("lab").add_subparsers(dest="cmd", required=True)
    p = sub(lab, "torus", cmd_lab_torus)
    p.add_argument("--basis", type=_basis, required=True, help="x1,y1,x2,y2")
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--count-radius", type=float, default=None)
    p = sub(lab, "bolza", cmd_lab_bolza)
    p.add_argument("--rmax", type=float, required=True)
    p.add_argument("--depth-limit", type=int, default=60)

    ver = groups.add_parser("verify").add_subparsers(dest="cmd", required=True)
    p = sub(ver, "all", cmd_verify_all)
    p.add_argument("--quick", action="store_true")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    spec = OutputSpec(args.format, args.out, args.precision)
    try:
        report = args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    emit(report, spec, stdout)
    return report.exit_code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
