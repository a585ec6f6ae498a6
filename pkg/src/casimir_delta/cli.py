"""Command-line frontend: figure datasets, single-point computations, and the
validation report, in CSV or JSON.

Exit codes: 0 success, 1 usage error, 2 numerical failure, 3 validation
failure. Identical configs produce byte-identical output (floats fixed at 9
significant digits)."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import __version__
from .dielectric import ApproachVariant, IdealMetal, Plasma
from .lifshitz import (
    ConvergenceError,
    MatsubaraSpec,
    ParallelPlates,
    QuadratureError,
    QuadratureSpec,
    SpherePlate,
    plate_pressure,
    sphere_plate_force_pfa,
)
from .perturbative import (
    plate_force_perturbative,
    sphere_force_perturbative,
    te_zero_frequency_asymptotic,
)
from .quantities import CODATA2018
from .scenarios import (
    SweepSpec,
    SweepTable,
    TemperaturePair,
    delta_force_plates,
    delta_force_sphere,
    sweep_separation,
    sweep_temperature,
)
from .validation import run_acceptance_checks

PRECISION_ENV = "CASIMIR_DELTA_PRECISION"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit code 1, not argparse's 2
        raise UsageError(message)


def _fmt(x: float) -> str:
    return f"{x:.8e}"  # 9 significant digits


def _round9(x: float) -> float:
    return float(_fmt(x))


def _load_config_file(path: str) -> dict:
    """key = value lines, '#' comments; keys match flag names with '-'->'_'."""
    values: dict = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
            key, _, val = line.partition("=")
            values[key.strip().replace("-", "_")] = val.strip()
    return values


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--approach", choices=["plasma", "modified-te", "ideal"], default="plasma")
    p.add_argument("--lambda-p-nm", type=float, default=136.0, help="plasma wavelength, nm")
    p.add_argument("--t1-k", type=float, default=300.0)
    p.add_argument("--t2-k", type=float, default=350.0)
    p.add_argument("--radius-mm", type=float, default=2.0)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--config", type=str, default=None, help="key = value config file")
    p.add_argument("--output", type=str, default=None, help="output path (default stdout)")
    p.add_argument("--tail-tol", type=float, default=None,
                   help="Matsubara tail tolerance (default 1e-9)")
    p.add_argument("--quad-tol", type=float, default=None,
                   help="quadrature relative tolerance (default 1e-9)")


def _add_a_grid(p: argparse.ArgumentParser) -> None:
    p.add_argument("--a-min-um", type=float, default=0.15)
    p.add_argument("--a-max-um", type=float, default=2.0)
    p.add_argument("--points", type=int, default=75)


def build_parser() -> _Parser:
    parser = _Parser(prog="casimir-delta", description=__doc__)
    parser.add_argument("--version", action="version", version=f"casimir-delta {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p1 = sub.add_parser("fig1", help="plate-plate difference force vs separation")
    _add_common(p1)
    _add_a_grid(p1)

    p2 = sub.add_parser("fig2", help="sphere-plate difference force per radius vs separation")
    _add_common(p2)
    _add_a_grid(p2)

    p3 = sub.add_parser("fig3", help="sphere-plate difference force per radius vs upper temperature")
    _add_common(p3)
    p3.add_argument("--a-um", type=float, default=0.5)
    p3.add_argument("--points", type=int, default=51)

    pc = sub.add_parser("compute", help="single-point forces and difference force")
    _add_common(pc)
    pc.add_argument("--geometry", choices=["plates", "sphere"], default="sphere")
    pc.add_argument("--a-um", type=float, default=0.5)
    pc.add_argument("--oracle", action="store_true",
                    help="also run the Lifshitz engine and report deviations")

    pv = sub.add_parser("validate", help="run the acceptance checklist")
    pv.add_argument("--format", choices=["text", "json"], default="text")
    pv.add_argument("--output", type=str, default=None)
    return parser


def _resolve_precision(args: argparse.Namespace) -> tuple[MatsubaraSpec, QuadratureSpec]:
    env = os.environ.get(PRECISION_ENV)
    base = float(env) if env else 1e-9
    tail = args.tail_tol if getattr(args, "tail_tol", None) is not None else base
    qtol = args.quad_tol if getattr(args, "quad_tol", None) is not None else base
    return MatsubaraSpec(relative_tail_tolerance=tail), QuadratureSpec(relative_tolerance=qtol)


def _resolved_config(args: argparse.Namespace, keys: Sequence[str]) -> dict:
    cfg = {"command": args.command, "version": __version__}
    for key in keys:
        cfg[key] = getattr(args, key)
    return cfg


def _emit_table(table: SweepTable, cfg: dict, args: argparse.Namespace,
                first_col_scale: float, first_col_name: str) -> str:
    """Render a sweep table; the first column is rescaled to CLI units."""
    columns = (first_col_name,) + table.columns[1:]
    rows = [(r[0] * first_col_scale,) + r[1:] for r in table.rows]
    if args.format == "json":
        payload = {
            "config": cfg,
            "rows": [
                {c: _round9(v) for c, v in zip(columns, row)} for row in rows
            ],
        }
        return json.dumps(payload, indent=2) + "\n"
    lines = [f"# {k} = {v}" for k, v in cfg.items()]
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def _write(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _lambda_p(args: argparse.Namespace) -> float:
    if args.approach == "ideal":
        return 0.0
    lam = args.lambda_p_nm * 1e-9
    if lam <= 0.0:
        raise UsageError("--lambda-p-nm must be positive (use --approach ideal for ideal metal)")
    return lam


def cmd_fig1(args: argparse.Namespace) -> int:
    grid = SweepSpec(args.a_min_um * 1e-6, args.a_max_um * 1e-6, args.points, "log")
    pair = TemperaturePair(args.t1_k, args.t2_k)
    table = sweep_separation(pair, _lambda_p(args), ParallelPlates(), grid=grid)
    cfg = _resolved_config(args, ["approach", "lambda_p_nm", "t1_k", "t2_k",
                                  "a_min_um", "a_max_um", "points", "format"])
    _write(_emit_table(table, cfg, args, 1e6, "a_um"), args.output)
    return 0


def cmd_fig2(args: argparse.Namespace) -> int:
    grid = SweepSpec(args.a_min_um * 1e-6, args.a_max_um * 1e-6, args.points, "log")
    pair = TemperaturePair(args.t1_k, args.t2_k)
    approach = (ApproachVariant.MODIFIED_TE if args.approach == "modified-te"
                else ApproachVariant.PLASMA_ZERO_FREQUENCY)
    table = sweep_separation(pair, _lambda_p(args), SpherePlate(args.radius_mm * 1e-3),
                             approach, grid)
    cfg = _resolved_config(args, ["approach", "lambda_p_nm", "t1_k", "t2_k",
                                  "a_min_um", "a_max_um", "points", "format"])
    _write(_emit_table(table, cfg, args, 1e6, "a_um"), args.output)
    return 0


def cmd_fig3(args: argparse.Namespace) -> int:
    grid = SweepSpec(args.t1_k, args.t2_k, args.points, "linear")
    table = sweep_temperature(args.a_um * 1e-6, args.t1_k, _lambda_p(args),
                              args.radius_mm * 1e-3, grid)
    cfg = _resolved_config(args, ["approach", "lambda_p_nm", "t1_k", "t2_k",
                                  "a_um", "points", "format"])
    _write(_emit_table(table, cfg, args, 1.0, "T2_K"), args.output)
    return 0


def cmd_compute(args: argparse.Namespace) -> int:
    a = args.a_um * 1e-6
    R = args.radius_mm * 1e-3
    lam = _lambda_p(args)
    pair = TemperaturePair(args.t1_k, args.t2_k)
    approach = (ApproachVariant.MODIFIED_TE if args.approach == "modified-te"
                else ApproachVariant.PLASMA_ZERO_FREQUENCY)
    if args.geometry == "plates" and approach is ApproachVariant.MODIFIED_TE:
        raise UsageError("the modified-te prescription is defined for the sphere geometry only")

    def force(T: float):
        if args.geometry == "plates":
            return plate_force_perturbative(a, T, lam)
        res = sphere_force_perturbative(a, T, R, lam)
        if approach is ApproachVariant.MODIFIED_TE:
            value = res.value - te_zero_frequency_asymptotic(a, T, R, lam)
            res = type(res)(value=value, geometry=res.geometry, method=res.method,
                            approach=approach, validity=res.validity,
                            terms=res.terms, notes=res.notes)
        return res

    f1, f2 = force(pair.T1), force(pair.T2)
    if args.geometry == "plates":
        diff = delta_force_plates(a, pair, lam)
    else:
        diff = delta_force_sphere(a, pair, R, lam, approach)

    record = {
        "config": _resolved_config(
            args, ["geometry", "approach", "lambda_p_nm", "t1_k", "t2_k",
                   "a_um", "radius_mm", "oracle"]),
        "force_T1": _round9(f1.value),
        "force_T2": _round9(f2.value),
        "delta_F": _round9(diff.delta_F),
        "units": "N_per_m2" if args.geometry == "plates" else "N",
        "terms_T2": {
            "base": _round9(f2.terms.base),
            "thermal_ideal": _round9(f2.terms.thermal_ideal),
            "conductivity_first_order": _round9(f2.terms.conductivity_first_order),
            "cross_term": _round9(f2.terms.cross_term),
        },
        "notes": list(f2.notes),
        "validity_warnings": list(diff.validity.warnings),
    }

    if args.oracle:
        matsubara, quadrature = _resolve_precision(args)
        model = IdealMetal() if lam == 0.0 else Plasma(lam)
        if args.geometry == "plates":
            o1 = plate_pressure(a, pair.T1, model, approach, matsubara, quadrature)
            o2 = plate_pressure(a, pair.T2, model, approach, matsubara, quadrature)
        else:
            o1 = sphere_plate_force_pfa(a, pair.T1, R, model, approach, matsubara, quadrature)
            o2 = sphere_plate_force_pfa(a, pair.T2, R, model, approach, matsubara, quadrature)
        record["oracle"] = {
            "tail_tolerance": matsubara.relative_tail_tolerance,
            "quadrature_tolerance": quadrature.relative_tolerance,
            "force_T1": _round9(o1),
            "force_T2": _round9(o2),
            "delta_F": _round9(o2 - o1),
            "rel_deviation_T1": _round9(abs(f1.value - o1) / abs(o1)),
            "rel_deviation_T2": _round9(abs(f2.value - o2) / abs(o2)),
            "rel_deviation_delta_F": _round9(abs(diff.delta_F - (o2 - o1)) / abs(o2 - o1)),
        }

    _write(json.dumps(record, indent=2) + "\n", args.output)
    return 0


def cmd_validate(args: argparse.Namespace) -> int:
    report = run_acceptance_checks()
    if args.format == "json":
        payload = {
            "version": __version__,
            "all_passed": report.all_passed,
            "checks": [
                {
                    "id": c.check_id,
                    "passed": c.passed,
                    "measured": _round9(c.measured),
                    "expected": c.expected,
                    "detail": c.detail,
                }
                for c in report.checks
            ],
        }
        _write(json.dumps(payload, indent=2) + "\n", args.output)
    else:
        lines = [c.line() for c in report.checks]
        n_fail = sum(not c.passed for c in report.checks)
        lines.append(f"{len(report.checks) - n_fail}/{len(report.checks)} checks passed")
        _write("\n".join(lines) + "\n", args.output)
    return 0 if report.all_passed else 3


_COMMANDS = {
    "fig1": cmd_fig1,
    "fig2": cmd_fig2,
    "fig3": cmd_fig3,
    "compute": cmd_compute,
    "validate": cmd_validate,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        if argv is None:
            argv = sys.argv[1:]
        # a config file supplies defaults; explicit flags override them
        if "--config" in argv:
            pre = list(argv)
            path = pre[pre.index("--config") + 1]
            file_values = _load_config_file(path)
            args = parser.parse_args(argv)
            explicit = _explicit_flags(argv)
            for key, raw in file_values.items():
                if not hasattr(args, key):
                    raise UsageError(f"unknown config key {key!r}")
                if key in explicit:
                    continue
                current = getattr(args, key)
                caster = type(current) if current is not None else str
                if caster is bool:
                    setattr(args, key, raw.lower() in ("1", "true", "yes"))
                else:
                    setattr(args, key, caster(raw))
        else:
            args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (QuadratureError, ConvergenceError) as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 2


def _explicit_flags(argv: Sequence[str]) -> set:
    return {
        token.lstrip("-").split("=", 1)[0].replace("-", "_")
        for token in argv
        if token.startswith("--")
    }


if __name__ == "__main__":
    sys.exit(main())
