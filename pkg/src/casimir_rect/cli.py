"""Command-line front end emitting reproducible tables of scaling functions.

Subcommands cover the package's main artifacts: zero tables, weight tables,
the two partition-function routes, potential and force grids, critical
closed forms, the named constants, the force sign-change ratio, and the
effective-spin cross-check.  Output is CSV or JSON with full round-trip
precision and is byte-identical for identical configurations.

Exit codes: 0 success, 1 invalid arguments, 2 numerical non-convergence.
The environment variable CASIMIR_RECT_THREADS caps grid parallelism
(default 1; results are ordered, so the output does not depend on it).
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import __version__, casimir, effspin, roots, sigma, specialfn, strip
from . import thermo_constants, weights
from .quad import QuadratureError
from .roots import RootFindError
from .tables import FunctionTable, emit_table

__all__ = ["RunConfig", "run", "main"]

_COMMANDS = ("zeros", "weights", "sigma", "theta-table", "vartheta-table",
             "critical", "constants", "rho0", "effspin-check")


@dataclass
class RunConfig:
    """Validated CLI invocation: command, parameters, and output choices."""

    command: str
    params: dict = field(default_factory=dict)
    format: str = "csv"
    output: str | None = None


def _thread_count() -> int:
    raw = os.environ.get("CASIMIR_RECT_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n)


def _grid_map(fn, items):
    """Apply fn over items, optionally threaded, preserving order."""
    n = _thread_count()
    if n <= 1 or len(items) <= 1:
        return [fn(v) for v in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def _emit(table: FunctionTable, config: RunConfig) -> None:
    meta = {"tool": "casimir-rect", "version": __version__,
            "command": config.command, "params": config.params}
    if config.output:
        with open(config.output, "w", newline="\n") as fh:
            emit_table(table, config.format, fh, meta)
    else:
        emit_table(table, config.format, sys.stdout, meta)


def _x_grid(params: dict) -> list[float]:
    lo, hi, steps = params["x_min"], params["x_max"], params["steps"]
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if steps == 1:
        return [lo]
    return [lo + (hi - lo) * i / (steps - 1) for i in range(steps)]


def _cmd_zeros(config: RunConfig) -> FunctionTable:
    p = config.params
    table = FunctionTable(["mu", "phi", "phi_sq", "gamma"])
    for rec in roots.find_zeros(p["count"], p["x"], p["tol"]):
        if rec.phi_sq < 0.0:
            phi_repr = format(math.sqrt(-rec.phi_sq), ".17g") + "i"
        else:
            phi_repr = format(math.sqrt(rec.phi_sq), ".17g")
        table.add_row(rec.mu, phi_repr, rec.phi_sq, rec.gamma)
    return table


def _cmd_weights(config: RunConfig) -> FunctionTable:
    p = config.params
    table = FunctionTable(["mu", "v", "method"])
    for mu in range(1, p["count"] + 1):
        if p["x"] == 0.0:
            rec = weights.weight_v_closed_x0(mu)
        elif mu == 1 and p["x"] == -1.0:
            rec = weights.weight_v_special_xneg1()
        else:
            rec = weights.weight_v(mu, p["x"])
        table.add_row(rec.mu, rec.v, rec.method)
    return table


def _cmd_sigma(config: RunConfig) -> FunctionTable:
    p = config.params
    x, rho = p["x"], p["rho"][0] if isinstance(p["rho"], list) else p["rho"]
    table = FunctionTable(["x", "rho", "sigma_series", "sigma_det", "Psi", "psi"])
    series = sigma.sigma_series(x, rho, p["order"]).value
    det = sigma.sigma_det(x, rho, p["modes"]).value
    table.add_row(x, rho, series, det,
                  sigma.Psi(x, rho, p["order"]), sigma.psi_strip(x, rho, p["order"]))
    return table


def _cmd_theta_table(config: RunConfig) -> FunctionTable:
    p = config.params
    xs = _x_grid(p)
    table = FunctionTable(["x", "rho", "theta_total", "note"])
    for rho in p["rho"]:
        def eval_point(x, rho=rho):
            if x == 0.0:
                return (x, rho, None, "divergent")
            return (x, rho, casimir.theta_total(x, rho, p["order"]), "")

        for row in _grid_map(eval_point, xs):
            table.add_row(*row)
    return table


def _cmd_vartheta_table(config: RunConfig) -> FunctionTable:
    p = config.params
    xs = _x_grid(p)
    table = FunctionTable(["x", "rho", "vartheta"])
    for rho in p["rho"]:
        def eval_point(x, rho=rho):
            return (x, rho, casimir.vartheta_total(x, rho, p["order"]))

        for row in _grid_map(eval_point, xs):
            table.add_row(*row)
    return table


def _cmd_critical(config: RunConfig) -> FunctionTable:
    p = config.params
    table = FunctionTable(["rho", "sigma0", "Delta0", "vartheta0", "psi0"])
    for rho in p["rho"]:
        sigma0 = math.exp(-0.25 * specialfn.log_q_pochhammer(rho))
        table.add_row(rho, sigma0, casimir.casimir_amplitude(rho),
                      casimir.vartheta_total(0.0, rho, p["order"]),
                      math.pi / 48.0 * (specialfn.eisenstein_E2(rho) - 1.0))
    return table


def _cmd_constants(config: RunConfig) -> FunctionTable:
    table = FunctionTable(["name", "value"])
    table.add_row("z_critical", casimir.Z_CRITICAL)
    table.add_row("catalan", specialfn.catalan_constant())
    table.add_row("theta_oo_0", strip.theta_oo(0.0))
    table.add_row("psi_0_1", sigma.psi_strip(0.0, 1.0, 10))
    table.add_row("vartheta_0_1", casimir.vartheta_total(0.0, 1.0, 10))
    table.add_row("rho_0", casimir.find_rho0())
    table.add_row("v1_x_neg1", weights.weight_v_special_xneg1().v)
    table.add_row("surface_critical", thermo_constants.surface_critical_value())
    table.add_row("corner_constant",
                  thermo_constants.corner_free_energy(1e-3).terms["constant"])
    return table


def _cmd_effspin_check(config: RunConfig) -> FunctionTable:
    p = config.params
    x, rho, n = p["x"], p["rho"][0] if isinstance(p["rho"], list) else p["rho"], p["n"]
    model = effspin.build_model(x, n)
    z_eff = effspin.enumerate_partition(model, rho)
    matched = effspin.matched_series(x, rho, n)
    mag = effspin.magnetization(model, rho)
    psi_val = sigma.psi_strip(x, rho, max(1, (2 * n - 1) // 4))
    table = FunctionTable(["n_spins", "z_eff", "sigma_matched", "z_diff",
                           "magnetization", "psi"])
    table.add_row(n, z_eff, matched, abs(z_eff - matched), mag, psi_val)
    return table


def _cmd_rho0(config: RunConfig) -> None:
    sys.stdout.write(f"{casimir.find_rho0():.12f}\n")


def run(config: RunConfig) -> int:
    """Execute one validated configuration; returns the process exit code."""
    try:
        if config.command == "rho0":
            _cmd_rho0(config)
            return 0
        builder = {
            "zeros": _cmd_zeros,
            "weights": _cmd_weights,
            "sigma": _cmd_sigma,
            "theta-table": _cmd_theta_table,
            "vartheta-table": _cmd_vartheta_table,
            "critical": _cmd_critical,
            "constants": _cmd_constants,
            "effspin-check": _cmd_effspin_check,
        }[config.command]
        _emit(builder(config), config)
        return 0
    except (QuadratureError, RootFindError, RuntimeError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="casimir-rect",
        description="Universal Casimir scaling functions of the critical "
                    "2D Ising rectangle with open boundaries.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp):
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--output", default=None, help="output path (default stdout)")

    sp = sub.add_parser("zeros", help="zero table at one x")
    sp.add_argument("--x", type=float, required=True)
    sp.add_argument("--count", type=int, default=4)
    sp.add_argument("--tol", type=float, default=1e-14)
    add_common(sp)

    sp = sub.add_parser("weights", help="weight table at one x")
    sp.add_argument("--x", type=float, required=True)
    sp.add_argument("--count", type=int, default=8)
    add_common(sp)

    sp = sub.add_parser("sigma", help="partition-function scaling function")
    sp.add_argument("--x", type=float, required=True)
    sp.add_argument("--rho", type=float, required=True)
    sp.add_argument("--order", type=int, default=8)
    sp.add_argument("--modes", type=int, default=16)
    add_common(sp)

    for name, help_text in (("theta-table", "Casimir potential grid"),
                            ("vartheta-table", "Casimir force grid")):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--x-min", dest="x_min", type=float, required=True)
        sp.add_argument("--x-max", dest="x_max", type=float, required=True)
        sp.add_argument("--steps", type=int, required=True)
        sp.add_argument("--rho", type=float, action="append", required=True,
                        help="repeatable")
        sp.add_argument("--order", type=int, default=8)
        add_common(sp)

    sp = sub.add_parser("critical", help="critical-point closed forms")
    sp.add_argument("--rho", type=float, action="append", required=True)
    sp.add_argument("--order", type=int, default=8)
    add_common(sp)

    sp = sub.add_parser("constants", help="named constants table")
    add_common(sp)

    sp = sub.add_parser("rho0", help="force sign-change aspect ratio")

    sp = sub.add_parser("effspin-check", help="effective-spin equivalence check")
    sp.add_argument("--x", type=float, required=True)
    sp.add_argument("--rho", type=float, required=True)
    sp.add_argument("--n", type=int, default=8)
    add_common(sp)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    params = {k: v for k, v in vars(ns).items()
              if k not in ("command", "format", "output")}
    config = RunConfig(command=ns.command, params=params,
                       format=getattr(ns, "format", "csv"),
                       output=getattr(ns, "output", None))
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
