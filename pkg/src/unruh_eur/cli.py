"""Command-line driver.

Subcommands:

    point      evaluate the full pipeline at one (omega, T, delta0) point
    sweep      temperature sweeps, one CSV/JSON/SVG set per delta0
    dynamics   integrate the master equation from a chosen initial state
    verify     run the cross-module invariant suite

Exit codes: 0 success, 1 verification failure, 2 usage or configuration
error, 3 numerical guard tripped.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .errors import ConsistencyError, DomainError, InvalidStateError, OptimizerError, StepSizeError
from .lindblad import integrate, liouvillian_from_params, pauli_correlation, thermal_kossakowski
from .qstate import named_state, state_fidelity, validate_state
from .stationary import gamma_from_temperature, stationary_xstate, temperature_from_acceleration, xstate_to_density
from .sweep import (
    COLUMNS,
    DEFAULT_DELTA0,
    SweepConfig,
    compute_row,
    format_float,
    run_and_write,
    validate_row,
    write_rows_csv,
    write_rows_json,
)
from .uncertainty import uncertainty_of_density
from .verify import run_all_checks


def _add_temperature_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--temperature", type=float, help="Unruh temperature T (0 allowed)")
    group.add_argument("--acceleration", type=float, help="proper acceleration a; T = a / (2 pi)")


def _resolve_temperature(args) -> float:
    if args.acceleration is not None:
        return temperature_from_acceleration(args.acceleration)
    if args.temperature < 0.0:
        raise DomainError(f"temperature must be nonnegative, got {args.temperature!r}")
    return args.temperature


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unruh-eur",
        description="Entropic uncertainty, discord and thermalization numerics "
                    "for a uniformly accelerating detector pair.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    point = sub.add_parser("point", help="evaluate one parameter point")
    point.add_argument("--omega", type=float, default=1.0, help="detector gap (default 1)")
    _add_temperature_flags(point)
    point.add_argument("--delta0", type=float, required=True, help="initial correlation in [-3, 1]")
    point.add_argument("--out-dir", type=Path, default=None, help="also write a single-record file")
    point.add_argument("--format", dest="fmt", choices=("csv", "json", "both"), default="csv")

    sweep = sub.add_parser("sweep", help="temperature sweep per delta0")
    sweep.add_argument("--omega", type=float, default=1.0)
    sweep.add_argument("--delta0", type=float, action="append", default=None,
                       help="repeatable; defaults to -1, 0.5, 1")
    sweep.add_argument("--t-min", type=float, default=0.01)
    sweep.add_argument("--t-max", type=float, default=4.0)
    sweep.add_argument("--t-count", type=int, default=200)
    sweep.add_argument("--t-zero-limit", action="store_true",
                       help="start the grid at the exact T = 0 limit")
    sweep.add_argument("--out-dir", type=Path, default=Path("out"))
    sweep.add_argument("--format", dest="fmt", choices=("csv", "json", "both"), default="csv")
    sweep.add_argument("--svg", action="store_true", help="write SVG charts as well")
    sweep.add_argument("--jobs", type=int, default=1, help="worker processes")

    dynamics = sub.add_parser("dynamics", help="integrate the master equation")
    dynamics.add_argument("--omega", type=float, default=1.0)
    _add_temperature_flags(dynamics)
    dynamics.add_argument("--initial", type=str, default="product-00",
                          help="singlet | triplet-zz | product-00 | maximally-mixed "
                               "or 16 comma-separated complex matrix entries, row major")
    dynamics.add_argument("--tau-max", type=float, default=None,
                          help="integration horizon (default 50 / gamma_plus)")
    dynamics.add_argument("--dtau", type=float, default=None,
                          help="step size (default 0.01 / gamma_plus)")
    dynamics.add_argument("--out-dir", type=Path, default=Path("out"))

    verify = sub.add_parser("verify", help="run the invariant suite")
    verify.add_argument("--full", action="store_true", help="reference grid sizes")

    return parser


def _format_point(row) -> str:
    width = max(len(c) for c in COLUMNS)
    lines = [f"{name:>{width}} = {format_float(value)}"
             for name, value in zip(COLUMNS, row.values())]
    return "\n".join(lines)


def cmd_point(args) -> int:
    temperature = _resolve_temperature(args)
    row = validate_row(compute_row(args.omega, temperature, args.delta0))
    print(_format_point(row))
    if args.out_dir is not None:
        config = SweepConfig(omega=args.omega, delta0_list=(args.delta0,),
                             t_min=temperature, t_max=temperature, t_count=2,
                             t_zero_limit=temperature == 0.0, out_dir=args.out_dir,
                             fmt=args.fmt)
        args.out_dir.mkdir(parents=True, exist_ok=True)
        if args.fmt in ("csv", "both"):
            write_rows_csv(args.out_dir / "point.csv", [row], config, args.delta0)
        if args.fmt in ("json", "both"):
            write_rows_json(args.out_dir / "point.json", [row], config, args.delta0)
    return 0


def cmd_sweep(args) -> int:
    config = SweepConfig(
        omega=args.omega,
        delta0_list=tuple(args.delta0) if args.delta0 else DEFAULT_DELTA0,
        t_min=0.0 if args.t_zero_limit else args.t_min,
        t_max=args.t_max,
        t_count=args.t_count,
        t_zero_limit=args.t_zero_limit,
        out_dir=args.out_dir,
        fmt=args.fmt,
        svg=args.svg,
        jobs=args.jobs,
    )
    for path in run_and_write(config):
        print(path)
    return 0


def _parse_initial(text: str) -> np.ndarray:
    if "," not in text:
        return named_state(text)
    entries = [piece.strip() for piece in text.split(",")]
    if len(entries) != 16:
        raise DomainError(f"expected 16 matrix entries, got {len(entries)}")
    try:
        values = [complex(e) for e in entries]
    except ValueError as exc:
        raise DomainError(f"could not parse matrix entry: {exc}") from None
    rho = np.array(values, dtype=complex).reshape(4, 4)
    try:
        return validate_state(rho, name="initial state")
    except InvalidStateError as exc:
        raise DomainError(str(exc)) from None


def cmd_dynamics(args) -> int:
    temperature = _resolve_temperature(args)
    rho0 = _parse_initial(args.initial)
    params = thermal_kossakowski(args.omega, temperature)
    liouvillian = liouvillian_from_params(params)
    tau_max = args.tau_max if args.tau_max is not None else 50.0 / params.gamma_plus
    dtau = args.dtau if args.dtau is not None else 0.01 / params.gamma_plus

    delta0 = pauli_correlation(rho0)
    gamma = gamma_from_temperature(args.omega, temperature)
    target = xstate_to_density(stationary_xstate(delta0, gamma))

    steps = max(1, int(round(tau_max / dtau)))
    stride = max(1, steps // 1000)
    trajectory = integrate(liouvillian, rho0, tau_max, dtau, sample_stride=stride)

    args.out_dir.mkdir(parents=True, exist_ok=True)
    path = args.out_dir / "trajectory.csv"
    lines = [
        "# unruh-eur dynamics",
        f"# omega = {format_float(args.omega)}",
        f"# temperature = {format_float(temperature)}",
        f"# delta0 = {format_float(delta0)}",
        f"# gamma_plus = {format_float(params.gamma_plus)}",
        f"# dtau = {format_float(dtau)}",
        "tau,fidelity,distance,delta,delta_drift,U,bound",
    ]
    for tau, state in zip(trajectory.taus, trajectory.states):
        delta = pauli_correlation(state)
        uncertainty, bound = uncertainty_of_density(state)
        lines.append(",".join(format_float(v) for v in (
            tau,
            state_fidelity(state, target),
            float(np.linalg.norm(state - target)),
            delta,
            abs(delta - delta0),
            uncertainty,
            bound,
        )))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(path)
    final = trajectory.final_state()
    print(f"final distance to prediction = {format_float(float(np.linalg.norm(final - target)))}")
    print(f"max delta drift at samples   = "
          f"{format_float(max(abs(pauli_correlation(s) - delta0) for s in trajectory.states))}")
    return 0


def cmd_verify(args) -> int:
    results = run_all_checks(full=args.full)
    name_width = max(len(r.name) for r in results)
    failures = 0
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        line = (f"{result.name:<{name_width}}  residual {result.residual:>12.3e}  "
                f"tol {result.tolerance:>8.1e}  {status}")
        if result.note:
            line += f"  ({result.note})"
        print(line)
        failures += 0 if result.passed else 1
    print(f"{len(results) - failures}/{len(results)} checks passed")
    return 0 if failures == 0 else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "point": cmd_point,
        "sweep": cmd_sweep,
        "dynamics": cmd_dynamics,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except (DomainError, InvalidStateError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (StepSizeError, OptimizerError) as exc:
        print(f"numerical guard: {exc}", file=sys.stderr)
        return 3
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
