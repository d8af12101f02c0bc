"""Temperature sweeps and deterministic file output.

A sweep evaluates the full pipeline (stationary state, uncertainty
quantities, correlation measures) on a linear temperature grid for each
requested initial correlation, and writes one CSV (optionally JSON and SVG)
per correlation value.  Floats are written with 12 significant digits and
rows are validated against the cross-module identities before anything is
written, so rerunning a configuration reproduces files byte for byte.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .discord import correlation_point
from .errors import ConsistencyError, DomainError
from .stationary import gamma_from_temperature, stationary_xstate, xstate_to_density
from .svgplot import line_chart
from .uncertainty import eur_point

#: CSV column order; the on-disk schema.
COLUMNS = (
    "T", "gamma", "x", "y", "z", "d",
    "U", "bound", "tightness", "S_AB", "S_A_given_B",
    "I", "J", "D", "M", "theta_star", "phi_star",
)

DEFAULT_DELTA0 = (-1.0, 0.5, 1.0)


@dataclass
class SweepConfig:
    """Grid and output options of one sweep run."""

    omega: float = 1.0
    delta0_list: tuple[float, ...] = DEFAULT_DELTA0
    t_min: float = 0.01
    t_max: float = 4.0
    t_count: int = 200
    t_zero_limit: bool = False
    out_dir: Path = field(default_factory=lambda: Path("out"))
    fmt: str = "csv"
    svg: bool = False
    jobs: int = 1

    def validate(self) -> "SweepConfig":
        if self.omega <= 0.0:
            raise DomainError(f"omega must be positive, got {self.omega!r}")
        if not self.delta0_list:
            raise DomainError("at least one delta0 value is required")
        for delta0 in self.delta0_list:
            if not (-3.0 <= delta0 <= 1.0):
                raise DomainError(f"delta0 {delta0!r} outside [-3, 1]")
        if self.t_min < 0.0 or (not self.t_zero_limit and self.t_min <= 0.0):
            raise DomainError(
                f"t_min {self.t_min!r} must be positive (or zero with the T = 0 limit flag)"
            )
        if self.t_max < self.t_min:
            raise DomainError("t_max must be >= t_min")
        if self.t_count < 2:
            raise DomainError("t_count must be at least 2")
        if self.fmt not in ("csv", "json", "both"):
            raise DomainError(f"format must be csv, json or both, got {self.fmt!r}")
        if self.jobs < 1:
            raise DomainError("jobs must be >= 1")
        return self


def temperature_grid(config: SweepConfig) -> np.ndarray:
    """Linear temperature grid; starts at exactly 0 when the limit flag is set."""
    return np.linspace(config.t_min, config.t_max, config.t_count)


@dataclass(frozen=True)
class SweepRow:
    """One fully evaluated (temperature, delta0) point."""

    temperature: float
    gamma: float
    x: float
    y: float
    z: float
    d: float
    uncertainty: float
    bound: float
    tightness: float
    s_ab: float
    s_a_given_b: float
    mutual_info: float
    classical_corr: float
    discord: float
    missing_info: float
    theta_star: float
    phi_star: float

    def values(self) -> tuple[float, ...]:
        """Values in COLUMNS order."""
        return (
            self.temperature, self.gamma, self.x, self.y, self.z, self.d,
            self.uncertainty, self.bound, self.tightness, self.s_ab, self.s_a_given_b,
            self.mutual_info, self.classical_corr, self.discord, self.missing_info,
            self.theta_star, self.phi_star,
        )


def compute_row(omega: float, temperature: float, delta0: float) -> SweepRow:
    """Run the whole pipeline at one (omega, T, delta0) point."""
    gamma = gamma_from_temperature(omega, temperature)
    state = stationary_xstate(delta0, gamma)
    eur = eur_point(state)
    corr = correlation_point(xstate_to_density(state))
    return SweepRow(
        temperature=float(temperature),
        gamma=gamma,
        x=state.x, y=state.y, z=state.z, d=state.d,
        uncertainty=eur.uncertainty,
        bound=eur.bound,
        tightness=eur.tightness,
        s_ab=eur.s_ab,
        s_a_given_b=eur.s_a_given_b,
        mutual_info=corr.mutual_info,
        classical_corr=corr.classical_corr,
        discord=corr.discord,
        missing_info=corr.missing_info,
        theta_star=corr.optimizer.theta,
        phi_star=corr.optimizer.phi,
    )


def validate_row(row: SweepRow) -> SweepRow:
    """Cross-module identities every emitted row must satisfy."""
    if row.uncertainty < row.bound - 1e-9:
        raise ConsistencyError(
            f"row at T = {row.temperature!r}: uncertainty {row.uncertainty!r} "
            f"below bound {row.bound!r}"
        )
    decomposed = 1.0 + row.missing_info - row.discord
    if abs(row.bound - decomposed) > 1e-6:
        raise ConsistencyError(
            f"row at T = {row.temperature!r}: bound {row.bound!r} and discord "
            f"decomposition {decomposed!r} disagree"
        )
    return row


def _row_task(args: tuple[float, float, float]) -> SweepRow:
    return compute_row(*args)


def run_sweep(config: SweepConfig) -> dict[float, list[SweepRow]]:
    """Evaluate the grid, optionally with a worker pool.

    Results are gathered in grid order regardless of completion order, so
    parallel and sequential runs produce identical output.
    """
    config.validate()
    temperatures = temperature_grid(config)
    tasks = [
        (config.omega, float(t), float(delta0))
        for delta0 in config.delta0_list
        for t in temperatures
    ]
    if config.jobs == 1:
        rows = [_row_task(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            rows = list(pool.map(_row_task, tasks, chunksize=16))
    out: dict[float, list[SweepRow]] = {}
    for index, delta0 in enumerate(config.delta0_list):
        chunk = rows[index * len(temperatures): (index + 1) * len(temperatures)]
        out[float(delta0)] = [validate_row(r) for r in chunk]
    return out


def format_float(value: float) -> str:
    """Locale-independent rendering with 12 significant digits."""
    return format(float(value), ".12g")


def _config_comment_lines(config: SweepConfig, delta0: float) -> list[str]:
    return [
        "# unruh-eur sweep",
        f"# omega = {format_float(config.omega)}",
        f"# delta0 = {format_float(delta0)}",
        f"# t_min = {format_float(config.t_min)}",
        f"# t_max = {format_float(config.t_max)}",
        f"# t_count = {config.t_count}",
        f"# t_zero_limit = {str(config.t_zero_limit).lower()}",
    ]


def write_rows_csv(path: Path, rows: list[SweepRow], config: SweepConfig, delta0: float) -> None:
    lines = _config_comment_lines(config, delta0)
    lines.append(",".join(COLUMNS))
    for row in rows:
        validate_row(row)
        lines.append(",".join(format_float(v) for v in row.values()))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_rows_json(path: Path, rows: list[SweepRow], config: SweepConfig, delta0: float) -> None:
    payload = {
        "omega": float(format_float(config.omega)),
        "delta0": float(format_float(delta0)),
        "t_min": config.t_min,
        "t_max": config.t_max,
        "t_count": config.t_count,
        "t_zero_limit": config.t_zero_limit,
        "rows": [
            dict(zip(COLUMNS, (float(format_float(v)) for v in validate_row(row).values())))
            for row in rows
        ],
    }
    path.write_text(json.dumps(payload, indent=1) + "\n", encoding="utf-8")


def _delta0_tag(delta0: float) -> str:
    return format_float(delta0)


def write_sweep(config: SweepConfig, results: dict[float, list[SweepRow]]) -> list[Path]:
    """Write CSV/JSON/SVG per delta0 into config.out_dir; returns the paths."""
    out_dir = Path(config.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    for delta0, rows in results.items():
        tag = _delta0_tag(delta0)
        if config.fmt in ("csv", "both"):
            path = out_dir / f"sweep_delta0_{tag}.csv"
            write_rows_csv(path, rows, config, delta0)
            written.append(path)
        if config.fmt in ("json", "both"):
            path = out_dir / f"sweep_delta0_{tag}.json"
            write_rows_json(path, rows, config, delta0)
            written.append(path)
        if config.svg:
            temps = [row.temperature for row in rows]
            eur_path = out_dir / f"eur_delta0_{tag}.svg"
            eur_path.write_text(line_chart(
                [
                    ("U", temps, [row.uncertainty for row in rows]),
                    ("bound", temps, [row.bound for row in rows]),
                    ("tightness", temps, [row.tightness for row in rows]),
                ],
                title=f"uncertainty vs T (delta0 = {tag})",
                xlabel="T", ylabel="bits",
            ), encoding="utf-8")
            written.append(eur_path)
            disc_path = out_dir / f"discord_delta0_{tag}.svg"
            disc_path.write_text(line_chart(
                [
                    ("D", temps, [row.discord for row in rows]),
                    ("M", temps, [row.missing_info for row in rows]),
                ],
                title=f"discord and missing information vs T (delta0 = {tag})",
                xlabel="T", ylabel="bits",
            ), encoding="utf-8")
            written.append(disc_path)
    return written


def run_and_write(config: SweepConfig) -> list[Path]:
    return write_sweep(config, run_sweep(config))
