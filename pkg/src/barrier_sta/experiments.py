"""Experiment runner: trajectory/metrics CSV emission and run comparison.

CSV numbers use the shortest round-trip decimal representation (Python
repr), so emitted files are byte-stable across runs and parse back to the
exact same doubles; regression tests hash them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .diagnostics import Metrics, extract_metrics
from .engine import NumericalBlowup, TrajectoryLog, simulate
from .scenario import Scenario

TRAJECTORY_HEADER = "t,s,u,u2,phi,L,phase,gamma,delta,delta_dot,sat_flag"
METRICS_HEADER = "name,t_bar,sup_s_post,sup_phi_tail,L_max,L_min_barrier,sat_count,converged"
COMPARE_HEADER = "name,t_bar,sup_s_post,sup_phi_tail,L_max,sat_count,error"


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return repr(value)


def write_trajectory_csv(log: TrajectoryLog, path: str | Path) -> Path:
    """Write the full column contract; overwrites."""
    path = Path(path)
    columns = [log.column(name).tolist() for name in TrajectoryLog.COLUMNS]
    with open(path, "w", newline="") as f:
        f.write(TRAJECTORY_HEADER + "\n")
        f.writelines(",".join(map(repr, row)) + "\n" for row in zip(*columns))
    return path


def read_trajectory_csv(path: str | Path) -> dict[str, np.ndarray]:
    """Parse an emitted trajectory CSV back into column arrays (exact values)."""
    path = Path(path)
    with open(path) as f:
        header = f.readline().rstrip("\n")
        if header != TRAJECTORY_HEADER:
            raise ValueError(f"{path}: unexpected trajectory header {header!r}")
        raw = [line.rstrip("\n").split(",") for line in f if line.strip()]
    if not raw:
        return {name: np.empty(0) for name in TrajectoryLog.COLUMNS}
    cols = list(zip(*raw))
    if len(cols) != len(TrajectoryLog.COLUMNS):
        raise ValueError(f"{path}: expected {len(TrajectoryLog.COLUMNS)} columns")
    out = {}
    for name, values in zip(TrajectoryLog.COLUMNS, cols):
        if name in ("phase", "sat_flag"):
            out[name] = np.array([int(v) for v in values], dtype=np.int64)
        else:
            out[name] = np.array([float(v) for v in values], dtype=np.float64)
    return out


def write_metrics_csv(name: str, metrics: Metrics, path: str | Path) -> Path:
    path = Path(path)
    row = [name, _fmt(metrics.t_bar), _fmt(metrics.sup_s_post), _fmt(metrics.sup_phi_tail),
           _fmt(metrics.L_max), _fmt(metrics.L_min_barrier), str(metrics.sat_count),
           _fmt(metrics.converged)]
    path.write_text(METRICS_HEADER + "\n" + ",".join(row) + "\n")
    return path


def run(scenario: Scenario, out_dir: str | Path) -> tuple[Path, Path]:
    """Simulate one scenario and emit its trajectory and metrics CSVs."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    log = simulate(scenario)
    metrics = extract_metrics(log, scenario)
    traj_path = write_trajectory_csv(log, out_dir / f"{scenario.name}_trajectory.csv")
    metrics_path = write_metrics_csv(scenario.name, metrics,
                                     out_dir / f"{scenario.name}_metrics.csv")
    return traj_path, metrics_path


@dataclass(frozen=True)
class CompareRow:
    name: str
    metrics: Metrics | None
    error: str | None = None


def compare(scenarios: list[Scenario], out_dir: str | Path) -> tuple[list[CompareRow], Path]:
    """Run several scenarios and tabulate their metrics side by side.

    A failing row (blowup, I/O) is recorded as an error and the remaining
    rows still run; order follows the input.
    """
    if len(scenarios) < 2:
        raise ValueError("compare needs at least 2 scenarios")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    rows: list[CompareRow] = []
    for scenario in scenarios:
        try:
            log = simulate(scenario)
            metrics = extract_metrics(log, scenario)
            write_trajectory_csv(log, out_dir / f"{scenario.name}_trajectory.csv")
            write_metrics_csv(scenario.name, metrics, out_dir / f"{scenario.name}_metrics.csv")
            rows.append(CompareRow(scenario.name, metrics))
        except (NumericalBlowup, OSError) as exc:
            rows.append(CompareRow(scenario.name, None, error=str(exc)))
    csv_path = out_dir / "compare_summary.csv"
    with open(csv_path, "w", newline="") as f:
        f.write(COMPARE_HEADER + "\n")
        for r in rows:
            if r.metrics is None:
                f.write(f"{r.name},,,,,,{r.error}\n")
            else:
                m = r.metrics
                f.write(",".join([r.name, _fmt(m.t_bar), _fmt(m.sup_s_post),
                                  _fmt(m.sup_phi_tail), _fmt(m.L_max),
                                  str(m.sat_count), ""]) + "\n")
    return rows, csv_path


def format_compare_table(rows: list[CompareRow]) -> str:
    """Human-readable summary table (CSV keeps the exact values)."""
    headers = ("scenario", "t_bar", "sup|s| post", "sup|phi| tail", "L_max", "sat", "error")
    table = [headers]
    for r in rows:
        if r.metrics is None:
            table.append((r.name, "-", "-", "-", "-", "-", r.error or ""))
        else:
            m = r.metrics
            table.append((r.name, f"{m.t_bar:.6g}", f"{m.sup_s_post:.6g}",
                          f"{m.sup_phi_tail:.6g}", f"{m.L_max:.6g}",
                          str(m.sat_count), ""))
    widths = [max(len(row[i]) for row in table) for i in range(len(headers))]
    lines = []
    for idx, row in enumerate(table):
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
        if idx == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)
