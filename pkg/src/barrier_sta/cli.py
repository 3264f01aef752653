"""Command-line interface.

Subcommands: ``run`` (one scenario), ``compare`` (several scenarios side
by side), ``presets list``. Exit codes: 0 success, 1 usage/validation
error, 2 numerical blowup, 3 I/O error.
"""
from __future__ import annotations

import argparse
import sys

from .engine import NumericalBlowup
from .experiments import compare, format_compare_table, run
from .scenario import (
    PRESET_ALIASES,
    ScenarioError,
    load_preset,
    preset_names,
    resolve_scenario,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BLOWUP = 2
EXIT_IO = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="barrier-sta",
                     description="Super-twisting controller benchmark runner")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="simulate one scenario and write CSVs")
    p_run.add_argument("--scenario", required=True,
                       help="scenario file path or preset name")
    p_run.add_argument("--out", required=True, help="output directory")
    p_run.add_argument("--dt", type=float, help="override integration step (s)")
    p_run.add_argument("--t-end", type=float, help="override horizon (s)")
    p_run.set_defaults(func=_cmd_run)

    p_cmp = sub.add_parser("compare", help="run several scenarios and tabulate metrics")
    p_cmp.add_argument("--scenario", action="append", default=[],
                       help="scenario file path or preset name (repeat; at least 2)")
    p_cmp.add_argument("--out", required=True, help="output directory")
    p_cmp.add_argument("--dt", type=float, help="override integration step for all rows")
    p_cmp.add_argument("--t-end", type=float, help="override horizon for all rows")
    p_cmp.set_defaults(func=_cmd_compare)

    p_presets = sub.add_parser("presets", help="bundled scenario presets")
    presets_sub = p_presets.add_subparsers(dest="presets_command", required=True)
    p_list = presets_sub.add_parser("list", help="list bundled presets")
    p_list.set_defaults(func=_cmd_presets_list)

    return parser


def _cmd_run(args) -> int:
    scenario = resolve_scenario(args.scenario).with_overrides(dt=args.dt, t_end=args.t_end)
    traj_path, metrics_path = run(scenario, args.out)
    print(f"trajectory: {traj_path}")
    print(f"metrics:    {metrics_path}")
    return EXIT_OK


def _cmd_compare(args) -> int:
    if len(args.scenario) < 2:
        raise UsageError("compare needs at least 2 --scenario arguments")
    scenarios = [resolve_scenario(ref).with_overrides(dt=args.dt, t_end=args.t_end)
                 for ref in args.scenario]
    rows, csv_path = compare(scenarios, args.out)
    print(format_compare_table(rows))
    print(f"summary CSV: {csv_path}")
    return EXIT_OK


def _cmd_presets_list(args) -> int:
    for name in preset_names():
        if name in PRESET_ALIASES:
            print(f"{name:14s} alias of {PRESET_ALIASES[name]}")
        else:
            scenario = load_preset(name)
            print(f"{name:14s} {scenario.controller} controller, "
                  f"{type(scenario.disturbance).__name__}, s0={scenario.s0:g}, "
                  f"epsilon={scenario.epsilon:g}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalBlowup as exc:
        print(f"error: numerical blowup: {exc}", file=sys.stderr)
        return EXIT_BLOWUP
    except OSError as exc:
        print(f"error: I/O failure: {exc}", file=sys.stderr)
        return EXIT_IO


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
