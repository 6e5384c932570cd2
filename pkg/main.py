"""Microgrid Safety Lab: command-line entry point (run, equilibrium, validate, plot)."""
import argparse
import json
import logging
from pathlib import Path
import sys

from config.settings import LOG_LEVEL, output_dir_override
from controllers.types import ControllerMode
from engine import MicrogridEngine
from errors import ExitCode, MicrogridError
from tools.plotter import emit_plots

logger = logging.getLogger("cli")


def cmd_run(args) -> int:
    engine = MicrogridEngine(args.config)
    result = engine.run_simulation(dt=args.dt, duration=args.duration, mode=args.mode, seed=args.seed,
                                   randomize_load=args.randomize_load)
    out_dir = Path(args.out or output_dir_override() or engine.config.output.directory)
    paths = engine.save_outputs(result, out_dir, plots=engine.config.output.plots and not args.no_plots)
    m = result["metrics"]
    print(f"{result['scenario']}: {m['samples']} samples in {m['latency_seconds']}s, "
          f"{m['post_entry_violations']} post-entry violations")
    print(f"Trace -> {paths['trace']}\nReport -> {paths['json']}")
    if m["post_entry_violations"]:
        for v in result["safety"]["post_entry_violations"]:
            logger.error(f"Node {v['node']} {v['objective']} violation on [{v['start']:.6g}, {v['end']:.6g}] s")
        return ExitCode.SAFETY_VIOLATION
    return ExitCode.OK


def cmd_equilibrium(args) -> int:
    result = MicrogridEngine(args.config).run_equilibrium(args.target)
    print(f"{'node':>4} {'u_bar':>12} {'I_bar (A)':>12} {'V_bar (V)':>12}")
    for i, (u, I, V) in enumerate(zip(result["u_bar"], result["I_bar"], result["V_bar"]), start=1):
        print(f"{i:>4} {u:>12.6f} {I:>12.6f} {V:>12.6f}")
    return ExitCode.OK


def cmd_validate(args) -> int:
    result = MicrogridEngine(args.config).run_validation()
    print(json.dumps({k: v for k, v in result.items() if k != "metrics"}, indent=2))
    return ExitCode.OK if result["passed"] else ExitCode.ASSUMPTION


def cmd_plot(args) -> int:
    out_dir = Path(args.out) if args.out else Path(args.trace).parent
    for path in emit_plots(args.trace, out_dir, report_path=args.report):
        print(path)
    return ExitCode.OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="microgrid", description="Safety-filtered DC microgrid simulator")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="Simulate a scenario and write trace, report and plots")
    run.add_argument("config", help="Scenario JSON file")
    run.add_argument("--dt", type=float, default=None, help="Integration step (s)")
    run.add_argument("--duration", type=float, default=None, help="Horizon (s)")
    run.add_argument("--out", default=None, help="Output directory")
    run.add_argument("--seed", type=int, default=None, help="Seed for --randomize-load")
    run.add_argument("--mode", choices=[m.value for m in ControllerMode], default=None,
                     help="Controller mode for every node")
    run.add_argument("--randomize-load", action="store_true", help="Draw the plant load uniformly in [G_l, G_h]")
    run.add_argument("--no-plots", action="store_true")
    run.set_defaults(func=cmd_run)

    eq = sub.add_parser("equilibrium", help="Forced equilibrium for a uniform voltage target")
    eq.add_argument("config")
    eq.add_argument("--target", type=float, required=True, help="Target voltage (V)")
    eq.set_defaults(func=cmd_equilibrium)

    val = sub.add_parser("validate", help="Check the scenario's modelling assumptions")
    val.add_argument("config")
    val.set_defaults(func=cmd_validate)

    plot = sub.add_parser("plot", help="Draw voltage, current and duty plots from a trace file")
    plot.add_argument("trace")
    plot.add_argument("--report", default=None, help="report.json for bound guide lines")
    plot.add_argument("--out", default=None)
    plot.set_defaults(func=cmd_plot)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=LOG_LEVEL, format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return int(args.func(args))
    except MicrogridError as e:
        logger.error(str(e))
        return int(e.exit_code)
    except OSError as e:
        logger.error(str(e))
        return int(ExitCode.IO)


if __name__ == "__main__":
    sys.exit(main())
