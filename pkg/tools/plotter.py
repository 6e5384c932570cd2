"""Voltage, current and duty-ratio plots (SVG) from a trace file."""
import logging
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from config.defaults import PLOT_FILES
from tools.report_writer import read_bounds
from tools.trace_io import read_trace

logger = logging.getLogger("plotter")


def _node_plot(t, series, ylabel: str, title: str):
    fig, ax = plt.subplots(figsize=(7, 3.5))
    lines = []
    for i in range(series.shape[1]):
        (line,) = ax.plot(t, series[:, i], linewidth=1.2, label=f"node {i + 1}")
        lines.append(line)
    ax.set_xlabel("t (s)")
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    ax.grid(True, alpha=0.3)
    return fig, ax, lines


def emit_plots(trace_path, out_dir, report_path=None, bounds: list[dict] | None = None) -> list[Path]:
    """Write voltage.svg, current.svg and duty.svg; bound guide lines come from `bounds` or report.json."""
    trace = read_trace(trace_path)
    if bounds is None and report_path is not None:
        bounds = read_bounds(report_path)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []

    # ─── Voltage ───
    fig, ax, lines = _node_plot(trace.t, trace.V, "V (V)", "Load voltage per DGU")
    if bounds:
        for level in sorted({b["v_l"] for b in bounds} | {b["v_h"] for b in bounds}):
            ax.axhline(level, color="black", linestyle="--", linewidth=0.8)
    ax.legend(loc="best")
    written.append(out_dir / PLOT_FILES["voltage"])
    fig.savefig(written[-1], format="svg", bbox_inches="tight")
    plt.close(fig)

    # ─── Current ───
    fig, ax, lines = _node_plot(trace.t, trace.I, "I (A)", "Generated current per DGU")
    if bounds:
        for line, b in zip(lines, bounds):
            for level in (b["I_l"], b["I_h"]):
                ax.axhline(level, color=line.get_color(), linestyle="--", linewidth=0.8)
    ax.legend(loc="best")
    written.append(out_dir / PLOT_FILES["current"])
    fig.savefig(written[-1], format="svg", bbox_inches="tight")
    plt.close(fig)

    # ─── Duty ratio ───
    fig, ax, lines = _node_plot(trace.t, trace.u, "u", "Duty ratio per DGU")
    ax.set_ylim(-0.02, 1.02)
    ax.legend(loc="best")
    written.append(out_dir / PLOT_FILES["duty"])
    fig.savefig(written[-1], format="svg", bbox_inches="tight")
    plt.close(fig)

    logger.info(f"Wrote {len(written)} plots to {out_dir}")
    return written
