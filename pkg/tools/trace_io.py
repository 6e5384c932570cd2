"""Trace file: CSV, one row per sample, 17 significant digits so a re-read is exact."""
from pathlib import Path

import numpy as np
import pandas as pd

from errors import TraceFormatError
from sim.trace import Trace

GROUPS = ("I", "V", "u", "eps_l", "eps_h", "mode")
MODES = ("relaxed", "strict")


def trace_columns(n: int) -> list[str]:
    """Stable column order: t, then each group for nodes 1..n."""
    return ["t"] + [f"{group}_{i}" for group in GROUPS for i in range(1, n + 1)]


def trace_frame(trace: Trace) -> pd.DataFrame:
    data = {"t": trace.t}
    for group, col in (("I", trace.I), ("V", trace.V), ("u", trace.u), ("eps_l", trace.eps_l), ("eps_h", trace.eps_h)):
        for i in range(trace.n):
            data[f"{group}_{i + 1}"] = col[:, i]
    for i in range(trace.n):
        data[f"mode_{i + 1}"] = np.where(trace.strict[:, i], "strict", "relaxed")
    return pd.DataFrame(data, columns=trace_columns(trace.n))


def write_trace(trace: Trace, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    trace_frame(trace).to_csv(path, index=False, float_format="%.17g")
    return path


def read_trace(path) -> Trace:
    """Parse a trace file; anything malformed raises TraceFormatError."""
    path = Path(path)
    try:
        df = pd.read_csv(path, float_precision="round_trip")
    except pd.errors.EmptyDataError:
        raise TraceFormatError(f"{path}: empty trace file") from None
    except pd.errors.ParserError as e:
        raise TraceFormatError(f"{path}: {e}") from None

    if (len(df.columns) - 1) % len(GROUPS) or len(df.columns) < 1 + len(GROUPS):
        raise TraceFormatError(f"{path}: unexpected column count {len(df.columns)}")
    n = (len(df.columns) - 1) // len(GROUPS)
    if list(df.columns) != trace_columns(n):
        raise TraceFormatError(f"{path}: header does not match {trace_columns(n)}")
    if df.empty:
        raise TraceFormatError(f"{path}: trace has no samples")

    numeric = [c for c in df.columns if not c.startswith("mode_")]
    try:
        values = df[numeric].to_numpy(dtype=float)
    except ValueError as e:
        raise TraceFormatError(f"{path}: non-numeric value ({e})") from None
    if not np.all(np.isfinite(values)):
        raise TraceFormatError(f"{path}: non-finite value")
    modes = df[[f"mode_{i}" for i in range(1, n + 1)]].astype(str)
    if not modes.isin(MODES).all().all():
        raise TraceFormatError(f"{path}: mode columns must be 'relaxed' or 'strict'")

    t = df["t"].to_numpy(dtype=float)
    if np.any(np.diff(t) <= 0):
        raise TraceFormatError(f"{path}: time column is not strictly increasing")

    def block(group):
        return df[[f"{group}_{i}" for i in range(1, n + 1)]].to_numpy(dtype=float)

    return Trace(t=t, I=block("I"), V=block("V"), u=block("u"), eps_l=block("eps_l"), eps_h=block("eps_h"),
                 strict=(modes == "strict").to_numpy())
