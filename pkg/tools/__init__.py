from tools.trace_io import read_trace, trace_columns, write_trace
from tools.report_writer import node_bounds, read_bounds, write_report
from tools.plotter import emit_plots
__all__ = ["read_trace","trace_columns","write_trace","node_bounds","read_bounds","write_report","emit_plots"]
