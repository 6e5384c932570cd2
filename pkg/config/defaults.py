"""Defaults for values the bundled scenario leaves open."""

# Source voltage is not given for the 4-DGU case study; 380 V is a standard DC
# distribution level and sits above every v_h used here.
DEFAULT_SOURCE_VOLTAGE = 380.0

DEFAULT_DT = 1e-5
DEFAULT_SLACK_PENALTY = 1e23

# I(0) = 0.95 * I~_l places each node just below its joint current band.
INITIAL_CURRENT_FACTOR = 0.95

DT_RESOLUTION_FACTOR = 0.1
MONITOR_TOLERANCE = 1e-6
# duration / dt is floored after adding this, so 0.5 / 1e-5 still counts 50000 steps.
STEP_COUNT_SLACK = 1e-9
REPORT_TOLERANCE = 0.0

TRACE_FILE = "trace.csv"
REPORT_JSON = "report.json"
REPORT_MARKDOWN = "report.md"
PLOT_FILES = {"voltage": "voltage.svg", "current": "current.svg", "duty": "duty.svg"}
