"""Microgrid Safety Lab: exception hierarchy and CLI exit codes."""
from enum import IntEnum


class ExitCode(IntEnum):
    OK = 0
    IO = 1
    SCHEMA = 2
    ASSUMPTION = 3
    NUMERICAL = 4
    INFEASIBLE = 5
    SAFETY_VIOLATION = 6


class MicrogridError(Exception):
    """Base class for every error raised by this package."""
    exit_code = ExitCode.NUMERICAL


class TopologyError(MicrogridError, ValueError):
    exit_code = ExitCode.SCHEMA


class DimensionError(MicrogridError, ValueError):
    exit_code = ExitCode.SCHEMA


class ParameterError(MicrogridError, ValueError):
    exit_code = ExitCode.SCHEMA


class EmptyJointSafeSet(MicrogridError, ValueError):
    """I~_l > I~_h at a node: no state satisfies both voltage and current bounds."""
    exit_code = ExitCode.ASSUMPTION

    def __init__(self, node: int | None, lower: float, upper: float):
        self.node, self.lower, self.upper = node, lower, upper
        where = "" if node is None else f" at node {node}"
        super().__init__(f"Joint safe set empty{where}: I~_l={lower:.6g} > I~_h={upper:.6g}")


class ControllerInfeasible(MicrogridError):
    """Strict QP has no duty ratio in [0, 1] satisfying both barrier constraints."""
    exit_code = ExitCode.INFEASIBLE

    def __init__(self, lb: float, ub: float, node: int | None = None, t: float | None = None):
        self.lb, self.ub, self.node, self.t = lb, ub, node, t
        where = f" at node {node}" if node is not None else ""
        when = f", t={t:.6g}s" if t is not None else ""
        super().__init__(f"Strict QP infeasible{where}{when}: lb={lb:.9g}, ub={ub:.9g}")


class NumericalDivergence(MicrogridError):
    exit_code = ExitCode.NUMERICAL

    def __init__(self, step: int | None = None, detail: str = "non-finite state"):
        self.step = step
        at = f" at step {step}" if step is not None else ""
        super().__init__(f"Numerical divergence{at}: {detail}")


class AssumptionError(MicrogridError):
    exit_code = ExitCode.ASSUMPTION

    def __init__(self, report):
        self.report = report
        failed = ", ".join(f"{c.name} (nodes {list(c.nodes)})" for c in report.failures)
        super().__init__(f"Assumption checks failed: {failed}")


class ConfigNotFound(MicrogridError, FileNotFoundError):
    exit_code = ExitCode.IO


class ConfigError(MicrogridError):
    """Schema violation; `errors` holds (field path, message) pairs."""
    exit_code = ExitCode.SCHEMA

    def __init__(self, errors: list[tuple[str, str]]):
        self.errors = errors
        lines = "; ".join(f"{path}: {msg}" for path, msg in errors)
        super().__init__(f"Invalid scenario config: {lines}")


class TraceFormatError(MicrogridError):
    exit_code = ExitCode.SCHEMA
