from sim.events import LoadScale, apply_event
from sim.scenario import Scenario, SwitchPolicy, default_initial_state
from sim.trace import Trace, TraceRecord
from sim.integrator import Rk4Stepper, integrate_step
from sim.report import NodeSafety, SafetyReport, safety_report
from sim.runner import run_scenario
__all__ = ["LoadScale","apply_event","Scenario","SwitchPolicy","default_initial_state","Trace","TraceRecord",
    "Rk4Stepper","integrate_step","NodeSafety","SafetyReport","safety_report","run_scenario"]
