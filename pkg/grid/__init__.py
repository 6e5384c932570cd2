from grid.topology import GridTopology, incidence_matrix, ring_topology
from grid.parameters import GridParameters, GridState, NodeParameters
from grid.dynamics import (dynamics, effective_conductance, forced_equilibrium, line_laplacian,
    state_matrix, fastest_time_scale)
from grid.validation import AssumptionCheck, ValidationReport, validate_assumptions
__all__ = ["GridTopology","incidence_matrix","ring_topology","GridParameters","GridState","NodeParameters",
    "dynamics","effective_conductance","forced_equilibrium","line_laplacian","state_matrix","fastest_time_scale",
    "AssumptionCheck","ValidationReport","validate_assumptions"]
