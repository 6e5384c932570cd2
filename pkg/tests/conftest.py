from pathlib import Path

import numpy as np
import pytest

from grid.parameters import GridParameters
from grid.topology import GridTopology, incidence_matrix
from tests.factories import case_params as _case_params, case_topology as _case_topology

ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture
def rng():
    return np.random.default_rng(20240617)


@pytest.fixture
def case_params():
    return _case_params()


@pytest.fixture
def case_topology():
    return _case_topology()


@pytest.fixture
def case_B(case_topology):
    return incidence_matrix(case_topology)


@pytest.fixture
def case_config_path():
    return ROOT / "config" / "scenarios" / "paper_sec4.json"


@pytest.fixture
def two_node_grid():
    params = GridParameters(L=[2e-3, 2e-3], C=[2e-3, 2e-3], G=[0.05, 0.04], G_l=[0.0475, 0.038], G_h=[0.0525, 0.042],
                            V_s=[380.0, 380.0], v_l=[229.0, 229.0], v_h=[231.0, 231.0], I_l=[10.0, 8.0],
                            I_h=[13.0, 10.5], R=[0.5])
    return params, GridTopology(2, ((1, 2),))
