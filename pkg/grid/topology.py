"""Grid topology: oriented graph of DGUs and resistive lines, incidence matrix."""
from dataclasses import dataclass
import logging

import networkx as nx
import numpy as np

from errors import TopologyError

logger = logging.getLogger("grid")


@dataclass(frozen=True)
class GridTopology:
    """n DGUs (1-based indices) and m lines; each edge is (head, tail), head gets +1."""
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(h), int(t)) for h, t in self.edges))
        if self.n < 1:
            raise TopologyError(f"Topology needs at least one node, got n={self.n}")
        for k, (head, tail) in enumerate(self.edges, start=1):
            if not (1 <= head <= self.n and 1 <= tail <= self.n):
                raise TopologyError(f"Edge {k} ({head}, {tail}) has a node index outside [1, {self.n}]")
            if head == tail:
                raise TopologyError(f"Edge {k} is a self-loop at node {head}")
        if not nx.is_connected(self.graph()):
            raise TopologyError(f"Topology with {self.n} nodes and {self.m} edges is not connected")

    @property
    def m(self) -> int:
        return len(self.edges)

    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(1, self.n + 1))
        g.add_edges_from(self.edges)
        return g


def incidence_matrix(topology: GridTopology) -> np.ndarray:
    """Signed n x m integer matrix: +1 at the head, -1 at the tail of each edge, so B^T 1 = 0."""
    B = np.zeros((topology.n, topology.m), dtype=np.int64)
    for k, (head, tail) in enumerate(topology.edges):
        if not (1 <= head <= topology.n and 1 <= tail <= topology.n):
            raise TopologyError(f"Edge {k + 1} ({head}, {tail}) has a node index outside [1, {topology.n}]")
        B[head - 1, k] = 1
        B[tail - 1, k] = -1
    B.setflags(write=False)
    return B


def ring_topology(n: int) -> GridTopology:
    """Ring 1-2-...-n-1, the layout of the 4-DGU case study."""
    if n == 1:
        return GridTopology(1, ())
    if n == 2:
        return GridTopology(2, ((1, 2),))
    return GridTopology(n, tuple((i, i % n + 1) for i in range(1, n + 1)))
