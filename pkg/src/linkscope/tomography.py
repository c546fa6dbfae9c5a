"""Monitor-aware constructs: interior graph, extended graph, and the
connectivity conditions that govern identifiability.

The two-monitor conditions are:

* condition 1 -- removing any single interior link leaves the graph
  2-edge-connected;
* condition 2 -- the graph plus a (possibly already present) direct
  monitor-monitor edge is 3-vertex-connected.

For three or more monitors the extended graph adds two virtual monitors, each
wired to every real monitor, reducing the many-monitor problem to the
two-monitor one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .connectivity import is_k_edge_connected, is_k_vertex_connected
from .errors import NotFoundError, TooFewMonitorsError
from .graph import (
    Edge,
    Graph,
    add_edge,
    components_without,
    edge,
    is_connected,
    remove_edge,
    remove_node,
)

MonitorSet = tuple[int, ...]


def validate_monitors(g: Graph, monitors: MonitorSet, minimum: int = 2) -> MonitorSet:
    ms = tuple(monitors)
    if len(set(ms)) != len(ms):
        raise ValueError("monitor ids must be distinct")
    missing = [m for m in ms if m not in g.nodes]
    if missing:
        raise NotFoundError(f"monitors {missing} not in graph")
    if len(ms) < minimum:
        raise TooFewMonitorsError(f"need at least {minimum} monitors, got {len(ms)}")
    return ms


def validate_monitor_pair(g: Graph, monitors: MonitorSet) -> tuple[int, int]:
    ms = validate_monitors(g, monitors, minimum=2)
    if len(ms) != 2:
        raise ValueError(f"operation is defined for exactly two monitors, got {len(ms)}")
    return ms[0], ms[1]


@dataclass(frozen=True)
class InteriorGraph:
    """What remains after deleting both monitors, plus the cut-off links."""

    graph: Graph
    exterior_links: frozenset[Edge]
    connected: bool


@dataclass(frozen=True)
class ExtendedGraph:
    base: Graph
    graph: Graph
    virtual_1: int
    virtual_2: int
    virtual_edges: frozenset[Edge]
    monitors: MonitorSet


def interior_graph(g: Graph, monitors: MonitorSet) -> InteriorGraph:
    """Delete the two monitors; links incident to either become exterior."""
    m1, m2 = validate_monitor_pair(g, monitors)
    interior = remove_node(remove_node(g, m1), m2)
    exterior = frozenset(e for e in g.edges if m1 in e or m2 in e)
    return InteriorGraph(interior, exterior, is_connected(interior))


def interior_links(g: Graph, monitors: MonitorSet) -> frozenset[Edge]:
    m1, m2 = monitors
    return frozenset(e for e in g.edges if m1 not in e and m2 not in e)


def condition_1(g: Graph, monitors: MonitorSet) -> bool:
    """Every interior link can be removed without creating a bridge."""
    monitors = validate_monitor_pair(g, monitors)
    for link in sorted(interior_links(g, monitors)):
        if not is_k_edge_connected(remove_edge(g, link), 2):
            return False
    return True


def condition_2(g: Graph, monitors: MonitorSet) -> bool:
    """The graph plus the direct monitor-monitor edge is 3-vertex-connected.

    Adding the edge is idempotent when it already exists.
    """
    m1, m2 = validate_monitor_pair(g, monitors)
    h = g if g.has_edge(m1, m2) else add_edge(g, m1, m2)
    return is_k_vertex_connected(h, 3)


def prop2_characterization(g: Graph, monitors: MonitorSet) -> bool:
    """Deletion-based equivalent of condition 2: after deleting any two nodes
    the rest is connected, or every component keeps a surviving monitor."""
    ms = validate_monitors(g, monitors, minimum=2)
    if g.node_count < 4:
        raise ValueError("characterization needs at least 4 nodes")
    for u, v in combinations(g.sorted_nodes(), 2):
        removed = frozenset((u, v))
        comps = components_without(g, removed)
        if len(comps) <= 1:
            continue
        survivors = set(ms) - removed
        if not all(comp & survivors for comp in comps):
            return False
    return True


def extend(g: Graph, monitors: MonitorSet) -> ExtendedGraph:
    """Attach two fresh virtual monitors, each adjacent to every real monitor.

    No edge is placed between the two virtual monitors themselves.
    """
    ms = validate_monitors(g, monitors, minimum=3)
    v1 = max(g.nodes) + 1
    v2 = v1 + 1
    virtual = frozenset(edge(v, m) for v in (v1, v2) for m in ms)
    ext = Graph(g.nodes | {v1, v2}, g.edges | virtual)
    return ExtendedGraph(g, ext, v1, v2, virtual, ms)


def prop5_both_sides(g: Graph, monitors: MonitorSet) -> tuple[bool, bool]:
    """(each real link removable leaving 2-edge-connectivity,
    extended graph 3-edge-connected) -- asserted equal by theory."""
    ext = extend(g, monitors)
    lhs = all(
        is_k_edge_connected(remove_edge(ext.graph, link), 2) for link in g.sorted_edges()
    )
    rhs = is_k_edge_connected(ext.graph, 3)
    return lhs, rhs


def prop6_both_sides(g: Graph, monitors: MonitorSet) -> tuple[bool, bool]:
    """(extended graph plus virtual-virtual edge 3-vertex-connected,
    extended graph 3-vertex-connected) -- asserted equal by theory."""
    ext = extend(g, monitors)
    lhs = is_k_vertex_connected(add_edge(ext.graph, ext.virtual_1, ext.virtual_2), 3)
    rhs = is_k_vertex_connected(ext.graph, 3)
    return lhs, rhs
