"""Bridges, cut vertices and k-connectivity tests.

Bridges and cut vertices use the usual DFS lowpoint computation.  The
k-connectivity predicates enumerate deletion subsets directly: callers only
ever need k <= 3 on desk-scale graphs, and enumeration keeps the logic close
to the definition (an independent Menger-style oracle cross-checks it in the
test suite).
"""

from __future__ import annotations

from itertools import combinations

from .errors import DisconnectedError
from .graph import Edge, Graph, connected_without, edge, is_connected, remove_edge


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedError("graph must be connected")


def bridges(g: Graph) -> frozenset[Edge]:
    """Edges whose removal disconnects the (connected) graph."""
    _require_connected(g)
    return _bridges_any(g)


def _bridges_any(g: Graph) -> frozenset[Edge]:
    """Bridge set of an arbitrary graph, per component; iterative lowpoint DFS."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    out: set[Edge] = set()
    counter = 0
    for root in g.sorted_nodes():
        if root in disc:
            continue
        # stack entries: (node, parent, iterator over sorted neighbours)
        disc[root] = low[root] = counter
        counter += 1
        stack = [(root, -1, iter(sorted(g.adj[root])))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w in disc:
                    low[u] = min(low[u], disc[w])
                    continue
                disc[w] = low[w] = counter
                counter += 1
                stack.append((w, u, iter(sorted(g.adj[w]))))
                advanced = True
                break
            if not advanced:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[u])
                    if low[u] > disc[parent]:
                        out.add(edge(parent, u))
    return frozenset(out)


def cut_vertices(g: Graph) -> frozenset[int]:
    """Nodes whose removal disconnects the (connected) graph."""
    _require_connected(g)
    return _cut_vertices_any(g)


def _cut_vertices_any(g: Graph) -> frozenset[int]:
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    out: set[int] = set()
    counter = 0
    for root in g.sorted_nodes():
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        stack = [(root, -1, iter(sorted(g.adj[root])))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w in disc:
                    low[u] = min(low[u], disc[w])
                    continue
                disc[w] = low[w] = counter
                counter += 1
                if u == root:
                    root_children += 1
                stack.append((w, u, iter(sorted(g.adj[w]))))
                advanced = True
                break
            if not advanced:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[u])
                    if parent != root and low[u] >= disc[parent]:
                        out.add(parent)
        if root_children > 1:
            out.add(root)
    return frozenset(out)


def is_k_vertex_connected(g: Graph, k: int) -> bool:
    """Standard definition: more than k nodes, and no deletion of fewer than
    k nodes disconnects the graph.  K_n therefore reports connectivity n-1."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    if g.node_count <= k:
        return False
    if not is_connected(g):
        return False
    nodes = g.sorted_nodes()
    for r in range(1, k):
        for subset in combinations(nodes, r):
            if not connected_without(g, frozenset(subset)):
                return False
    return True


def is_k_edge_connected(g: Graph, k: int) -> bool:
    """Connected, and no deletion of fewer than k edges disconnects it."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    if not is_connected(g):
        return False
    if k == 1:
        return True
    if _bridges_any(g):
        return False
    if k == 2:
        return True
    if k == 3:
        # no single edge is a bridge, so check bridges of every g - e
        for e in g.sorted_edges():
            if _bridges_any(remove_edge(g, e)):
                return False
        return True
    edges = g.sorted_edges()
    for r in range(2, k):
        for subset in combinations(edges, r):
            if not is_connected(Graph(g.nodes, g.edges - set(subset))):
                return False
    return True


def vertex_connectivity(g: Graph) -> int:
    """Greatest k for which is_k_vertex_connected holds (0 for trivial graphs)."""
    k = 0
    while is_k_vertex_connected(g, k + 1):
        k += 1
    return k
