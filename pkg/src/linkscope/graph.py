"""Immutable simple undirected graphs and the edge-list text format.

Node ids are caller-supplied non-negative integers and are never renumbered:
every result that cites a node must use the caller's own names.  All mutating
operations return a fresh graph, so search code can fork thousands of variants
without aliasing worries.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import (
    DuplicateEdgeError,
    GraphParseError,
    InvalidCycleError,
    InvalidPathError,
    NotFoundError,
    SelfLoopError,
)

NodeId = int
Edge = tuple[int, int]
Path = tuple[int, ...]
Cycle = tuple[int, ...]


def edge(u: int, v: int) -> Edge:
    """Normalise an unordered node pair to the canonical (min, max) tuple."""
    if u == v:
        raise ValueError(f"self-loop at node {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """A simple undirected graph: frozen node set, frozen edge set.

    Equality and hashing are structural.  Adjacency is precomputed once at
    construction; neighbour iteration order is always explicitly sorted where
    determinism matters.
    """

    __slots__ = ("nodes", "edges", "adj")

    nodes: frozenset[int]
    edges: frozenset[Edge]
    adj: dict[int, frozenset[int]]

    def __init__(self, nodes: Iterable[int] = (), edges: Iterable[Edge] = ()):
        node_set = set()
        for v in nodes:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValueError(f"node ids must be non-negative integers, got {v!r}")
            node_set.add(v)
        edge_set = set()
        for u, v in edges:
            edge_set.add(edge(u, v))
            node_set.add(u)
            node_set.add(v)
        adj: dict[int, set[int]] = {v: set() for v in node_set}
        for u, v in edge_set:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "nodes", frozenset(node_set))
        object.__setattr__(self, "edges", frozenset(edge_set))
        object.__setattr__(self, "adj", {v: frozenset(ns) for v, ns in adj.items()})

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and v in self.adj.get(u, frozenset())

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self.adj[v]
        except KeyError:
            raise NotFoundError(f"node {v} not in graph") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def sorted_nodes(self) -> list[int]:
        return sorted(self.nodes)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.nodes == other.nodes and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.nodes, self.edges))

    def __repr__(self) -> str:
        return f"Graph(nodes={sorted(self.nodes)}, edges={sorted(self.edges)})"

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")


# ---------------------------------------------------------------------------
# construction / mutation operators


def parse_graph(text: str) -> Graph:
    """Parse edge-list text: one "u v" pair per line, '#' starts a comment.

    An optional leading header "nodes: n" declares the node set {1..n}, which
    is the only way to express isolated nodes.
    """
    nodes: set[int] = set()
    header_nodes: set[int] | None = None
    edges: set[Edge] = set()
    seen_edge_line = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("nodes:"):
            if seen_edge_line or header_nodes is not None:
                raise GraphParseError("header 'nodes: n' must come first", lineno)
            try:
                n = int(line.split(":", 1)[1].strip())
            except ValueError:
                raise GraphParseError("malformed node-count header", lineno) from None
            if n < 0:
                raise GraphParseError("node count must be non-negative", lineno)
            header_nodes = set(range(1, n + 1))
            continue
        seen_edge_line = True
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"malformed token in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise GraphParseError("node ids must be non-negative", lineno)
        if u == v:
            raise SelfLoopError(f"self-loop at node {u}", lineno)
        e = edge(u, v)
        if e in edges:
            raise DuplicateEdgeError(f"duplicate edge {u} {v}", lineno)
        if header_nodes is not None and not (u in header_nodes and v in header_nodes):
            raise GraphParseError(f"edge {u} {v} outside declared node range", lineno)
        edges.add(e)
        nodes.add(u)
        nodes.add(v)
    if header_nodes is not None:
        nodes = header_nodes
    return Graph(nodes, edges)


def serialize(g: Graph) -> str:
    """Canonical edge-list text: header when nodes are {1..n}, sorted edges.

    Round-trips through parse_graph.  Graphs with isolated nodes and a
    non-contiguous node set have no header form and are rejected.
    """
    n = g.node_count
    contiguous = g.nodes == frozenset(range(1, n + 1))
    covered = {v for e in g.edges for v in e}
    if not contiguous and covered != g.nodes:
        raise ValueError("isolated nodes need a contiguous 1..n node set to serialise")
    lines = []
    if contiguous:
        lines.append(f"nodes: {n}")
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def remove_edge(g: Graph, e: Edge) -> Graph:
    """Delete one edge; the node set is preserved (endpoints may go isolated)."""
    e = edge(*e)
    if e not in g.edges:
        raise NotFoundError(f"edge {e} not in graph")
    return Graph(g.nodes, g.edges - {e})


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u not in g.nodes or v not in g.nodes:
        raise NotFoundError(f"endpoint of ({u}, {v}) not in graph")
    e = edge(u, v)
    if e in g.edges:
        raise DuplicateEdgeError(f"duplicate edge {u} {v}")
    return Graph(g.nodes, g.edges | {e})


def remove_node(g: Graph, v: int) -> Graph:
    if v not in g.nodes:
        raise NotFoundError(f"node {v} not in graph")
    return Graph(g.nodes - {v}, {e for e in g.edges if v not in e})


def is_connected(g: Graph) -> bool:
    """True iff the graph has at most one connected component (empty counts)."""
    if not g.nodes:
        return True
    start = min(g.nodes)
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(g.nodes)


# ---------------------------------------------------------------------------
# paths and cycles


def is_simple_path(g: Graph, path: Path) -> bool:
    """A sequence of distinct nodes, consecutively adjacent; one node is fine."""
    if len(path) == 0:
        return False
    if len(set(path)) != len(path):
        return False
    if any(v not in g.nodes for v in path):
        return False
    return all(g.has_edge(a, b) for a, b in zip(path, path[1:]))


def validate_path(g: Graph, path: Path) -> Path:
    if not is_simple_path(g, path):
        raise InvalidPathError(f"not a simple path of the graph: {path}")
    return tuple(path)


def is_cycle(g: Graph, cycle: Cycle) -> bool:
    """At least 3 distinct nodes, cyclically adjacent (wrap-around included)."""
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        return False
    if any(v not in g.nodes for v in cycle):
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))


def validate_cycle(g: Graph, cycle: Cycle) -> Cycle:
    if not is_cycle(g, cycle):
        raise InvalidCycleError(f"not a cycle of the graph: {cycle}")
    return tuple(cycle)


def cycle_edges(cycle: Cycle) -> list[Edge]:
    return [edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]


def path_edges(path: Path) -> list[Edge]:
    return [edge(a, b) for a, b in zip(path, path[1:])]


def canonical_cycle(cycle: Cycle) -> Cycle:
    """Least tuple over all rotations and both directions; identity for sets."""
    n = len(cycle)
    best: Cycle | None = None
    for seq in (cycle, cycle[::-1]):
        for i in range(n):
            rot = seq[i:] + seq[:i]
            if best is None or rot < best:
                best = rot
    assert best is not None
    return best


def induced_check(g: Graph, cycle: Cycle) -> bool:
    """True iff the cycle is chordless: no graph edge joins two of its
    non-consecutive nodes."""
    cycle = validate_cycle(g, cycle)
    on_cycle = set(cycle_edges(cycle))
    nodes = list(cycle)
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            e = edge(nodes[i], nodes[j])
            if e in g.edges and e not in on_cycle:
                return False
    return True


# ---------------------------------------------------------------------------
# internal reachability helpers shared by the heavier modules


def connected_without(g: Graph, removed: frozenset[int] | set[int]) -> bool:
    """Is the graph connected after deleting `removed`? Empty remainder: yes."""
    remaining = g.nodes - removed
    if not remaining:
        return True
    start = min(remaining)
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w not in removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(remaining)


def components_without(g: Graph, removed: frozenset[int] | set[int]) -> list[set[int]]:
    """Connected components of the graph minus `removed`, sorted by min node."""
    remaining = g.nodes - removed
    comps: list[set[int]] = []
    seen: set[int] = set()
    for s in sorted(remaining):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w in remaining and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(comp)
    return comps


def iter_simple_paths(
    g: Graph,
    src: int,
    dst: int,
    forbidden_internal: frozenset[int] | set[int] = frozenset(),
) -> Iterator[Path]:
    """Yield every simple path src..dst whose internal nodes avoid the given
    set.  Neighbour expansion is sorted, so the yield order is deterministic
    (lexicographic by node sequence)."""
    if src not in g.nodes or dst not in g.nodes:
        raise NotFoundError("path endpoints must be graph nodes")
    if src == dst:
        yield (src,)
        return
    path = [src]
    on_path = {src}

    def _walk(u: int) -> Iterator[Path]:
        for w in sorted(g.adj[u]):
            if w in on_path:
                continue
            if w == dst:
                yield tuple(path) + (dst,)
                continue
            if w in forbidden_internal:
                continue
            path.append(w)
            on_path.add(w)
            yield from _walk(w)
            path.pop()
            on_path.remove(w)

    yield from _walk(src)
