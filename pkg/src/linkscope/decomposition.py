"""Biconnected blocks and canonical triconnected components.

The triconnected decomposition splits a block at separation pairs until no
piece can be split further, inserting a virtual edge between the pair in each
side, then merges series polygons back together.  The canonical form produced
here has no bond components: a separation pair shared by k sides simply
appears as k copies of the pair edge (virtual in all sides but at most one).
When the pair is an actual graph edge, that edge is assigned to the
canonically smallest component attached to the pair, and the others keep a
virtual copy.  Components of two nodes never arise, which keeps the placement
algorithm's per-component loop honest about its size guard.

Split order does not affect the result: the rigid (3-connected) pieces are
unique, and the polygon merge closes any chain of cycle fragments back into
the maximal polygon.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .connectivity import cut_vertices
from .errors import DisconnectedError
from .graph import Edge, Graph, edge, is_connected


@dataclass(frozen=True)
class BiconnectedComponent:
    """A block of the host graph: maximal subgraph without a cut vertex."""

    nodes: frozenset[int]
    edges: frozenset[Edge]
    cut_vertices: frozenset[int]  # cut vertices of the host graph inside the block

    @property
    def c_b(self) -> int:
        return len(self.cut_vertices)


@dataclass(frozen=True)
class TriconnectedComponent:
    """One canonical component of a block: rigid piece or maximal polygon.

    ``attachment_pairs`` are the separation pairs through which the component
    meets its siblings; they include the pair of a real edge that was assigned
    here in place of its virtual copy.  ``separation_vertices`` unions the
    members of those pairs with the host graph's cut vertices lying inside.
    """

    nodes: frozenset[int]
    real_edges: frozenset[Edge]
    virtual_edges: frozenset[Edge]
    attachment_pairs: frozenset[Edge]
    separation_vertices: frozenset[int]

    @property
    def s_t(self) -> int:
        return len(self.separation_vertices)

    def all_edges(self) -> frozenset[Edge]:
        return self.real_edges | self.virtual_edges


def biconnected_components(g: Graph) -> list[BiconnectedComponent]:
    """Standard block decomposition; blocks sorted by smallest contained node."""
    if not is_connected(g):
        raise DisconnectedError("graph must be connected")
    cuts = cut_vertices(g)
    blocks: list[frozenset[Edge]] = []
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    counter = 0
    edge_stack: list[Edge] = []
    for root in g.sorted_nodes():
        if root in disc:
            continue
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
                    if disc[w] < disc[u]:
                        edge_stack.append(edge(u, w))
                        low[u] = min(low[u], disc[w])
                    continue
                disc[w] = low[w] = counter
                counter += 1
                edge_stack.append(edge(u, w))
                stack.append((w, u, iter(sorted(g.adj[w]))))
                advanced = True
                break
            if not advanced:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[u])
                    if low[u] >= disc[parent]:
                        block: set[Edge] = set()
                        while True:
                            e = edge_stack.pop()
                            block.add(e)
                            if e == edge(parent, u):
                                break
                        blocks.append(frozenset(block))
    out = []
    for block_edges in blocks:
        nodes = frozenset(v for e in block_edges for v in e)
        out.append(BiconnectedComponent(nodes, block_edges, cuts & nodes))
    out.sort(key=lambda b: (min(b.nodes), sorted(b.nodes), sorted(b.edges)))
    return out


# ---------------------------------------------------------------------------
# triconnected splitting


def _separation_pairs(nodes: frozenset[int], adj: dict[int, set[int]]) -> list[tuple[int, int]]:
    """All 2-node cuts of the piece, sorted."""
    if len(nodes) < 4:
        return []
    pairs = []
    ordered = sorted(nodes)
    for a, b in combinations(ordered, 2):
        remaining = nodes - {a, b}
        start = min(remaining)
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w in remaining and w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) < len(remaining):
            pairs.append((a, b))
    return pairs


def _piece_adj(nodes: frozenset[int], edges: set[Edge]) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {v: set() for v in nodes}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _is_polygon(nodes: frozenset[int], edges: set[Edge]) -> bool:
    if len(edges) != len(nodes) or len(nodes) < 3:
        return False
    adj = _piece_adj(nodes, edges)
    if any(len(ns) != 2 for ns in adj.values()):
        return False
    # degree-2 everywhere with |E| == |V|: a single cycle iff connected
    start = min(nodes)
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(nodes)


def _comp_key(piece: tuple[frozenset[int], set[Edge], set[Edge]]):
    nodes, real, virtual = piece
    return (sorted(nodes), sorted(real), sorted(virtual))


def triconnected_components(b: BiconnectedComponent, g: Graph) -> list[TriconnectedComponent]:
    """Canonical triconnected components of a block with at least 3 nodes."""
    if len(b.nodes) < 3:
        raise ValueError("triconnected decomposition needs a block of >= 3 nodes")
    if not b.edges <= g.edges or not b.nodes <= g.nodes:
        raise ValueError("component does not belong to the given graph")

    pending: set[Edge] = set()  # pair edges of the graph, awaiting assignment
    atoms: list[tuple[frozenset[int], set[Edge], set[Edge]]] = []
    work: list[tuple[frozenset[int], set[Edge], set[Edge]]] = [
        (b.nodes, set(b.edges), set())
    ]
    while work:
        nodes, real, virtual = work.pop()
        adj = _piece_adj(nodes, real | virtual)
        pairs = _separation_pairs(nodes, adj)
        if not pairs:
            atoms.append((nodes, real, virtual))
            continue
        a, bb = pairs[0]
        pair_edge = edge(a, bb)
        if pair_edge in real:
            pending.add(pair_edge)
            real = real - {pair_edge}
        remaining = nodes - {a, bb}
        comps: list[set[int]] = []
        seen: set[int] = set()
        for s in sorted(remaining):
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w in remaining and w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(comp)
        for comp in comps:
            side_nodes = frozenset(comp | {a, bb})
            side_real = {e for e in real if e[0] in side_nodes and e[1] in side_nodes}
            side_virtual = {e for e in virtual if e[0] in side_nodes and e[1] in side_nodes}
            side_virtual.add(pair_edge)
            work.append((side_nodes, side_real, side_virtual))

    # merge chains of polygons: a pair edge shared by exactly two polygon
    # atoms (and not pending as a real edge) is a series join
    merged = True
    while merged:
        merged = False
        users: dict[Edge, list[int]] = {}
        for idx, (_, _, virtual) in enumerate(atoms):
            for e in virtual:
                users.setdefault(e, []).append(idx)
        for e in sorted(users):
            if e in pending or len(users[e]) != 2:
                continue
            i, j = users[e]
            ni, ri, vi = atoms[i]
            nj, rj, vj = atoms[j]
            if not (_is_polygon(ni, ri | vi) and _is_polygon(nj, rj | vj)):
                continue
            fused_nodes = ni | nj
            fused_real = ri | rj
            fused_virtual = (vi | vj) - {e}
            if not _is_polygon(fused_nodes, fused_real | fused_virtual):
                raise AssertionError("polygon merge produced a non-polygon")
            atoms = [p for k, p in enumerate(atoms) if k not in (i, j)]
            atoms.append((fused_nodes, fused_real, fused_virtual))
            merged = True
            break

    # hand each pending real pair edge to the canonically smallest component
    # attached to its pair; the rest keep the virtual copy
    assigned: dict[int, set[Edge]] = {}
    for e in sorted(pending):
        holders = [i for i, (_, _, virtual) in enumerate(atoms) if e in virtual]
        target = min(holders, key=lambda i: _comp_key(atoms[i]))
        nodes, real, virtual = atoms[target]
        atoms[target] = (nodes, real | {e}, virtual - {e})
        assigned.setdefault(target, set()).add(e)

    cuts = cut_vertices(g) if is_connected(g) else frozenset()
    out = []
    for idx, (nodes, real, virtual) in enumerate(atoms):
        pairs = frozenset(virtual) | frozenset(assigned.get(idx, set()))
        sep = (cuts & nodes) | {v for e in pairs for v in e}
        out.append(
            TriconnectedComponent(
                nodes=nodes,
                real_edges=frozenset(real),
                virtual_edges=frozenset(virtual),
                attachment_pairs=pairs,
                separation_vertices=frozenset(sep),
            )
        )
    out.sort(key=lambda t: (sorted(t.nodes), sorted(t.real_edges), sorted(t.virtual_edges)))
    return out


def separation_vertices(t: TriconnectedComponent, g: Graph) -> frozenset[int]:
    """Nodes counted by s_t: host cut vertices in the component plus members
    of the separation pairs the component attaches through."""
    cuts = cut_vertices(g) if is_connected(g) else frozenset()
    return (cuts & t.nodes) | frozenset(v for e in t.attachment_pairs for v in e)
