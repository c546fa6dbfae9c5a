"""Exhaustive searches for cycle-and-path witness structures.

A non-separating cycle is an induced cycle whose node removal leaves every
remaining node connected to some monitor outside the cycle (vacuously so when
the cycle covers the whole graph).  The witness searches below demonstrate,
by exhaustion at desk scale, that an interior link sits on such a cycle
together with a second cycle and two disjoint monitor attachment paths, and
classify links by whether the attachments can run clear of the second
cycle.  Searches are deterministic: cycles are enumerated in (length,
canonical tuple) order and paths in (length, lexicographic) order, with
first-hit return.  Graphs beyond 12 nodes are rejected up front.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotFoundError, NotInteriorError, TooLargeError
from .graph import (
    Cycle,
    Edge,
    Graph,
    Path,
    canonical_cycle,
    cycle_edges,
    edge,
    induced_check,
    is_simple_path,
    iter_simple_paths,
    validate_cycle,
)
from .tomography import MonitorSet, validate_monitor_pair, validate_monitors

SIZE_GUARD = 12


def _guard(g: Graph) -> None:
    if g.node_count > SIZE_GUARD:
        raise TooLargeError(f"witness search limited to {SIZE_GUARD} nodes, graph has {g.node_count}")


def _require_interior_link(g: Graph, vw: Edge, monitors: MonitorSet) -> Edge:
    e = edge(*vw)
    if e not in g.edges:
        raise NotFoundError(f"edge {e} not in graph")
    if e[0] in monitors or e[1] in monitors:
        raise NotInteriorError(f"link {e} touches a monitor")
    return e


def cycles_through_edge(g: Graph, vw: Edge) -> list[Cycle]:
    """Every cycle containing the edge, canonical, sorted by (length, tuple)."""
    e = edge(*vw)
    if e not in g.edges:
        raise NotFoundError(f"edge {e} not in graph")
    v, w = e
    rest = Graph(g.nodes, g.edges - {e})
    cycles = [canonical_cycle(p) for p in iter_simple_paths(rest, v, w)]
    cycles.sort(key=lambda c: (len(c), c))
    return cycles


def all_cycles(g: Graph) -> list[Cycle]:
    """Every simple cycle of the graph, canonical, sorted by (length, tuple)."""
    out: set[Cycle] = set()
    for anchor in g.sorted_nodes():
        # cycles whose smallest node is the anchor; higher nodes only
        stack: list[tuple[int, tuple[int, ...]]] = [(anchor, (anchor,))]
        while stack:
            u, path = stack.pop()
            for x in sorted(g.adj[u]):
                if x == anchor and len(path) >= 3:
                    if path[1] < path[-1]:
                        out.add(canonical_cycle(path))
                    continue
                if x <= anchor or x in path:
                    continue
                stack.append((x, path + (x,)))
    return sorted(out, key=lambda c: (len(c), c))


def is_nonseparating_cycle(g: Graph, cycle: Cycle, monitors: MonitorSet) -> bool:
    """Induced, and every node left after deleting the cycle can still reach
    some monitor that also survived the deletion (vacuously true when the
    cycle covers the whole graph)."""
    cycle = validate_cycle(g, cycle)
    ms = validate_monitors(g, monitors, minimum=2)
    if not induced_check(g, cycle):
        return False
    remaining = g.nodes - set(cycle)
    if not remaining:
        return True
    seeds = [m for m in ms if m in remaining]
    seen = set(seeds)
    stack = list(seeds)
    while stack:
        u = stack.pop()
        for x in g.adj[u]:
            if x in remaining and x not in seen:
                seen.add(x)
                stack.append(x)
    return len(seen) == len(remaining)


def find_nonseparating_cycle(
    g: Graph, vw: Edge, monitors: MonitorSet, exclude_monitors: bool = False
) -> Cycle | None:
    """First non-separating cycle through the edge in canonical order,
    optionally refusing cycles that contain a monitor.  None when exhausted."""
    _guard(g)
    ms = validate_monitors(g, monitors, minimum=2)
    for cycle in cycles_through_edge(g, vw):
        if exclude_monitors and any(m in cycle for m in ms):
            continue
        if is_nonseparating_cycle(g, cycle, ms):
            return cycle
    return None


# ---------------------------------------------------------------------------
# attachment paths: monitor to cycle, touching the cycle only at the endpoint


def _attachment_paths(g: Graph, start: int, targets: set[int], blocked: set[int]) -> list[Path]:
    """Simple paths from start to the first touched target; internal nodes
    avoid `blocked` (a superset of the targets).  Sorted (length, sequence).
    A start already on a target is the degenerate one-node path."""
    if start in targets:
        return [(start,)]
    if start in blocked:
        return []
    found: list[Path] = []
    path = [start]
    on_path = {start}

    def _walk(u: int) -> None:
        for x in sorted(g.adj[u]):
            if x in on_path:
                continue
            if x in targets:
                found.append(tuple(path) + (x,))
                continue
            if x in blocked:
                continue
            path.append(x)
            on_path.add(x)
            _walk(x)
            path.pop()
            on_path.remove(x)

    _walk(start)
    found.sort(key=lambda p: (len(p), p))
    return found


def _attachment_exists(g: Graph, start: int, targets: set[int], blocked: set[int]) -> bool:
    """Reachability version of _attachment_paths (no path materialised)."""
    if start in targets:
        return True
    if start in blocked:
        return False
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for x in g.adj[u]:
            if x in targets:
                return True
            if x in blocked or x in seen:
                continue
            seen.add(x)
            stack.append(x)
    return False


# ---------------------------------------------------------------------------
# witnesses


@dataclass(frozen=True)
class Lemma3Witness:
    """Two cycles through the link plus disjoint monitor attachment paths."""

    link: Edge
    cycle_f: Cycle   # non-separating, attachment path_1 meets it once
    cycle_c: Cycle   # second cycle, attachment path_2 meets it once
    path_1: Path
    path_2: Path

    def validate(self, g: Graph, monitors: MonitorSet) -> None:
        v, w = self.link
        fset, cset = set(self.cycle_f), set(self.cycle_c)
        validate_cycle(g, self.cycle_f)
        validate_cycle(g, self.cycle_c)
        if self.link not in cycle_edges(self.cycle_f) or self.link not in cycle_edges(self.cycle_c):
            raise ValueError("both cycles must contain the link")
        if not is_nonseparating_cycle(g, self.cycle_f, monitors):
            raise ValueError("first cycle must be non-separating")
        if len(fset & cset) > 3:
            raise ValueError("cycles share more than one node besides the link ends")
        p1, p2 = set(self.path_1), set(self.path_2)
        if not (is_simple_path(g, self.path_1) and is_simple_path(g, self.path_2)):
            raise ValueError("attachment paths must be simple paths")
        if {self.path_1[0], self.path_2[0]} != set(monitors):
            raise ValueError("attachment paths must start at the two monitors")
        if p1 & p2:
            raise ValueError("attachment paths must be disjoint")
        if {v, w} & (p1 | p2):
            raise ValueError("attachment paths must avoid the link ends")
        if len(p1 & fset) != 1 or self.path_1[-1] not in fset:
            raise ValueError("first path must meet the first cycle exactly at its end")
        if len(p2 & cset) != 1 or self.path_2[-1] not in cset:
            raise ValueError("second path must meet the second cycle exactly at its end")


@dataclass(frozen=True)
class Lemma4Witness:
    """Monitor-free non-separating cycle with per-endpoint attachment paths."""

    link: Edge
    cycle: Cycle
    path_to_v: Path  # ends at link[0]
    path_to_w: Path  # ends at link[1]

    def validate(self, g: Graph, monitors: MonitorSet) -> None:
        v, w = self.link
        validate_cycle(g, self.cycle)
        if self.link not in cycle_edges(self.cycle):
            raise ValueError("cycle must contain the link")
        if any(m in self.cycle for m in monitors):
            raise ValueError("cycle must not contain a monitor")
        if not is_nonseparating_cycle(g, self.cycle, monitors):
            raise ValueError("cycle must be non-separating")
        if not (is_simple_path(g, self.path_to_v) and is_simple_path(g, self.path_to_w)):
            raise ValueError("attachment paths must be simple paths")
        if self.path_to_v[-1] != v or self.path_to_w[-1] != w:
            raise ValueError("paths must end at the link ends")
        if {self.path_to_v[0], self.path_to_w[0]} != set(monitors):
            raise ValueError("paths must start at the two monitors")
        pa, pb = set(self.path_to_v), set(self.path_to_w)
        if pa & pb:
            raise ValueError("attachment paths must be disjoint")
        cyc = set(self.cycle)
        if (pa - {v}) & cyc or (pb - {w}) & cyc:
            raise ValueError("paths must meet the cycle only at their endpoint")


def find_lemma3_witness(g: Graph, vw: Edge, monitors: MonitorSet) -> Lemma3Witness | None:
    _guard(g)
    m1, m2 = validate_monitor_pair(g, monitors)
    link = _require_interior_link(g, vw, (m1, m2))
    v, w = link
    candidates = cycles_through_edge(g, link)
    nonsep = [c for c in candidates if is_nonseparating_cycle(g, c, (m1, m2))]
    for cyc_f in nonsep:
        fset = set(cyc_f)
        for cyc_c in candidates:
            cset = set(cyc_c)
            if len(fset & cset) > 3:
                continue
            for ma, mb in ((m1, m2), (m2, m1)):
                for p1 in _attachment_paths(g, ma, fset - {v, w}, fset):
                    p1set = set(p1)
                    p2s = _attachment_paths(g, mb, cset - {v, w} - p1set, cset | p1set)
                    if p2s:
                        witness = Lemma3Witness(link, cyc_f, cyc_c, p1, p2s[0])
                        witness.validate(g, (m1, m2))
                        return witness
    return None


def _has_disjoint_structure(g: Graph, cyc_f: Cycle, link: Edge, monitors: MonitorSet) -> bool:
    """Is there a second cycle meeting cyc_f only at the link ends, with
    disjoint attachment paths whose cyc_f-side path runs clear of the second
    cycle?  The path's own monitor endpoint is exempt: a monitor sitting on
    the second cycle is the terminus of every measurement walk through it, so
    it cannot cause a self-intersection."""
    m1, m2 = monitors
    v, w = link
    fset = set(cyc_f)
    for cyc_c in cycles_through_edge(g, link):
        cset = set(cyc_c)
        if fset & cset != {v, w}:
            continue
        for ma, mb in ((m1, m2), (m2, m1)):
            for p1 in _attachment_paths(g, ma, fset - {v, w}, fset):
                p1set = set(p1)
                if (p1set - {ma}) & cset:
                    continue
                if _attachment_exists(g, mb, cset - {v, w} - p1set, cset | p1set):
                    return True
    return False


def is_case_b_link(g: Graph, vw: Edge, monitors: MonitorSet) -> bool:
    """Classify an interior link by exhaustion over every choice of cycles
    and attachment paths: the link is the easy case when SOME non-separating
    cycle through it admits the fully disjoint structure, and the hard case
    (here: "case B") when none does."""
    _guard(g)
    pair = validate_monitor_pair(g, monitors)
    link = _require_interior_link(g, vw, pair)
    for cyc_f in cycles_through_edge(g, link):
        if not is_nonseparating_cycle(g, cyc_f, pair):
            continue
        if _has_disjoint_structure(g, cyc_f, link, pair):
            return False
    return True


def count_caseB_on_cycle(g: Graph, cyc_f: Cycle, monitors: MonitorSet) -> int:
    """Number of hard-case interior links on the given non-separating cycle."""
    _guard(g)
    ms = validate_monitor_pair(g, monitors)
    cyc_f = validate_cycle(g, cyc_f)
    if not is_nonseparating_cycle(g, cyc_f, ms):
        raise ValueError("cycle must be non-separating")
    count = 0
    for link in cycle_edges(cyc_f):
        if link[0] in ms or link[1] in ms:
            continue
        if is_case_b_link(g, link, ms):
            count += 1
    return count


def find_lemma4_witness(g: Graph, vw: Edge, monitors: MonitorSet) -> Lemma4Witness | None:
    """Monitor-free non-separating cycle through the link, plus disjoint
    per-endpoint attachment paths meeting it only there.  The caller gates on
    the link's classification; exhaustion returns None."""
    _guard(g)
    m1, m2 = validate_monitor_pair(g, monitors)
    link = _require_interior_link(g, vw, (m1, m2))
    v, w = link
    for cyc in cycles_through_edge(g, link):
        if m1 in cyc or m2 in cyc:
            continue
        if not is_nonseparating_cycle(g, cyc, (m1, m2)):
            continue
        fset = set(cyc)
        for ma, mb in ((m1, m2), (m2, m1)):
            for pa in _attachment_paths(g, ma, {v}, fset):
                blocked = fset | set(pa)
                pbs = _attachment_paths(g, mb, {w} - set(pa), blocked)
                if pbs:
                    witness = Lemma4Witness(link, cyc, pa, pbs[0])
                    witness.validate(g, (m1, m2))
                    return witness
    return None
