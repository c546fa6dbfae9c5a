"""Minimum monitor placement and its verification.

The placement runs four stages in order: every node of degree below three
becomes a monitor; each triconnected component with between one and two
separation vertices is topped up to three "anchors" (separation vertices
plus monitors) using nodes that are neither; each biconnected component is
topped up the same way against its cut-vertex count; finally the global
monitor count is raised to three.  Component processing order is canonical
(smallest contained node first) and monitor counts are re-evaluated as each
component is processed, so the whole procedure is a pure function of the
graph under the default lowest-id tie-break.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .connectivity import cut_vertices, is_k_vertex_connected
from .decomposition import biconnected_components, triconnected_components
from .errors import (
    DisconnectedError,
    InconclusiveError,
    InfeasibleStageError,
    PathExplosionError,
    TooSmallError,
)
from .graph import Graph, is_connected
from .identifiability import (
    DEFAULT_PATH_CAP,
    build_matrix,
    enumerate_monitor_paths,
    identifiable_links,
)
from .tomography import MonitorSet, extend


@dataclass(frozen=True)
class TieBreak:
    """Resolves each stage's free choice: deterministic lowest-id, or a
    seeded shuffle recorded for reproducibility."""

    policy: str = "lowest"
    seed: int | None = None

    def __post_init__(self):
        if self.policy not in ("lowest", "seeded"):
            raise ValueError("tie-break policy must be 'lowest' or 'seeded'")
        if self.policy == "seeded" and self.seed is None:
            raise ValueError("seeded tie-break needs a seed")


LOWEST = TieBreak("lowest")


@dataclass(frozen=True)
class TriStageRecord:
    block_index: int
    component_index: int
    nodes: frozenset[int]
    s_t: int
    m_t: int
    added: tuple[int, ...]


@dataclass(frozen=True)
class BiStageRecord:
    block_index: int
    nodes: frozenset[int]
    c_b: int
    m_b: int
    added: tuple[int, ...]


@dataclass(frozen=True)
class PlacementTrace:
    monitors: MonitorSet
    stage1_degree_monitors: frozenset[int]
    per_triconnected: tuple[TriStageRecord, ...]
    per_biconnected: tuple[BiStageRecord, ...]
    topup: frozenset[int]
    k_min: int
    tiebreak: TieBreak


def _chooser(tiebreak: TieBreak):
    if tiebreak.policy == "lowest":
        return lambda eligible, k: sorted(eligible)[:k]
    rng = random.Random(tiebreak.seed)
    return lambda eligible, k: sorted(rng.sample(sorted(eligible), k))


def mmp(g: Graph, tiebreak: TieBreak = LOWEST) -> PlacementTrace:
    """Compute the monitor placement; see the module docstring for stages."""
    if g.node_count < 3:
        raise TooSmallError(f"placement needs at least 3 nodes, got {g.node_count}")
    if not is_connected(g):
        raise DisconnectedError("graph must be connected")
    choose = _chooser(tiebreak)
    monitors: set[int] = {v for v in g.nodes if g.degree(v) < 3}
    stage1 = frozenset(monitors)

    tri_records: list[TriStageRecord] = []
    bi_records: list[BiStageRecord] = []
    cuts = cut_vertices(g)
    blocks = biconnected_components(g)
    for bi, block in enumerate(blocks):
        if len(block.nodes) < 3:
            continue
        comps = triconnected_components(block, g)
        for ti, comp in enumerate(comps):
            if len(comp.nodes) < 3:
                continue
            s_t = comp.s_t
            m_t = len(monitors & comp.nodes)
            added: tuple[int, ...] = ()
            if 0 < s_t < 3 and s_t + m_t < 3:
                need = 3 - s_t - m_t
                eligible = comp.nodes - comp.separation_vertices - monitors
                if len(eligible) < need:
                    raise InfeasibleStageError(
                        f"component {sorted(comp.nodes)} needs {need} monitors, "
                        f"only {len(eligible)} eligible nodes"
                    )
                added = tuple(choose(eligible, need))
                monitors.update(added)
            tri_records.append(TriStageRecord(bi, ti, comp.nodes, s_t, m_t, added))
        c_b = block.c_b
        m_b = len(monitors & block.nodes)
        added = ()
        if 0 < c_b < 3 and c_b + m_b < 3:
            need = 3 - c_b - m_b
            eligible = block.nodes - cuts - monitors
            if len(eligible) < need:
                raise InfeasibleStageError(
                    f"block {sorted(block.nodes)} needs {need} monitors, "
                    f"only {len(eligible)} eligible nodes"
                )
            added = tuple(choose(eligible, need))
            monitors.update(added)
        bi_records.append(BiStageRecord(bi, block.nodes, c_b, m_b, added))

    topup: frozenset[int] = frozenset()
    if len(monitors) < 3:
        need = 3 - len(monitors)
        extra = tuple(choose(g.nodes - monitors, need))
        topup = frozenset(extra)
        monitors.update(extra)

    return PlacementTrace(
        monitors=tuple(sorted(monitors)),
        stage1_degree_monitors=stage1,
        per_triconnected=tuple(tri_records),
        per_biconnected=tuple(bi_records),
        topup=topup,
        k_min=len(monitors),
        tiebreak=tiebreak,
    )


def _fully_identifiable(g: Graph, monitors: MonitorSet, cap: int) -> bool:
    paths = enumerate_monitor_paths(g, monitors, cap)
    return identifiable_links(build_matrix(g, paths)).fully_identifiable


def verify_placement(g: Graph, trace: PlacementTrace, cap: int = DEFAULT_PATH_CAP) -> bool:
    """The placement is good when the extended graph is 3-vertex-connected
    and the rank oracle confirms every link identifiable.  Instances whose
    path count exceeds the cap keep only the connectivity verdict."""
    monitors = trace.monitors
    if len(monitors) < 3 or any(m not in g.nodes for m in monitors):
        return False
    ext = extend(g, monitors)
    if not is_k_vertex_connected(ext.graph, 3):
        return False
    try:
        return _fully_identifiable(g, monitors, cap)
    except PathExplosionError:
        return True


def _achieves_full_identifiability(g: Graph, candidate: tuple[int, ...], cap: int) -> bool:
    if len(candidate) < 2:
        return False
    if len(candidate) == 2:
        return _fully_identifiable(g, candidate, cap)
    ext = extend(g, candidate)
    if not is_k_vertex_connected(ext.graph, 3):
        return False
    return _fully_identifiable(g, candidate, cap)


def minimality_probe(
    g: Graph,
    trace: PlacementTrace,
    budget: int = 100000,
    cap: int = DEFAULT_PATH_CAP,
) -> bool:
    """True when no monitor set one smaller than the trace's achieves full
    identifiability; candidate sets are enumerated exhaustively up to the
    budget, beyond which the probe refuses to answer."""
    k = len(trace.monitors) - 1
    if k < 2:
        return True  # fewer than two monitors measure nothing on >= 1 edge
    examined = 0
    for candidate in combinations(g.sorted_nodes(), k):
        examined += 1
        if examined > budget:
            raise InconclusiveError(f"probe budget {budget} exhausted")
        try:
            if _achieves_full_identifiability(g, candidate, cap):
                return False
        except PathExplosionError:
            raise InconclusiveError("path cap hit while probing a candidate set") from None
    return True
