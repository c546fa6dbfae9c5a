"""Measurement model and the exact-rank identifiability oracle.

Measurements are sums of link metrics along simple paths between monitors.
A link metric is identifiable exactly when its unit coordinate vector lies in
the row space of the 0/1 path-edge incidence matrix; that membership is read
off a fully reduced row basis, computed fraction-free over the integers so
verdicts are exact and bit-reproducible.  Floating point never touches a
verdict.

With two monitors every simple path between them is a measurement.  With
three or more, paths are enumerated per monitor pair and may not pass through
a third monitor: such a path is the concatenation of shorter monitor-to-
monitor paths and contributes no new rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .connectivity import bridges
from .errors import (
    DisconnectedError,
    InconsistentMeasurementsError,
    InvalidPathError,
    NotFoundError,
    PathExplosionError,
)
from .graph import (
    Edge,
    Graph,
    Path,
    edge,
    is_connected,
    iter_simple_paths,
    path_edges,
    validate_path,
)
from .tomography import MonitorSet, validate_monitor_pair, validate_monitors

DEFAULT_PATH_CAP = 100000


@dataclass(frozen=True)
class MeasurementMatrix:
    paths: tuple[Path, ...]
    edge_index: tuple[Edge, ...]
    rows: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class MetricAssignment:
    """Strictly positive exact rational weight per graph edge."""

    weights: dict[Edge, Fraction]

    def __post_init__(self):
        for e, w in self.weights.items():
            if w <= 0:
                raise ValueError(f"weight for edge {e} must be positive, got {w}")

    @classmethod
    def for_graph(cls, g: Graph, mapping: dict[Edge, Fraction | int]) -> "MetricAssignment":
        weights = {edge(*e): Fraction(w) for e, w in mapping.items()}
        missing = g.edges - set(weights)
        extra = set(weights) - g.edges
        if missing or extra:
            raise ValueError(f"weights must cover exactly the graph edges (missing {sorted(missing)}, extra {sorted(extra)})")
        return cls(weights)


@dataclass(frozen=True)
class MeasurementVector:
    values: tuple[Fraction, ...]


@dataclass(frozen=True)
class IdentifiabilityReport:
    rank: int
    identifiable: frozenset[Edge]
    unidentifiable: frozenset[Edge]
    fully_identifiable: bool


# ---------------------------------------------------------------------------
# exact elimination over the rationals, kept in integers


def _gcd_normalize(row: list[int], pivot: int, rhs: Fraction) -> tuple[list[int], Fraction]:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
    if g == 0:
        return row, rhs
    if row[pivot] < 0:
        g = -g
    return [x // g for x in row], rhs / g


class _Reducer:
    """Incremental fraction-free row reduction with optional rational RHS.

    Invariant after every ``add``: each basis row is zero at every other
    basis row's pivot column.  A unit coordinate vector then lies in the row
    space exactly when its column is a pivot whose basis row has a single
    nonzero entry.
    """

    def __init__(self, ncols: int, with_rhs: bool = False):
        self.ncols = ncols
        self.with_rhs = with_rhs
        self.pivots: list[int] = []
        self.basis: list[list[int]] = []
        self.rhs: list[Fraction] = []

    @property
    def rank(self) -> int:
        return len(self.basis)

    def add(self, row: tuple[int, ...] | list[int], rhs: Fraction = Fraction(0)) -> bool:
        work = list(row)
        acc = rhs
        for i, pcol in enumerate(self.pivots):
            a = work[pcol]
            if a:
                b = self.basis[i]
                lead = b[pcol]
                work = [lead * x - a * y for x, y in zip(work, b)]
                if self.with_rhs:
                    acc = lead * acc - a * self.rhs[i]
        pivot = next((c for c, x in enumerate(work) if x), None)
        if pivot is None:
            if self.with_rhs and acc != 0:
                raise InconsistentMeasurementsError(
                    "measurement vector is inconsistent with the paths"
                )
            return False
        work, acc = _gcd_normalize(work, pivot, acc)
        # keep the basis fully reduced: clear the new pivot column everywhere
        lead = work[pivot]
        for i in range(len(self.basis)):
            a = self.basis[i][pivot]
            if a:
                merged = [lead * x - a * y for x, y in zip(self.basis[i], work)]
                merged_rhs = lead * self.rhs[i] - a * acc if self.with_rhs else self.rhs[i]
                self.basis[i], self.rhs[i] = _gcd_normalize(merged, self.pivots[i], merged_rhs)
        at = next((i for i, c in enumerate(self.pivots) if c > pivot), len(self.pivots))
        self.pivots.insert(at, pivot)
        self.basis.insert(at, work)
        self.rhs.insert(at, acc)
        return True

    def unit_pivots(self) -> list[int]:
        """Pivot columns whose basis row is a multiple of a unit vector."""
        return [
            pcol
            for pcol, row in zip(self.pivots, self.basis)
            if sum(1 for x in row if x) == 1
        ]


# ---------------------------------------------------------------------------
# path enumeration and matrix construction


def enumerate_monitor_paths(g: Graph, monitors: MonitorSet, cap: int = DEFAULT_PATH_CAP) -> list[Path]:
    """All measurement paths, deterministically ordered: per monitor pair
    (ascending), then by length, then lexicographically.  Each undirected
    path appears once, oriented from its smaller endpoint."""
    ms = validate_monitors(g, monitors, minimum=2)
    if not is_connected(g):
        raise DisconnectedError("graph must be connected")
    if cap < 1:
        raise ValueError("cap must be positive")
    others = frozenset(ms) if len(ms) > 2 else frozenset()
    out: list[Path] = []
    pairs = sorted({tuple(sorted((a, b))) for a in ms for b in ms if a != b})
    for a, b in pairs:
        forbidden = others - {a, b}
        found = []
        for p in iter_simple_paths(g, a, b, forbidden_internal=forbidden):
            found.append(p)
            if len(out) + len(found) > cap:
                raise PathExplosionError(cap)
        found.sort(key=lambda p: (len(p), p))
        out.extend(found)
    return out


def build_matrix(g: Graph, paths: list[Path]) -> MeasurementMatrix:
    """0/1 incidence of edges on paths; columns in canonical edge order."""
    cols = tuple(g.sorted_edges())
    index = {e: i for i, e in enumerate(cols)}
    rows = []
    for p in paths:
        validate_path(g, p)
        if len(p) < 2:
            raise InvalidPathError(f"measurement path must have at least one edge: {p}")
        row = [0] * len(cols)
        for e in path_edges(p):
            row[index[e]] = 1
        rows.append(tuple(row))
    return MeasurementMatrix(tuple(tuple(p) for p in paths), cols, tuple(rows))


def identifiable_links(matrix: MeasurementMatrix) -> IdentifiabilityReport:
    """Rank over the rationals plus the set of edges whose unit vector lies
    in the row space."""
    ncols = len(matrix.edge_index)
    red = _Reducer(ncols)
    for row in matrix.rows:
        red.add(row)
        if red.rank == ncols:
            break
    if red.rank == ncols:
        all_edges = frozenset(matrix.edge_index)
        return IdentifiabilityReport(ncols, all_edges, frozenset(), True)
    good = frozenset(matrix.edge_index[c] for c in red.unit_pivots())
    bad = frozenset(matrix.edge_index) - good
    return IdentifiabilityReport(red.rank, good, bad, not bad)


def simulate(
    g: Graph,
    monitors: MonitorSet,
    assignment: MetricAssignment,
    cap: int = DEFAULT_PATH_CAP,
) -> tuple[MeasurementMatrix, MeasurementVector]:
    """Enumerate paths and produce their exact metric sums."""
    MetricAssignment.for_graph(g, assignment.weights)  # recheck coverage
    paths = enumerate_monitor_paths(g, monitors, cap)
    matrix = build_matrix(g, paths)
    values = tuple(
        sum((assignment.weights[e] for e in path_edges(p)), Fraction(0)) for p in paths
    )
    return matrix, MeasurementVector(values)


def recover(matrix: MeasurementMatrix, vector: MeasurementVector) -> dict[Edge, Fraction]:
    """Solve for every identifiable edge; exact values, no tolerance.

    Raises when the vector contradicts the row space (no generating
    assignment exists).
    """
    if len(vector.values) != len(matrix.rows):
        raise ValueError("vector length must match the number of matrix rows")
    ncols = len(matrix.edge_index)
    red = _Reducer(ncols, with_rhs=True)
    for row, value in zip(matrix.rows, vector.values):
        red.add(row, Fraction(value))
    out: dict[Edge, Fraction] = {}
    for i, pcol in enumerate(red.pivots):
        row = red.basis[i]
        if sum(1 for x in row if x) == 1:
            out[matrix.edge_index[pcol]] = red.rhs[i] / row[pcol]
    return out


# ---------------------------------------------------------------------------
# executable forms of the bridge and exterior-link facts


def adjacent_links(g: Graph, e: Edge) -> frozenset[Edge]:
    e = edge(*e)
    return frozenset(f for f in g.edges if f != e and (set(f) & set(e)))


def check_lemma1(g: Graph, monitors: MonitorSet, bridge_link: Edge) -> bool:
    """With one monitor on each side of a bridge, the bridge and every link
    sharing an endpoint with it must come out unidentifiable."""
    m1, m2 = validate_monitor_pair(g, monitors)
    b = edge(*bridge_link)
    if b not in g.edges:
        raise NotFoundError(f"edge {b} not in graph")
    if b not in bridges(g):
        raise ValueError(f"edge {b} is not a bridge")
    cut = Graph(g.nodes, g.edges - {b})
    side = {b[0]}
    stack = [b[0]]
    while stack:
        u = stack.pop()
        for w in cut.adj[u]:
            if w not in side:
                side.add(w)
                stack.append(w)
    if (m1 in side) == (m2 in side):
        raise ValueError("monitors must lie on opposite sides of the bridge")
    report = identifiable_links(build_matrix(g, enumerate_monitor_paths(g, monitors)))
    targets = {b} | adjacent_links(g, b)
    return targets <= report.unidentifiable


def check_corollary1(g: Graph, monitors: MonitorSet) -> bool:
    """No exterior link other than the direct monitor-monitor edge is
    identifiable with two monitors."""
    m1, m2 = validate_monitor_pair(g, monitors)
    report = identifiable_links(build_matrix(g, enumerate_monitor_paths(g, monitors)))
    exterior = {e for e in g.edges if m1 in e or m2 in e} - {edge(m1, m2)}
    return exterior <= report.unidentifiable
