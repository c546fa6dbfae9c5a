"""Batch command-line front-end.

Exit codes: 0 success, 2 file or parse problems, 3 violated preconditions,
4 resource caps.  All reports are JSON on stdout; edges render as "u-v" with
u < v and rationals as exact "p/q" strings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import corpus as corpus_mod
from .connectivity import bridges, cut_vertices, vertex_connectivity
from .decomposition import biconnected_components, triconnected_components
from .errors import (
    DisconnectedError,
    GraphParseError,
    InconsistentMeasurementsError,
    LinkscopeError,
    NotFoundError,
    NotInteriorError,
    PathExplosionError,
    TooFewMonitorsError,
    TooLargeError,
    TooSmallError,
)
from .graph import Graph, edge, parse_graph, serialize
from .identifiability import (
    DEFAULT_PATH_CAP,
    MetricAssignment,
    build_matrix,
    enumerate_monitor_paths,
    identifiable_links,
    recover,
    simulate,
)
from .placement import TieBreak, mmp, verify_placement
from .tomography import (
    condition_1,
    condition_2,
    interior_graph,
    prop2_characterization,
    prop5_both_sides,
    prop6_both_sides,
    validate_monitors,
)
from .witness import find_lemma3_witness, find_lemma4_witness, find_nonseparating_cycle

EXIT_OK = 0
EXIT_IO = 2
EXIT_PRECONDITION = 3
EXIT_CAP = 4


def _edge_str(e) -> str:
    return f"{e[0]}-{e[1]}"


def _edges_json(edges) -> list[str]:
    return [_edge_str(e) for e in sorted(edges)]


def _load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _parse_monitors(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip() != "")
    except ValueError:
        raise GraphParseError(f"malformed monitor list {text!r}") from None


def _parse_link(text: str):
    parts = text.split("-")
    if len(parts) != 2:
        raise GraphParseError(f"malformed link {text!r}, expected 'u-v'")
    try:
        return edge(int(parts[0]), int(parts[1]))
    except ValueError:
        raise GraphParseError(f"malformed link {text!r}") from None


def _load_weights(path: str, g: Graph) -> MetricAssignment:
    mapping = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 3:
                raise GraphParseError(f"expected 'u v value', got {line!r}", lineno)
            try:
                u, v = int(parts[0]), int(parts[1])
                value = Fraction(parts[2])
            except (ValueError, ZeroDivisionError):
                raise GraphParseError(f"malformed weight line {line!r}", lineno) from None
            mapping[(u, v)] = value
    return MetricAssignment.for_graph(g, mapping)


def _default_cap() -> int:
    env = os.environ.get("LINKSCOPE_PATH_CAP")
    if env is None:
        return DEFAULT_PATH_CAP
    try:
        return int(env)
    except ValueError:
        raise GraphParseError(f"bad LINKSCOPE_PATH_CAP value {env!r}") from None


def _emit(report: dict) -> None:
    print(json.dumps(report, indent=2, sort_keys=True))


# ---------------------------------------------------------------------------
# subcommands


def _cmd_check(args) -> int:
    g = _load_graph(args.graph)
    monitors = validate_monitors(g, _parse_monitors(args.monitors), minimum=2)
    report: dict = {
        "graph": {"nodes": sorted(g.nodes), "edges": _edges_json(g.edges)},
        "monitors": list(monitors),
        "bridges": _edges_json(bridges(g)),
        "cut_vertices": sorted(cut_vertices(g)),
        "vertex_connectivity": vertex_connectivity(g),
    }
    if len(monitors) == 2:
        interior = interior_graph(g, monitors)
        report["condition1"] = condition_1(g, monitors)
        report["condition2"] = condition_2(g, monitors)
        report["prop2"] = (
            prop2_characterization(g, monitors) if g.node_count >= 4 else None
        )
        report["interior_connected"] = interior.connected
        report["exterior_links"] = _edges_json(interior.exterior_links)
    else:
        lhs5, rhs5 = prop5_both_sides(g, monitors)
        lhs6, rhs6 = prop6_both_sides(g, monitors)
        report["prop5"] = {"lhs": lhs5, "rhs": rhs5}
        report["prop6"] = {"lhs": lhs6, "rhs": rhs6}
    _emit(report)
    return EXIT_OK


def _cmd_place(args) -> int:
    g = _load_graph(args.graph)
    tiebreak = TieBreak(args.tiebreak, args.seed if args.tiebreak == "seeded" else None)
    trace = mmp(g, tiebreak)
    verified = verify_placement(g, trace, cap=_default_cap())
    blocks = biconnected_components(g)
    decomposition = []
    for block in blocks:
        entry = {
            "nodes": sorted(block.nodes),
            "edges": _edges_json(block.edges),
            "cut_vertices": sorted(block.cut_vertices),
            "c_b": block.c_b,
            "triconnected_components": [],
        }
        if len(block.nodes) >= 3:
            for comp in triconnected_components(block, g):
                entry["triconnected_components"].append(
                    {
                        "nodes": sorted(comp.nodes),
                        "real_edges": _edges_json(comp.real_edges),
                        "virtual_edges": _edges_json(comp.virtual_edges),
                        "separation_vertices": sorted(comp.separation_vertices),
                        "s_t": comp.s_t,
                    }
                )
        decomposition.append(entry)
    report = {
        "monitors": list(trace.monitors),
        "k_min": trace.k_min,
        "verified": verified,
        "tiebreak": {"policy": trace.tiebreak.policy, "seed": trace.tiebreak.seed},
        "stage1_degree_monitors": sorted(trace.stage1_degree_monitors),
        "per_triconnected": [
            {
                "block": r.block_index,
                "component": r.component_index,
                "nodes": sorted(r.nodes),
                "s_t": r.s_t,
                "m_t": r.m_t,
                "added": list(r.added),
            }
            for r in trace.per_triconnected
        ],
        "per_biconnected": [
            {
                "block": r.block_index,
                "nodes": sorted(r.nodes),
                "c_b": r.c_b,
                "m_b": r.m_b,
                "added": list(r.added),
            }
            for r in trace.per_biconnected
        ],
        "topup": sorted(trace.topup),
        "decomposition": {"blocks": decomposition},
    }
    _emit(report)
    return EXIT_OK


def _cmd_identify(args) -> int:
    g = _load_graph(args.graph)
    monitors = validate_monitors(g, _parse_monitors(args.monitors), minimum=2)
    cap = args.cap if args.cap is not None else _default_cap()
    report: dict = {"monitors": list(monitors)}
    values = None
    if args.weights:
        assignment = _load_weights(args.weights, g)
        matrix, vector = simulate(g, monitors, assignment, cap)
        values = vector.values
        recovered = recover(matrix, vector)
        report["measurements"] = [str(x) for x in values]
        report["recovered"] = {_edge_str(e): str(x) for e, x in sorted(recovered.items())}
    else:
        matrix = build_matrix(g, enumerate_monitor_paths(g, monitors, cap))
    verdict = identifiable_links(matrix)
    report.update(
        {
            "paths": len(matrix.paths),
            "rank": verdict.rank,
            "identifiable": _edges_json(verdict.identifiable),
            "unidentifiable": _edges_json(verdict.unidentifiable),
            "fully_identifiable": verdict.fully_identifiable,
        }
    )
    if args.dump_matrix:
        with open(args.dump_matrix, "w", encoding="utf-8") as fh:
            for i, path in enumerate(matrix.paths):
                row = "".join(str(x) for x in matrix.rows[i])
                value = str(values[i]) if values is not None else ""
                fh.write(f"{','.join(str(v) for v in path)} ; {row} ; {value}\n")
    _emit(report)
    return EXIT_OK


def _cmd_witness(args) -> int:
    g = _load_graph(args.graph)
    monitors = validate_monitors(g, _parse_monitors(args.monitors), minimum=2)
    link = _parse_link(args.link)
    if args.kind == "nonsep":
        cycle = find_nonseparating_cycle(g, link, monitors, args.exclude_monitors)
        report = {"kind": args.kind, "found": cycle is not None}
        if cycle is not None:
            report["cycle"] = list(cycle)
    elif args.kind == "lemma3":
        w3 = find_lemma3_witness(g, link, monitors)
        report = {"kind": args.kind, "found": w3 is not None}
        if w3 is not None:
            report.update(
                {
                    "link": _edge_str(w3.link),
                    "cycle_f": list(w3.cycle_f),
                    "cycle_c": list(w3.cycle_c),
                    "path_1": list(w3.path_1),
                    "path_2": list(w3.path_2),
                }
            )
    else:
        w4 = find_lemma4_witness(g, link, monitors)
        report = {"kind": args.kind, "found": w4 is not None}
        if w4 is not None:
            report.update(
                {
                    "link": _edge_str(w4.link),
                    "cycle": list(w4.cycle),
                    "path_to_v": list(w4.path_to_v),
                    "path_to_w": list(w4.path_to_w),
                }
            )
    _emit(report)
    return EXIT_OK


def _cmd_corpus_dump(args) -> int:
    fixtures = corpus_mod.named_fixtures()
    if args.name not in fixtures:
        raise NotFoundError(f"unknown fixture {args.name!r}; have {sorted(fixtures)}")
    g, monitors = fixtures[args.name]
    text = f"# monitors: {','.join(str(m) for m in monitors)}\n" + serialize(g)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="linkscope")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="evaluate identifiability conditions")
    p.add_argument("graph")
    p.add_argument("--monitors", required=True, help="comma-separated node ids")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("place", help="compute a minimum monitor placement")
    p.add_argument("graph")
    p.add_argument("--tiebreak", choices=("lowest", "seeded"), default="lowest")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_place)

    p = sub.add_parser("identify", help="rank oracle, simulation and recovery")
    p.add_argument("graph")
    p.add_argument("--monitors", required=True)
    p.add_argument("--weights", help="file of 'u v value' rational weights")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--dump-matrix", help="write 'path ; incidence ; value' rows here")
    p.set_defaults(func=_cmd_identify)

    p = sub.add_parser("witness", help="search cycle/path witness structures")
    p.add_argument("graph")
    p.add_argument("--monitors", required=True)
    p.add_argument("--link", required=True, help="target link as 'u-v'")
    p.add_argument("--kind", choices=("lemma3", "lemma4", "nonsep"), required=True)
    p.add_argument("--exclude-monitors", action="store_true")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("corpus", help="fixture utilities")
    corpus_sub = p.add_subparsers(dest="corpus_command", required=True)
    d = corpus_sub.add_parser("dump", help="write a named fixture as edge-list text")
    d.add_argument("name")
    d.add_argument("--out")
    d.set_defaults(func=_cmd_corpus_dump)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        code = args.func(args)
    except PathExplosionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_CAP
    except (OSError, GraphParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_IO
    except (
        NotFoundError,
        DisconnectedError,
        TooFewMonitorsError,
        TooSmallError,
        TooLargeError,
        NotInteriorError,
        InconsistentMeasurementsError,
        LinkscopeError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_PRECONDITION
    if argv is None:
        sys.exit(code)
    return code


if __name__ == "__main__":
    main()
