"""Command line interface.

Subcommands: classify (rigidity report, JSON or text), faces (k-face
listing with arc subgraphs), verify (oracle cross-validation sweeps),
census (CSV over canonical Fano digraphs), hyperplane (supporting
functional of a homogeneous cycle).  Graphs are read from edge-list
files (or stdin with `-`): header `n <count>`, one `i j` line per arc.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .classify import full_report, rigid_certified
from .digraph import CycleWalk, GraphError, parse_edge_list
from .edge_polytopes import (
    HomogeneousCycle,
    directed_edge_polytope,
    higashitani_smooth,
    is_fano_graph,
    mu_labeling,
    rho,
    supporting_hyperplane,
)
from .enumeration import fano_digraph_masks, mask_to_graph
from .geometry import GeometryError
from .verification import run_all

EXIT_RIGID = 0
EXIT_NOT_CERTIFIED = 1
EXIT_NOT_FANO = 2
EXIT_ERROR = 3


def _read_graph(path):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    return parse_edge_list(text)


def _yesno(b):
    return "yes" if b else "no"


def cmd_classify(args):
    g = _read_graph(args.input)
    report = full_report(g, oracle=args.oracle)
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        print(f"fano: {_yesno(report.fano)}")
        print(f"reflexive+terminal: {_yesno(report.reflexive_terminal)}")
        print(f"dim: {report.dim}")
        if report.fano:
            print(f"smooth (= Q-factorial): {_yesno(report.smooth_qfactorial)}")
            print(f"smooth in codim 2: {_yesno(report.codim2_smooth)}")
            print(f"Q-factorial in codim 3: {_yesno(report.codim3_qfactorial)}")
            print(f"rigid: {_yesno(report.rigid_certified)}")
            if report.witness is not None:
                print(f"witness: {report.witness.kind} on vertices "
                      f"{list(report.witness.vertices)}")
        else:
            print(f"not Fano: arc {report.not_fano_arc} on no directed cycle")
    if not report.fano:
        return EXIT_NOT_FANO
    return EXIT_RIGID if report.rigid_certified else EXIT_NOT_CERTIFIED


def cmd_faces(args):
    g = _read_graph(args.input)
    if not is_fano_graph(g):
        print("error: graph is not Fano (some arc lies on no directed cycle)",
              file=sys.stderr)
        return EXIT_NOT_FANO
    poly = directed_edge_polytope(g)
    k = args.dim
    if k >= poly.dim:
        print(f"warning: no proper {k}-faces, polytope has dimension {poly.dim}",
              file=sys.stderr)
        return 0
    points = {rho(a, g.n): a for a in g.arcs}
    for face in poly.faces_of_dim(k):
        arcs = sorted(points[v] for v in face.vertex_subset if v in points)
        line = f"{k}-face: arcs {arcs}"
        if k == 2:
            line += "  [triangle]" if len(face.vertex_subset) == 3 else "  [square]"
        print(line)
    return 0


def cmd_verify(args):
    results = run_all(max_n=args.max_n, samples=args.samples,
                      seed=args.seed, sample_n=args.sample_n)
    ok = True
    for r in results:
        print(r.summary())
        ok = ok and r.passed
    print("all sweeps passed" if ok else "SWEEP FAILURES PRESENT")
    return 0 if ok else 1


def cmd_census(args):
    if args.max_n > 5:
        print("error: census is exhaustive and capped at n <= 5", file=sys.stderr)
        return EXIT_ERROR
    out = sys.stdout if args.out is None else open(args.out, "w", newline="")
    try:
        writer = csv.writer(out)
        writer.writerow(["n", "arcs", "dim", "fano", "smooth", "rigid",
                         "square2faces"])
        for n in range(2, args.max_n + 1):
            for m in fano_digraph_masks(n):
                g = mask_to_graph(m, n)
                poly = directed_edge_polytope(g)
                certified, _ = rigid_certified(g)
                writer.writerow([
                    n, len(g.arcs), poly.dim, True,
                    higashitani_smooth(g), certified,
                    poly.has_non_triangle_two_face(),
                ])
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def _parse_cycle_spec(spec):
    arcs = []
    for chunk in spec.split(","):
        parts = chunk.strip().split("-")
        if len(parts) != 2:
            raise GraphError(f"bad cycle spec entry {chunk!r}, expected 'i-j'")
        try:
            arcs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"non-integer vertices in {chunk!r}")
    return arcs


def _walk_from_arcs(arcs):
    """Assemble a cycle walk from an unordered arc list, or raise."""
    if len(arcs) != len(set(arcs)):
        raise GraphError("duplicate arcs in cycle spec")
    if len(arcs) == 2 and arcs[0] == arcs[1][::-1]:
        i, j = min(arcs), max(arcs)
        return CycleWalk((i[0], i[1]), (i, j), (True, True))
    adj = {}
    for i, j in arcs:
        adj.setdefault(i, []).append(j)
        adj.setdefault(j, []).append(i)
    if len(adj) != len(arcs) or any(len(vs) != 2 for vs in adj.values()):
        raise GraphError("cycle spec arcs do not form a single cycle")
    arcset = set(arcs)
    start = min(adj)
    order = [start, min(adj[start])]
    while len(order) < len(arcs):
        prev, cur = order[-2], order[-1]
        nxt = [v for v in adj[cur] if v != prev]
        if not nxt or nxt[0] in order:
            raise GraphError("cycle spec arcs do not form a single cycle")
        order.append(nxt[0])
    if order[-1] not in adj[start]:
        raise GraphError("cycle spec arcs do not form a single cycle")
    walk_arcs, flags = [], []
    for k in range(len(order)):
        a, b = order[k], order[(k + 1) % len(order)]
        if (a, b) in arcset:
            walk_arcs.append((a, b))
            flags.append(True)
        elif (b, a) in arcset:
            walk_arcs.append((b, a))
            flags.append(False)
        else:
            raise GraphError("cycle spec arcs do not form a single cycle")
    return CycleWalk(tuple(order), tuple(walk_arcs), tuple(flags))


def cmd_hyperplane(args):
    g = _read_graph(args.input)
    arcs = _parse_cycle_spec(args.cycle)
    for a in arcs:
        if a not in g.arcs:
            print(f"error: {a} is not an arc of the graph", file=sys.stderr)
            return EXIT_ERROR
    walk = _walk_from_arcs(arcs)
    if not walk.is_homogeneous():
        print("error: not homogeneous (forward/backward arc counts differ)",
              file=sys.stderr)
        return EXIT_ERROR
    c = HomogeneousCycle(walk, mu_labeling(walk))
    dist = g.distance_matrix()
    for a in c.mu:
        for b in c.mu:
            if a != b and c.mu[a] - c.mu[b] > dist[a][b]:
                print(f"error: mu-dist violated at ({a},{b})", file=sys.stderr)
                return EXIT_ERROR
    h = supporting_hyperplane(g, c)
    print(f"a = {list(h.coefficients)}")
    face_arcs = sorted(a for a in g.arcs if h.value(rho(a, g.n)) == 1)
    print(f"face arcs: {face_arcs}")
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="edgefano",
        description="Rigidity classification of toric varieties of digraphs")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify a graph (rigid / not / not Fano)")
    c.add_argument("input", help="edge-list file, or - for stdin")
    c.add_argument("--oracle", action="store_true",
                   help="cross-check every verdict geometrically")
    c.add_argument("--json", action="store_true", help="emit the JSON report")
    c.set_defaults(fn=cmd_classify)

    f = sub.add_parser("faces", help="list k-faces of the directed edge polytope")
    f.add_argument("input", help="edge-list file, or - for stdin")
    f.add_argument("--dim", type=int, required=True, help="face dimension k")
    f.set_defaults(fn=cmd_faces)

    v = sub.add_parser("verify", help="run the oracle cross-validation sweeps")
    v.add_argument("--max-n", type=int, default=4, dest="max_n",
                   help="exhaustive sweep bound (<= 5)")
    v.add_argument("--seed", type=int, default=20260823)
    v.add_argument("--samples", type=int, default=500,
                   help="random sample size for the larger-n check")
    v.add_argument("--sample-n", type=int, default=6, dest="sample_n")
    v.set_defaults(fn=cmd_verify)

    s = sub.add_parser("census", help="CSV census of canonical Fano digraphs")
    s.add_argument("--max-n", type=int, default=4, dest="max_n")
    s.add_argument("--out", default=None, help="output CSV path (default stdout)")
    s.set_defaults(fn=cmd_census)

    h = sub.add_parser("hyperplane",
                       help="supporting functional of a homogeneous cycle")
    h.add_argument("input", help="edge-list file, or - for stdin")
    h.add_argument("cycle", help="cycle spec: comma-separated arcs i-j,k-l,...")
    h.set_defaults(fn=cmd_hyperplane)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (GraphError, GeometryError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
