"""Combinatorial face criterion for acyclic-graph polytopes.

A spanning subgraph H of an acyclic digraph D determines a candidate
face: H must carry a weight function (one less on the source of every
arc, minimum 1 per component) and the component multigraph built from
the leftover arcs of D must have no directed cycle whose total weight
decrease reaches -|cycle|.  Both conditions together are equivalent to
conv(rho(H)) being a face of the origin-augmented polytope of D.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .digraph import DirectedGraph, GraphError


@dataclass(frozen=True)
class PathInconsistent:
    """Failed weight assignment; two undirected paths disagree at this pair."""

    u: int
    v: int

    def __bool__(self):
        return False


def compute_weight(d: DirectedGraph, h_arcs):
    """Weight function of the spanning subgraph with arc set h_arcs.

    Returns {vertex: weight} with per-component minimum 1, or a
    PathInconsistent value naming a conflicting vertex pair.  Isolated
    vertices are singleton components with weight 1.
    """
    h_arcs = frozenset(h_arcs)
    if not h_arcs <= d.arcs:
        raise GraphError("subgraph arcs must be arcs of the parent graph")
    adj = {v: [] for v in range(1, d.n + 1)}
    for i, j in h_arcs:
        adj[i].append((j, 1))   # omega(j) = omega(i) + 1
        adj[j].append((i, -1))
    omega = {}
    for root in range(1, d.n + 1):
        if root in omega:
            continue
        comp = {root: 0}
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                for w, step in adj[u]:
                    val = comp[u] + step
                    if w not in comp:
                        comp[w] = val
                        nxt.append(w)
                    elif comp[w] != val:
                        return PathInconsistent(u, w)
            frontier = nxt
        lift = 1 - min(comp.values())
        for v, x in comp.items():
            omega[v] = x + lift
    return omega


def path_consistent(d: DirectedGraph, h_arcs) -> bool:
    return not isinstance(compute_weight(d, h_arcs), PathInconsistent)


@dataclass(frozen=True)
class CompArc:
    """Arc of the component multigraph, tagged with its originating D-arc."""

    source: int  # component index
    target: int
    d_arc: tuple


@dataclass
class CompGraph:
    """Multigraph on the components of H^un; arcs are A(D) \\ A(H)."""

    components: list  # list of frozensets of vertices
    arcs: list = field(default_factory=list)  # list of CompArc

    def component_of(self, v):
        for i, comp in enumerate(self.components):
            if v in comp:
                return i
        raise GraphError(f"vertex {v} in no component")


def build_comp_graph(d: DirectedGraph, h_arcs) -> CompGraph:
    """Contract the components of H^un and keep the leftover arcs of D."""
    h_arcs = frozenset(h_arcs)
    if not h_arcs <= d.arcs:
        raise GraphError("subgraph arcs must be arcs of the parent graph")
    h_graph = DirectedGraph(d.n, h_arcs)
    comps = h_graph.connected_components()
    index = {}
    for ci, comp in enumerate(comps):
        for v in comp:
            index[v] = ci
    cg = CompGraph(list(comps))
    for arc in sorted(d.arcs - h_arcs):
        i, j = arc
        cg.arcs.append(CompArc(index[i], index[j], arc))
    return cg


def weight_decrease(arc: CompArc, omega) -> int:
    """omega(source) - omega(target) of the originating D-arc."""
    i, j = arc.d_arc
    return omega[i] - omega[j]


def _directed_cycles(cg: CompGraph):
    """Directed cycles of the multigraph as arc tuples.

    Loops are length-1 cycles; longer cycles visit distinct nodes, and
    parallel arcs yield distinct cycles.  Rotations are deduplicated by
    rooting each cycle at its smallest node.
    """
    by_source = {}
    for a in cg.arcs:
        by_source.setdefault(a.source, []).append(a)
    for a in cg.arcs:
        if a.source == a.target:
            yield (a,)
    nodes = sorted(by_source)
    for root in nodes:
        # DFS over arc paths root -> ... with nodes > root, distinct
        stack = [(a, (a,)) for a in by_source.get(root, [])
                 if a.target > root]
        while stack:
            arc, path = stack.pop()
            for nxt in by_source.get(arc.target, []):
                if nxt.target == root and nxt.source != nxt.target:
                    yield path + (nxt,)
                elif nxt.target > root and nxt.target != nxt.source and \
                        all(p.target != nxt.target for p in path):
                    stack.append((nxt, path + (nxt,)))
        # length-2 cycles root -> x -> root handled above; nothing extra


def is_admissible(d: DirectedGraph, h_arcs):
    """(admissible?, violating cycle or None) for a path consistent subgraph.

    Admissible: every directed cycle C of the component multigraph has
    total weight decrease strictly greater than -|C|.
    """
    omega = compute_weight(d, h_arcs)
    if isinstance(omega, PathInconsistent):
        raise GraphError("admissibility is defined for path consistent subgraphs")
    cg = build_comp_graph(d, h_arcs)
    for cyc in _directed_cycles(cg):
        total = sum(weight_decrease(a, omega) for a in cyc)
        if total <= -len(cyc):
            return False, cyc
    return True, None


def is_face_of_tilde(d: DirectedGraph, h_arcs) -> bool:
    """Is conv(rho(H)) a face of the origin-augmented polytope of D?"""
    if not d.is_acyclic():
        raise GraphError("face criterion requires an acyclic parent graph")
    omega = compute_weight(d, h_arcs)
    if isinstance(omega, PathInconsistent):
        return False
    ok, _ = is_admissible(d, h_arcs)
    return ok
