"""Decision procedure for rigidity of the toric variety of a digraph.

The certificate is purely combinatorial: the graph must avoid the
four-vertex pattern with two sources and two sinks (C1), and every
occurrence of the four-vertex double-path pattern (C2) must be rescued
by a chord or an outside length-two path.  The geometric counterpart
(no square 2-face of the directed edge polytope) is available through
the exact polytope engine and used for cross-validation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import permutations

from .digraph import DirectedGraph, GraphError
from .edge_polytopes import (
    directed_edge_polytope,
    higashitani_smooth,
    is_fano_graph,
)


@dataclass(frozen=True)
class C1Witness:
    """Occurrence of arcs {(i1,i2), (i1,i4), (i3,i2), (i3,i4)}."""

    vertices: tuple  # (i1, i2, i3, i4), distinct

    @property
    def arcs(self):
        i1, i2, i3, i4 = self.vertices
        return frozenset({(i1, i2), (i1, i4), (i3, i2), (i3, i4)})

    @property
    def kind(self):
        return "C1"


@dataclass(frozen=True)
class C2Witness:
    """Occurrence of arcs {(i1,i2), (i2,i3), (i1,i4), (i4,i3)}.

    rescue is ("edge",) when the chord (i1,i3) is present, ("vertex", j)
    when an outside two-step path i1 -> j -> i3 exists, or None for an
    unrescued (square-producing) occurrence.
    """

    vertices: tuple
    rescue: tuple | None = None

    @property
    def arcs(self):
        i1, i2, i3, i4 = self.vertices
        return frozenset({(i1, i2), (i2, i3), (i1, i4), (i4, i3)})

    @property
    def kind(self):
        return "C2"


def find_c1(g: DirectedGraph):
    """First C1 occurrence in lexicographic vertex order, or None."""
    for vs in permutations(range(1, g.n + 1), 4):
        i1, i2, i3, i4 = vs
        if ((i1, i2) in g.arcs and (i1, i4) in g.arcs
                and (i3, i2) in g.arcs and (i3, i4) in g.arcs):
            return C1Witness(vs)
    return None


def _c2_rescue(g: DirectedGraph, vs):
    i1, i2, i3, i4 = vs
    if (i1, i3) in g.arcs:
        return ("edge",)
    for j in range(1, g.n + 1):
        if j in vs:
            continue
        if (i1, j) in g.arcs and (j, i3) in g.arcs:
            return ("vertex", j)
    return None


def find_bad_c2(g: DirectedGraph):
    """First unrescued C2 occurrence, or None.

    A C2 on (i1,i2,i3,i4) is harmless when the chord (i1,i3) exists or
    some vertex j outside the pattern gives arcs (i1,j),(j,i3).
    """
    for vs in permutations(range(1, g.n + 1), 4):
        i1, i2, i3, i4 = vs
        if ((i1, i2) in g.arcs and (i2, i3) in g.arcs
                and (i1, i4) in g.arcs and (i4, i3) in g.arcs):
            if _c2_rescue(g, vs) is None:
                return C2Witness(vs, rescue=None)
    return None


def first_arc_not_on_cycle(g: DirectedGraph):
    dist = g.distance_matrix()
    for arc in sorted(g.arcs):
        i, j = arc
        if dist[j][i] == math.inf:
            return arc
    return None


def rigid_certified(g: DirectedGraph):
    """(certified?, witness) by the C1 / unrescued-C2 criterion.

    Requires a Fano graph.  C1 and C2 patterns never straddle connected
    components, and rescue vertices are forced into the component of the
    pattern, so the global search decides every component at once.
    """
    if not is_fano_graph(g):
        bad = first_arc_not_on_cycle(g)
        raise GraphError(f"not Fano: arc {bad} on no directed cycle")
    w = find_c1(g)
    if w is not None:
        return False, w
    w = find_bad_c2(g)
    if w is not None:
        return False, w
    return True, None


def two_face_census(g: DirectedGraph):
    """Multiset {vertex count: multiplicity} of geometric 2-faces of A_G."""
    if not is_fano_graph(g):
        raise GraphError("two-face census requires a Fano graph")
    _, census = directed_edge_polytope(g).two_faces_all_triangles()
    return census


_C1_ARCS = frozenset({(1, 2), (1, 4), (3, 2), (3, 4)})
_C2_ARCS = frozenset({(1, 2), (2, 3), (1, 4), (4, 3)})


def _isomorphic_to_pattern(g: DirectedGraph, pattern) -> bool:
    if g.n != 4 or len(g.arcs) != 4:
        return False
    for perm in permutations(range(1, 5)):
        relabel = {v: perm[v - 1] for v in range(1, 5)}
        if frozenset((relabel[i], relabel[j]) for i, j in g.arcs) == pattern:
            return True
    return False


def classify_acyclic_dim2(d: DirectedGraph) -> str:
    """'square' or 'triangle' for an acyclic graph with 2-dimensional hull.

    The hull is a square exactly for the two four-vertex patterns C1/C2
    (up to relabeling); every other qualifying graph gives a triangle.
    """
    if not d.is_acyclic():
        raise GraphError("dimension-2 classification requires an acyclic graph")
    touched = {v for arc in d.arcs for v in arc}
    if len(touched) != d.n:
        raise GraphError("isolated vertices not allowed")
    if directed_edge_polytope(d).dim != 2:
        raise GraphError("hull is not 2-dimensional")
    if _isomorphic_to_pattern(d, _C1_ARCS) or _isomorphic_to_pattern(d, _C2_ARCS):
        return "square"
    return "triangle"


@dataclass
class ClassificationReport:
    fano: bool
    reflexive_terminal: bool
    dim: int
    smooth_qfactorial: bool | None
    codim2_smooth: bool | None
    codim3_qfactorial: bool | None
    rigid_certified: bool
    witness: C1Witness | C2Witness | None = None
    not_fano_arc: tuple | None = None
    per_component: list = field(default_factory=list)

    def to_json_dict(self):
        d = {
            "fano": self.fano,
            "reflexive_terminal": self.reflexive_terminal,
            "dim": self.dim,
            "smooth_qfactorial": self.smooth_qfactorial,
            "codim2_smooth": self.codim2_smooth,
            "codim3_qfactorial": self.codim3_qfactorial,
            "rigid": self.rigid_certified,
            "witness": None,
            "components": [r.to_json_dict() for r in self.per_component],
        }
        if self.witness is not None:
            d["witness"] = {"kind": self.witness.kind,
                            "vertices": list(self.witness.vertices)}
        if self.not_fano_arc is not None:
            d["not_fano_arc"] = list(self.not_fano_arc)
        return d

    @classmethod
    def from_json_dict(cls, d):
        witness = None
        if d.get("witness"):
            vs = tuple(d["witness"]["vertices"])
            witness = C1Witness(vs) if d["witness"]["kind"] == "C1" else C2Witness(vs)
        return cls(
            fano=d["fano"],
            reflexive_terminal=d["reflexive_terminal"],
            dim=d["dim"],
            smooth_qfactorial=d["smooth_qfactorial"],
            codim2_smooth=d["codim2_smooth"],
            codim3_qfactorial=d["codim3_qfactorial"],
            rigid_certified=d["rigid"],
            witness=witness,
            not_fano_arc=tuple(d["not_fano_arc"]) if d.get("not_fano_arc") else None,
            per_component=[cls.from_json_dict(c) for c in d.get("components", [])],
        )


def full_report(g: DirectedGraph, oracle: bool = False) -> ClassificationReport:
    """Classify a graph; with oracle=True every combinatorial verdict is
    recomputed geometrically and asserted to agree."""
    if not g.arcs:
        raise GraphError("classification requires at least one arc")
    poly = directed_edge_polytope(g)
    if not is_fano_graph(g):
        report = ClassificationReport(
            fano=False, reflexive_terminal=False, dim=poly.dim,
            smooth_qfactorial=None, codim2_smooth=None,
            codim3_qfactorial=None, rigid_certified=False,
            not_fano_arc=first_arc_not_on_cycle(g))
        if oracle:
            assert not poly.is_fano()
        return report

    certified, witness = rigid_certified(g)
    smooth = higashitani_smooth(g)
    report = ClassificationReport(
        fano=True, reflexive_terminal=True, dim=poly.dim,
        smooth_qfactorial=smooth, codim2_smooth=True,
        codim3_qfactorial=certified, rigid_certified=certified,
        witness=witness)

    comps = g.connected_components()
    if len(comps) > 1:
        for comp in comps:
            sub, _ = g.restrict(comp)
            if sub.arcs:
                report.per_component.append(full_report(sub, oracle=oracle))

    if oracle:
        assert poly.is_fano()
        assert poly.is_terminal() and poly.is_reflexive()
        assert poly.is_smooth() == smooth
        assert poly.is_simplicial() == smooth
        assert poly.edge_lattice_lengths_ok() and poly.edges_at_height_one()
        all_triangles, _ = poly.two_faces_all_triangles()
        assert all_triangles == certified
    return report
