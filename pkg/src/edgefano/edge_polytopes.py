"""Polytopes attached to directed graphs and the cycle-based smoothness test.

The three constructions map a graph on vertices 1..n into Z^n via
rho((i,j)) = e_i - e_j: the directed edge polytope (hull of the rho
vectors), the symmetric edge polytope (hull of +-rho over underlying
edges), and the acyclic-graph polytope that additionally contains the
origin.  On top of these sit the homogeneous-cycle labeling mu, the
distance compatibility condition, and the explicit supporting-hyperplane
construction that exhibits a cycle as lying on a proper face.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .digraph import CycleWalk, DirectedGraph, GraphError, UndirectedGraph
from .geometry import LatticePolytope


def rho(arc, n):
    """The lattice vector e_i - e_j of an arc (i, j)."""
    i, j = arc
    v = [0] * n
    v[i - 1] = 1
    v[j - 1] = -1
    return tuple(v)


def directed_edge_polytope(g: DirectedGraph) -> LatticePolytope:
    """Hull of rho(e) over all arcs of g."""
    if not g.arcs:
        raise GraphError("directed edge polytope needs at least one arc")
    return LatticePolytope(rho(a, g.n) for a in g.arcs)


def symmetric_edge_polytope(u) -> LatticePolytope:
    """Hull of +-(e_i - e_j) over the edges of an undirected graph.

    Accepts a directed graph as well, in which case its underlying graph
    is used (both orientations contribute regardless of the input arcs).
    """
    if isinstance(u, DirectedGraph):
        u = u.underlying()
    if not u.edges:
        raise GraphError("symmetric edge polytope needs at least one edge")
    pts = []
    for e in u.edges:
        i, j = sorted(e)
        pts.append(rho((i, j), u.n))
        pts.append(rho((j, i), u.n))
    return LatticePolytope(pts)


def tilde_polytope(d: DirectedGraph) -> LatticePolytope:
    """Hull of the origin together with rho(e) over the arcs of an acyclic d."""
    if not d.is_acyclic():
        raise GraphError("tilde polytope is defined for acyclic graphs only")
    pts = [tuple(0 for _ in range(d.n))]
    pts += [rho(a, d.n) for a in d.arcs]
    return LatticePolytope(pts)


def is_fano_graph(g: DirectedGraph) -> bool:
    """Combinatorial Fano criterion: every arc lies on a directed cycle."""
    return g.every_arc_on_directed_cycle()


@dataclass(frozen=True)
class HomogeneousCycle:
    """A balanced cycle walk with its vertex labeling mu.

    mu decreases by 1 along forward arcs and increases along backward
    arcs, normalized to minimum 0; it depends only on the arc set.
    """

    walk: CycleWalk
    mu: dict

    @property
    def vertices(self):
        return self.walk.vertices

    @property
    def arcs(self):
        return self.walk.arcs

    @property
    def delta_plus(self):
        return self.walk.delta_plus

    @property
    def delta_minus(self):
        return self.walk.delta_minus

    def arc_set(self):
        return self.walk.arc_set()

    def __hash__(self):
        return hash(self.walk)


def mu_labeling(walk: CycleWalk) -> dict:
    """The unique min-0 labeling of a homogeneous cycle walk."""
    if not walk.is_homogeneous():
        raise GraphError("mu labeling requires a homogeneous cycle")
    vals = {walk.vertices[0]: 0}
    cur = 0
    for k in range(walk.length - 1):
        cur += -1 if walk.forward[k] else 1
        vals[walk.vertices[k + 1]] = cur
    m = min(vals.values())
    return {v: x - m for v, x in vals.items()}


def homogeneous_cycles(g: DirectedGraph):
    """All homogeneous cycle walks of g with their mu labelings."""
    for walk in g.cycle_walks():
        if walk.is_homogeneous():
            yield HomogeneousCycle(walk, mu_labeling(walk))


def mu_dist_condition(g: DirectedGraph, c: HomogeneousCycle) -> bool:
    """mu(i_a) - mu(i_b) <= dist(i_a, i_b) for all cycle vertex pairs."""
    dist = g.distance_matrix()
    vs = set(c.vertices)
    for a in vs:
        for b in vs:
            if a != b and c.mu[a] - c.mu[b] > dist[a][b]:
                return False
    return True


@dataclass(frozen=True)
class SupportingHyperplane:
    """Integer functional with a . x <= 1 on the polytope, = 1 on a face."""

    coefficients: tuple
    level: int = 1

    def value(self, point):
        return sum(a * x for a, x in zip(self.coefficients, point))


def supporting_hyperplane(g: DirectedGraph, c: HomogeneousCycle) -> SupportingHyperplane:
    """The hyperplane sum a_k x_k = 1 cutting out a face containing the cycle.

    On cycle vertices a_k = mu(k); elsewhere a_k is the largest value
    forced by directed distances from the cycle, floored at 0.
    """
    if not is_fano_graph(g):
        raise GraphError("supporting hyperplane requires a Fano graph")
    if not mu_dist_condition(g, c):
        raise GraphError("mu/dist condition violated; no supporting hyperplane")
    dist = g.distance_matrix()
    cyc = set(c.vertices)
    a = [0] * g.n
    for v in cyc:
        a[v - 1] = c.mu[v]
    for k in range(1, g.n + 1):
        if k in cyc:
            continue
        best = 0
        for v in cyc:
            if dist[v][k] != math.inf:
                best = max(best, c.mu[v] - dist[v][k])
        a[k - 1] = best
    h = SupportingHyperplane(tuple(a))
    for arc in g.arcs:
        i, j = arc
        val = a[i - 1] - a[j - 1]
        assert val <= 1, f"hyperplane not supporting at arc {arc}"
        if arc in c.arcs:
            assert val == 1, f"hyperplane not tight on cycle arc {arc}"
    return h


def higashitani_smooth(g: DirectedGraph) -> bool:
    """No homogeneous cycle is distance-compatible; equivalent to smooth X_G."""
    if not is_fano_graph(g):
        raise GraphError("smoothness criterion requires a Fano graph")
    for c in homogeneous_cycles(g):
        if mu_dist_condition(g, c):
            return False
    return True
