"""Cross-validation sweeps: combinatorial criteria against exact geometry.

Each sweep replays one of the library's graph-level criteria over an
exhaustive (or seeded random) family and compares it with the verdict of
the exact polytope engine.  The sweeps return SweepResult records and
are shared by the command line `verify` command and the acceptance test
suite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .classify import classify_acyclic_dim2, rigid_certified
from .digraph import DirectedGraph
from .edge_polytopes import (
    directed_edge_polytope,
    higashitani_smooth,
    homogeneous_cycles,
    is_fano_graph,
    mu_dist_condition,
    rho,
    supporting_hyperplane,
    symmetric_edge_polytope,
    tilde_polytope,
)
from .enumeration import (
    acyclic_digraph_masks,
    acyclic_digraphs,
    canonical_mask,
    connected_digraphs,
    cycle_undirected,
    glued_cycle_family,
    graph_to_mask,
    mask_to_graph,
    random_connected_fano_digraph,
    symmetric_digraph,
    undirected_graphs,
)
from .face_theory import is_face_of_tilde
from .geometry import free_sum


@dataclass
class SweepResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return self.checked > 0 and not self.failures

    def fail(self, msg):
        if len(self.failures) < 20:
            self.failures.append(msg)
        else:
            self.failures.append("... further failures suppressed")
            raise _SweepAbort

    def summary(self):
        status = "ok" if self.passed else "FAIL"
        line = f"{self.name}: {status} ({self.checked} cases)"
        for f in self.failures:
            line += f"\n  - {f}"
        return line


class _SweepAbort(Exception):
    pass


def _run(fn, result, *args):
    try:
        fn(result, *args)
    except _SweepAbort:
        pass
    return result


def sweep_connected_digraphs(max_n=5):
    """One pass over all connected digraphs (>= 1 arc, up to relabeling).

    Checks, per graph g with polytope P = conv(rho(arcs)):
      * every-arc-on-a-cycle == P Fano == (P terminal and reflexive);
      * on Fano graphs, the pattern certificate == all 2-faces triangles;
      * on Fano graphs, the cycle smoothness test == simplicial == smooth.
    Returns three SweepResults in that order.
    """
    r_fano = SweepResult("fano equivalence")
    r_main = SweepResult("rigidity certificate vs 2-face census")
    r_smooth = SweepResult("cycle smoothness vs simplicial/smooth")

    def go():
        for g in connected_digraphs(max_n):
            poly = directed_edge_polytope(g)
            fg = is_fano_graph(g)
            r_fano.checked += 1
            if fg != poly.is_fano():
                r_fano.fail(f"{g}: graph test {fg}, geometric {poly.is_fano()}")
                continue
            if not fg:
                continue
            if not (poly.is_terminal() and poly.is_reflexive()):
                r_fano.fail(f"{g}: Fano but not terminal+reflexive")

            certified, witness = rigid_certified(g)
            all_tri, census = poly.two_faces_all_triangles()
            r_main.checked += 1
            if set(census) - {3, 4}:
                r_main.fail(f"{g}: 2-face census {census} has a non-square polygon")
            if certified != all_tri:
                r_main.fail(f"{g}: certificate {certified} (witness {witness}), "
                            f"census {census}")

            smooth = higashitani_smooth(g)
            r_smooth.checked += 1
            if smooth != poly.is_simplicial() or smooth != poly.is_smooth():
                r_smooth.fail(f"{g}: cycle test {smooth}, simplicial "
                              f"{poly.is_simplicial()}, smooth {poly.is_smooth()}")

    try:
        go()
    except _SweepAbort:
        pass
    return r_fano, r_main, r_smooth


def sample_certificate_vs_squares(n=6, samples=10_000, seed=20260823):
    """Seeded random connected Fano digraphs on n vertices: the pattern
    certificate must coincide with square-freeness of the 2-faces."""
    result = SweepResult(f"certificate vs 2-faces, {samples} random n={n}")
    rng = random.Random(seed)

    def go(r):
        for _ in range(samples):
            g = random_connected_fano_digraph(n, rng)
            certified, witness = rigid_certified(g)
            square = directed_edge_polytope(g).has_non_triangle_two_face()
            r.checked += 1
            if certified != (not square):
                r.fail(f"{g}: certificate {certified} (witness {witness}), "
                       f"square 2-face present: {square}")

    return _run(go, result)


def _tilde_face_oracle(d: DirectedGraph):
    """Fast membership test: is conv(rho(H)) a face of the augmented polytope?

    Precomputes, for the acyclic graph d, which facets are tight on each
    arc point and which hull vertices each facet carries.  The smallest
    face containing rho(H) is cut out by the facets tight on all of H;
    conv(rho(H)) is a face iff that face has all its vertices inside
    rho(H).  The origin is never in conv(rho(H)) for acyclic d, so the
    improper face never matches.
    """
    poly = tilde_polytope(d)
    arcs = sorted(d.arcs)
    facets = poly.facets()
    emb = {a: poly._embed_point(rho(a, d.n)) for a in arcs}
    verts = poly.embedded_vertices
    from .intlinalg import dot

    tight = {}
    for a in arcs:
        m = 0
        for j, f in enumerate(facets):
            if dot(f.normal, emb[a]) == f.rhs:
                m |= 1 << j
        tight[a] = m
    facet_vmask = []
    for f in facets:
        m = 0
        for i, v in enumerate(verts):
            if dot(f.normal, v) == f.rhs:
                m |= 1 << i
        facet_vmask.append(m)
    vert_arc = {}
    emb_to_arc = {e: a for a, e in emb.items()}
    for i, v in enumerate(verts):
        vert_arc[i] = emb_to_arc.get(v)  # None for the origin

    def is_face(h_arcs):
        if not h_arcs:
            return True
        fm = -1
        for a in h_arcs:
            fm &= tight[a]
        if fm == 0:
            return False
        vm = (1 << len(verts)) - 1
        j = 0
        m = fm
        while m:
            if m & 1:
                vm &= facet_vmask[j]
            m >>= 1
            j += 1
        h = set(h_arcs)
        i = 0
        while vm:
            if vm & 1 and vert_arc[i] not in h:
                return False
            vm >>= 1
            i += 1
        return True

    return is_face


def sweep_face_criterion(max_n=5):
    """All acyclic digraphs up to max_n vertices, all arc subsets H:
    the weight/admissibility criterion must match the geometric face test."""
    result = SweepResult("face criterion vs geometric faces")

    def go(r):
        from itertools import chain, combinations

        for d in acyclic_digraphs(max_n):
            arcs = sorted(d.arcs)
            oracle = _tilde_face_oracle(d) if arcs else (lambda h: True)
            subsets = chain.from_iterable(
                combinations(arcs, k) for k in range(len(arcs) + 1))
            for h in subsets:
                comb = is_face_of_tilde(d, h)
                geom = oracle(h)
                r.checked += 1
                if comb != geom:
                    r.fail(f"{d}, H={list(h)}: criterion {comb}, geometric {geom}")

    return _run(go, result)


def sweep_symmetric(max_n=6):
    """All undirected graphs with >= 1 edge up to max_n vertices: the
    certificate on the symmetric orientation must equal 4-cycle-freeness."""
    result = SweepResult("symmetric digraphs vs 4-cycles")

    def go(r):
        for u in undirected_graphs(max_n):
            g = symmetric_digraph(u)
            certified, _ = rigid_certified(g)
            r.checked += 1
            if certified != (not u.has_4cycle()):
                r.fail(f"{u}: certificate {certified}, "
                       f"4-cycle {u.has_4cycle()}")

    return _run(go, result)


def sweep_even_cycles(ks=(2, 3)):
    """Symmetric edge polytope of the 2k-cycle: dimension 2k-1 and every
    (2k-3)-face a simplex."""
    result = SweepResult("even-cycle symmetric polytopes")

    def go(r):
        for k in ks:
            poly = symmetric_edge_polytope(cycle_undirected(2 * k))
            r.checked += 1
            if poly.dim != 2 * k - 1:
                r.fail(f"2k={2 * k}: dim {poly.dim}, expected {2 * k - 1}")
                continue
            for face in poly.faces_of_dim(2 * k - 3):
                if len(face.vertex_subset) != 2 * k - 2:
                    r.fail(f"2k={2 * k}: non-simplex {2 * k - 3}-face "
                           f"with {len(face.vertex_subset)} vertices")
                    break

    return _run(go, result)


def sweep_glued_cycles():
    """Every glued pair of directed even cycles must be certified rigid and
    geometrically square-free."""
    result = SweepResult("glued even directed cycles")

    def go(r):
        for k, l, shared, g in glued_cycle_family():
            certified, witness = rigid_certified(g)
            all_tri, census = directed_edge_polytope(g).two_faces_all_triangles()
            r.checked += 1
            if not certified:
                r.fail(f"(2k,2l,shared)=({2*k},{2*l},{shared}): "
                       f"not certified, witness {witness}")
            if not all_tri:
                r.fail(f"(2k,2l,shared)=({2*k},{2*l},{shared}): "
                       f"square 2-face, census {census}")

    return _run(go, result)


def sweep_dim2_classification():
    """All acyclic digraphs without isolated vertices whose hull is
    2-dimensional: the triangle/square classification must match the
    geometric vertex count.

    The enumeration is complete on <= 6 vertices: the arc vectors of a
    connected component on d_c vertices have linear rank d_c - 1, the
    linear rank of the whole configuration is at most dim + 1 = 3, so
    every component has at most 4 vertices and there are at most 3
    components.  Graphs on <= 5 vertices are enumerated outright; the
    6-vertex cases are disjoint unions of connected pieces on 2..4
    vertices.
    """
    result = SweepResult("dimension-2 triangle/square classification")

    def pieces(sizes):
        out = {k: [] for k in sizes}
        for k in sizes:
            for m in acyclic_digraph_masks(k):
                g = mask_to_graph(m, k)
                touched = {v for a in g.arcs for v in a}
                if len(touched) == k and len(g.connected_components()) == 1:
                    out[k].append(g)
        return out

    def union(graphs):
        arcs = []
        offset = 0
        for g in graphs:
            arcs += [(i + offset, j + offset) for i, j in g.arcs]
            offset += g.n
        return DirectedGraph(offset, arcs)

    def go(r):
        candidates = []
        for d in acyclic_digraphs(5):
            touched = {v for a in d.arcs for v in a}
            if len(touched) == d.n:
                candidates.append(d)
        ps = pieces((2, 3, 4))
        for a in ps[2]:
            for b in ps[4]:
                candidates.append(union([a, b]))
        for i, a in enumerate(ps[3]):
            for b in ps[3][i:]:
                candidates.append(union([a, b]))
        candidates.append(union([ps[2][0]] * 3))

        seen = set()
        for d in candidates:
            key = (d.n, canonical_mask(graph_to_mask(d), d.n))
            if key in seen:
                continue
            seen.add(key)
            poly = directed_edge_polytope(d)
            if poly.dim != 2:
                continue
            verdict = classify_acyclic_dim2(d)
            nv = len(poly.vertices)
            r.checked += 1
            if nv not in (3, 4):
                r.fail(f"{d}: 2-dimensional hull with {nv} vertices")
            elif verdict != ("triangle" if nv == 3 else "square"):
                r.fail(f"{d}: classified {verdict}, hull has {nv} vertices")

    return _run(go, result)


def sweep_supporting_hyperplanes(count=100, seed=20260823, ns=(3, 4, 5, 6)):
    """Seeded Fano graphs with a distance-compatible homogeneous cycle:
    the constructed functional must be <= 1 on every arc vector and = 1 on
    the cycle (checked here independently of the constructor's asserts)."""
    result = SweepResult("supporting hyperplane construction")
    rng = random.Random(seed)

    def go(r):
        while r.checked < count:
            g = random_connected_fano_digraph(rng.choice(ns), rng)
            for c in homogeneous_cycles(g):
                if not mu_dist_condition(g, c):
                    continue
                h = supporting_hyperplane(g, c)
                vals = {a: h.value(rho(a, g.n)) for a in g.arcs}
                r.checked += 1
                if any(v > 1 for v in vals.values()):
                    r.fail(f"{g}, cycle {c.arcs}: functional exceeds 1")
                if any(vals[a] != 1 for a in c.arcs):
                    r.fail(f"{g}, cycle {c.arcs}: not tight on the cycle")
                if r.checked >= count:
                    break

    return _run(go, result)


def sweep_free_sums(max_n=4):
    """Free sums of directed-cycle polytopes stay Fano with the expected
    dimension (sanity for the geometric engine on composite input)."""
    from .enumeration import directed_cycle

    result = SweepResult("free sums of cycle polytopes")

    def go(r):
        for a in range(2, max_n + 1):
            for b in range(2, max_n + 1):
                p = directed_edge_polytope(directed_cycle(a))
                q = directed_edge_polytope(directed_cycle(b))
                s = free_sum(p, q)
                r.checked += 1
                if not s.is_fano() or s.dim != p.dim + q.dim:
                    r.fail(f"cycles ({a},{b}): free sum dim {s.dim}, "
                           f"fano {s.is_fano()}")

    return _run(go, result)


def run_all(max_n=5, samples=10_000, seed=20260823, sample_n=6):
    """Every sweep, in acceptance order."""
    results = list(sweep_connected_digraphs(max_n))
    results.append(sample_certificate_vs_squares(sample_n, samples, seed))
    results.append(sweep_face_criterion(min(max_n, 5)))
    results.append(sweep_symmetric(6))
    results.append(sweep_even_cycles())
    results.append(sweep_glued_cycles())
    results.append(sweep_dim2_classification())
    results.append(sweep_supporting_hyperplanes(seed=seed))
    results.append(sweep_free_sums())
    return results
