import pytest

from edgefano.digraph import DirectedGraph, GraphError, UndirectedGraph
from edgefano.edge_polytopes import (
    directed_edge_polytope,
    higashitani_smooth,
    homogeneous_cycles,
    is_fano_graph,
    mu_dist_condition,
    mu_labeling,
    rho,
    supporting_hyperplane,
    symmetric_edge_polytope,
    tilde_polytope,
)


def c1_pattern(extra=()):
    """The two-source/two-sink 4-cycle plus return arcs to make it Fano."""
    return DirectedGraph(4, [(1, 2), (1, 4), (3, 2), (3, 4), (2, 1), (4, 3),
                             *extra])


def test_rho():
    assert rho((1, 3), 4) == (1, 0, -1, 0)


def test_directed_edge_polytope_triangle():
    g = DirectedGraph(3, [(1, 2), (2, 3), (3, 1)])
    p = directed_edge_polytope(g)
    assert p.dim == 2
    assert len(p.vertices) == 3
    assert p.is_fano() and p.is_reflexive() and p.is_terminal() and p.is_smooth()


def test_directed_edge_polytope_needs_arcs():
    with pytest.raises(GraphError):
        directed_edge_polytope(DirectedGraph(3, []))


def test_symmetric_edge_polytope():
    u = UndirectedGraph(4, [{1, 2}, {2, 3}, {3, 4}, {4, 1}])
    p = symmetric_edge_polytope(u)
    assert p.dim == 3
    assert len(p.vertices) == 8
    # directed input uses the underlying graph, both orientations
    g = DirectedGraph(3, [(1, 2), (2, 3), (3, 1)])
    assert len(symmetric_edge_polytope(g).vertices) == 6


def test_tilde_polytope():
    d = DirectedGraph(2, [(1, 2)])
    p = tilde_polytope(d)
    assert p.dim == 1
    assert len(p.vertices) == 2
    with pytest.raises(GraphError):
        tilde_polytope(DirectedGraph(3, [(1, 2), (2, 3), (3, 1)]))


def test_is_fano_graph():
    assert is_fano_graph(DirectedGraph(3, [(1, 2), (2, 3), (3, 1)]))
    assert not is_fano_graph(DirectedGraph(4, [(1, 2), (2, 3), (3, 1), (1, 4)]))


def test_mu_labeling_two_source_two_sink():
    g = DirectedGraph(4, [(1, 2), (1, 4), (3, 2), (3, 4)])
    walks = [c for c in homogeneous_cycles(g)]
    assert len(walks) == 1
    mu = walks[0].mu
    assert mu[1] == mu[3] == 1 and mu[2] == mu[4] == 0


def test_mu_labeling_double_path():
    g = DirectedGraph(4, [(1, 2), (2, 3), (1, 4), (4, 3)])
    (c,) = homogeneous_cycles(g)
    assert c.mu[1] == 2 and c.mu[3] == 0 and c.mu[2] == c.mu[4] == 1


def test_mu_requires_homogeneous():
    g = DirectedGraph(3, [(1, 2), (2, 3), (3, 1)])
    walks = list(g.cycle_walks())
    with pytest.raises(GraphError):
        mu_labeling(walks[0])


def test_mu_rotation_invariant():
    g = DirectedGraph(4, [(1, 2), (1, 4), (3, 2), (3, 4)])
    (c,) = homogeneous_cycles(g)
    # rebuild the walk rotated by one step; mu must not change
    from edgefano.digraph import CycleWalk
    vs = c.walk.vertices[1:] + c.walk.vertices[:1]
    arcs = c.walk.arcs[1:] + c.walk.arcs[:1]
    flags = c.walk.forward[1:] + c.walk.forward[:1]
    assert mu_labeling(CycleWalk(vs, arcs, flags)) == c.mu


def test_mu_dist_condition_chord():
    # adding the chord (1,3) makes dist(1,3)=1 < mu(1)-mu(3)=2
    g = DirectedGraph(4, [(1, 2), (2, 3), (1, 4), (4, 3), (1, 3), (3, 1)])
    cs = [c for c in homogeneous_cycles(g) if len(c.arcs) == 4]
    double_path = [c for c in cs
                   if c.arc_set() == frozenset({(1, 2), (2, 3), (1, 4), (4, 3)})]
    assert double_path and not mu_dist_condition(g, double_path[0])


def test_supporting_hyperplane_values():
    g = c1_pattern()
    cs = [c for c in homogeneous_cycles(g)
          if c.arc_set() == frozenset({(1, 2), (1, 4), (3, 2), (3, 4)})]
    assert cs and mu_dist_condition(g, cs[0])
    h = supporting_hyperplane(g, cs[0])
    assert h.coefficients == (1, 0, 1, 0)
    for arc in g.arcs:
        val = h.value(rho(arc, g.n))
        assert val <= 1
        if arc in cs[0].arcs:
            assert val == 1


def test_supporting_hyperplane_preconditions():
    g = DirectedGraph(4, [(1, 2), (2, 3), (1, 4), (4, 3)])  # not Fano
    (c,) = homogeneous_cycles(g)
    with pytest.raises(GraphError):
        supporting_hyperplane(g, c)


def test_higashitani_smooth():
    assert higashitani_smooth(DirectedGraph(3, [(1, 2), (2, 3), (3, 1)]))
    # symmetric triangle: Q-factorial and smooth
    sym3 = DirectedGraph(3, [(1, 2), (2, 1), (2, 3), (3, 2), (1, 3), (3, 1)])
    p = directed_edge_polytope(sym3)
    assert higashitani_smooth(sym3) == p.is_smooth()
    # the completed two-source/two-sink graph has a qualifying cycle
    g = c1_pattern()
    assert not higashitani_smooth(g)
    assert not directed_edge_polytope(g).is_simplicial()
    with pytest.raises(GraphError):
        higashitani_smooth(DirectedGraph(2, [(1, 2)]))
