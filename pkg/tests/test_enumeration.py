import random

import pytest

from edgefano.digraph import DirectedGraph
from edgefano.edge_polytopes import is_fano_graph
from edgefano.enumeration import (
    acyclic_digraph_masks,
    canonical_mask,
    connected_digraph_masks,
    cycle_undirected,
    directed_cycle,
    fano_digraph_masks,
    glued_cycle_family,
    glued_even_cycles,
    graph_to_mask,
    mask_to_graph,
    random_connected_fano_digraph,
    symmetric_digraph,
    undirected_graph_masks,
)


def test_mask_roundtrip():
    g = DirectedGraph(4, [(1, 2), (2, 3), (4, 1)])
    assert mask_to_graph(graph_to_mask(g), 4) == g


def test_canonical_mask_invariance():
    g = DirectedGraph(3, [(1, 2), (2, 3), (3, 1)])
    h = DirectedGraph(3, [(2, 1), (1, 3), (3, 2)])  # relabeled copy
    assert canonical_mask(graph_to_mask(g), 3) == canonical_mask(graph_to_mask(h), 3)


def test_known_counts():
    # unlabeled digraph counts on n nodes (connected, >= 1 arc)
    assert len(connected_digraph_masks(2)) == 2
    assert len(connected_digraph_masks(3)) == 13
    assert len(connected_digraph_masks(4)) == 199
    assert len(connected_digraph_masks(5)) == 9364
    # unlabeled acyclic digraphs (DAGs), including the arcless one
    assert [len(acyclic_digraph_masks(n)) for n in (1, 2, 3, 4, 5)] == \
        [1, 2, 6, 31, 302]


def test_fano_masks_are_fano():
    for n in (2, 3, 4):
        for m in fano_digraph_masks(n):
            assert is_fano_graph(mask_to_graph(m, n))
    # connected enumeration is a subset of the general one
    assert set(connected_digraph_masks(4, fano_only=True)) <= \
        set(fano_digraph_masks(4))


def test_undirected_counts():
    # graphs with >= 1 edge up to isomorphism: 1, 3, 10, 33, 155
    assert [len(undirected_graph_masks(n)) for n in (2, 3, 4, 5, 6)] == \
        [1, 3, 10, 33, 155]


def test_symmetric_digraph():
    g = symmetric_digraph(cycle_undirected(3))
    assert len(g.arcs) == 6
    assert is_fano_graph(g)


def test_directed_cycle():
    g = directed_cycle(4)
    assert g.arcs == frozenset({(1, 2), (2, 3), (3, 4), (4, 1)})
    assert is_fano_graph(g)


def test_glued_cycles_shape():
    g = glued_even_cycles(2, 3, 2)
    # 4-cycle and 6-cycle sharing 2 arcs: 4 + 6 - 2 arcs, 4 + 6 - 3 vertices
    assert len(g.arcs) == 8
    assert g.n == 7
    assert is_fano_graph(g)
    with pytest.raises(ValueError):
        glued_even_cycles(2, 2, 4)
    with pytest.raises(ValueError):
        glued_even_cycles(2, 2, 3)  # second cycle would equal the first


def test_glued_family_excludes_double_square():
    fam = glued_cycle_family()
    assert all((k, l, s) != (2, 2, 2) for k, l, s, _ in fam)
    assert len(fam) == 10
    for _, _, _, g in fam:
        assert is_fano_graph(g)
        assert len(g.connected_components()) == 1


def test_random_fano_sampler_deterministic():
    rng1 = random.Random(7)
    rng2 = random.Random(7)
    gs1 = [random_connected_fano_digraph(5, rng1) for _ in range(10)]
    gs2 = [random_connected_fano_digraph(5, rng2) for _ in range(10)]
    assert gs1 == gs2
    for g in gs1:
        assert is_fano_graph(g)
        assert len(g.connected_components()) == 1
