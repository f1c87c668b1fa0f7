import pytest

from edgefano.classify import (
    ClassificationReport,
    classify_acyclic_dim2,
    find_bad_c2,
    find_c1,
    full_report,
    rigid_certified,
    two_face_census,
)
from edgefano.digraph import DirectedGraph, GraphError


def sym(edges, n):
    arcs = []
    for i, j in edges:
        arcs += [(i, j), (j, i)]
    return DirectedGraph(n, arcs)


def test_find_c1():
    g = sym([(1, 2), (2, 3), (3, 4), (4, 1)], 4)
    w = find_c1(g)
    assert w is not None and w.kind == "C1"
    assert len(w.arcs) == 4
    assert find_c1(DirectedGraph(3, [(1, 2), (2, 3), (3, 1)])) is None


def test_find_bad_c2_and_rescues():
    # double path 1->2->3, 1->4->3 closed up to a Fano graph
    base = [(1, 2), (2, 3), (1, 4), (4, 3), (3, 1)]
    g = DirectedGraph(4, base)
    w = find_bad_c2(g)
    assert w is not None and w.kind == "C2"
    # chord rescue
    g_chord = DirectedGraph(4, base + [(1, 3)])
    assert find_bad_c2(g_chord) is None
    # outside-vertex rescue
    g_out = DirectedGraph(5, base + [(1, 5), (5, 3)])
    assert find_bad_c2(g_out) is None
    # a rescue via one of the inner vertices does not count
    assert find_bad_c2(g) is not None


def test_rigid_certified_requires_fano():
    g = DirectedGraph(4, [(1, 2), (2, 3), (3, 1), (1, 4)])
    with pytest.raises(GraphError) as exc:
        rigid_certified(g)
    assert "(1, 4)" in str(exc.value)


def test_rigid_certified_verdicts():
    ok, w = rigid_certified(DirectedGraph(3, [(1, 2), (2, 3), (3, 1)]))
    assert ok and w is None
    ok, w = rigid_certified(sym([(1, 2), (2, 3), (3, 4), (4, 1)], 4))
    assert not ok and w.kind == "C1"


def test_two_face_census():
    census = two_face_census(sym([(1, 2), (2, 3), (3, 4), (4, 1)], 4))
    assert census == {4: 6}
    with pytest.raises(GraphError):
        two_face_census(DirectedGraph(2, [(1, 2)]))


def test_classify_acyclic_dim2():
    c1 = DirectedGraph(4, [(1, 2), (1, 4), (3, 2), (3, 4)])
    c2 = DirectedGraph(4, [(1, 2), (2, 3), (1, 4), (4, 3)])
    assert classify_acyclic_dim2(c1) == "square"
    assert classify_acyclic_dim2(c2) == "square"
    tri = DirectedGraph(3, [(1, 2), (2, 3), (1, 3)])
    assert classify_acyclic_dim2(tri) == "triangle"

    with pytest.raises(GraphError):
        classify_acyclic_dim2(DirectedGraph(3, [(1, 2), (2, 3), (3, 1)]))
    with pytest.raises(GraphError):
        classify_acyclic_dim2(DirectedGraph(5, [(1, 2), (2, 3), (1, 3)]))
    with pytest.raises(GraphError):
        classify_acyclic_dim2(DirectedGraph(2, [(1, 2)]))  # dim 0


def test_full_report_fano_rigid():
    r = full_report(DirectedGraph(3, [(1, 2), (2, 3), (3, 1)]), oracle=True)
    assert r.fano and r.reflexive_terminal and r.rigid_certified
    assert r.dim == 2 and r.smooth_qfactorial
    assert r.witness is None and r.per_component == []


def test_full_report_not_fano():
    r = full_report(DirectedGraph(4, [(1, 2), (2, 3), (3, 1), (1, 4)]),
                    oracle=True)
    assert not r.fano and not r.rigid_certified
    assert r.smooth_qfactorial is None
    assert r.not_fano_arc == (1, 4)


def test_full_report_disconnected_components():
    g = DirectedGraph(6, [(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4)])
    r = full_report(g, oracle=True)
    assert r.fano and r.rigid_certified
    assert len(r.per_component) == 2
    assert all(c.rigid_certified for c in r.per_component)


def test_report_json_roundtrip():
    for g in (DirectedGraph(3, [(1, 2), (2, 3), (3, 1)]),
              sym([(1, 2), (2, 3), (3, 4), (4, 1)], 4),
              DirectedGraph(6, [(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4)])):
        r = full_report(g)
        back = ClassificationReport.from_json_dict(r.to_json_dict())
        assert back.to_json_dict() == r.to_json_dict()


def test_smooth_implies_certified():
    """On every small Fano graph: smooth graphs must also be certified."""
    from edgefano.enumeration import connected_fano_digraphs
    from edgefano.edge_polytopes import higashitani_smooth

    for g in connected_fano_digraphs(4):
        if higashitani_smooth(g):
            ok, _ = rigid_certified(g)
            assert ok, g
