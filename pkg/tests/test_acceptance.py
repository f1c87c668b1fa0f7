"""Acceptance suite: every library-level criterion cross-checked against the
exact geometric oracle, one pass/fail line per criterion.

The heavy exhaustive sweep over all connected digraphs up to 5 vertices is
shared by the first three criteria through a session fixture.
"""

import pytest

from edgefano.digraph import DirectedGraph
from edgefano.enumeration import cycle_undirected, symmetric_digraph
from edgefano.face_theory import (
    build_comp_graph,
    compute_weight,
    is_admissible,
    weight_decrease,
)
from edgefano.classify import rigid_certified
from edgefano.verification import (
    sample_certificate_vs_squares,
    sweep_connected_digraphs,
    sweep_dim2_classification,
    sweep_even_cycles,
    sweep_face_criterion,
    sweep_glued_cycles,
    sweep_supporting_hyperplanes,
    sweep_symmetric,
)

N6_SAMPLES = 10_000
SEED = 20260823


def report(criterion, result):
    status = "PASS" if result.passed else "FAIL"
    print(f"\nACCEPTANCE {criterion}: {status} - {result.name} "
          f"({result.checked} cases)")
    for f in result.failures:
        print(f"  counterexample: {f}")
    assert result.passed, f"criterion {criterion}: {result.name}"


@pytest.fixture(scope="session")
def small_graph_sweep():
    return sweep_connected_digraphs(5)


def test_criterion_1_certificate_equals_square_free(small_graph_sweep):
    _, r_main, _ = small_graph_sweep
    report("1a (exhaustive n<=5)", r_main)
    r_sample = sample_certificate_vs_squares(6, N6_SAMPLES, SEED)
    report("1b (random n=6)", r_sample)


def test_criterion_2_fano_equals_terminal_reflexive(small_graph_sweep):
    r_fano, _, _ = small_graph_sweep
    report("2", r_fano)


def test_criterion_3_cycle_smoothness_equivalence(small_graph_sweep):
    _, _, r_smooth = small_graph_sweep
    report("3", r_smooth)


def test_criterion_4_face_criterion_equivalence():
    report("4", sweep_face_criterion(5))


def test_criterion_5_worked_example():
    d = DirectedGraph(7, [(1, 2), (3, 2), (3, 4), (1, 4), (5, 6),
                          (1, 3), (3, 5), (6, 7), (5, 7), (7, 2)])
    h = [(1, 2), (3, 2), (3, 4), (1, 4), (5, 6)]
    omega = compute_weight(d, h)
    cg = build_comp_graph(d, h)
    wd = {a.d_arc: weight_decrease(a, omega) for a in cg.arcs}
    loops = [a for a in cg.arcs if a.source == a.target]
    ok, _ = is_admissible(d, h)
    checks = [
        omega == {1: 1, 2: 2, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1},
        [a.d_arc for a in loops] == [(1, 3)],
        wd[(1, 3)] == 0,
        wd[(3, 5)] == 0,   # e1
        wd[(6, 7)] == 1,   # e2
        wd[(5, 7)] == 0,   # e3
        wd[(7, 2)] == -1,  # e4
        ok,
    ]
    status = "PASS" if all(checks) else "FAIL"
    print(f"\nACCEPTANCE 5: {status} - worked example weights/admissibility "
          f"({len(checks)} checks)")
    assert all(checks), (omega, wd, ok)


def test_criterion_6_symmetric_graphs():
    report("6", sweep_symmetric(6))


def test_criterion_7_even_cycle_polytopes():
    report("7a", sweep_even_cycles((2, 3)))
    ok, witness = rigid_certified(symmetric_digraph(cycle_undirected(6)))
    status = "PASS" if ok else "FAIL"
    print(f"\nACCEPTANCE 7b: {status} - symmetric 6-cycle certified rigid")
    assert ok, witness


def test_criterion_8_glued_cycles():
    report("8", sweep_glued_cycles())


def test_criterion_9_dim2_classification():
    report("9", sweep_dim2_classification())


def test_criterion_10_supporting_hyperplanes():
    report("10", sweep_supporting_hyperplanes(count=100, seed=SEED))
