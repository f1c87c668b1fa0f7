"""Exhaustive and randomized generation of small digraphs.

Graphs on n vertices are packed into bitmasks over the n(n-1) ordered
arc slots, canonicalized as the minimum mask over all vertex
permutations.  The n=5 sweeps (a million labeled digraphs) are filtered
and canonicalized with vectorized numpy passes; everything else runs in
plain Python.
"""

from __future__ import annotations

import math
import random
from functools import lru_cache
from itertools import combinations, permutations, product

import numpy as np

from .digraph import DirectedGraph, UndirectedGraph


@lru_cache(maxsize=None)
def arc_slots(n):
    """Ordered arc slots (i, j), i != j, in lexicographic order."""
    return tuple((i, j) for i in range(1, n + 1)
                 for j in range(1, n + 1) if i != j)


@lru_cache(maxsize=None)
def _slot_index(n):
    return {a: k for k, a in enumerate(arc_slots(n))}


def graph_to_mask(g: DirectedGraph) -> int:
    idx = _slot_index(g.n)
    m = 0
    for a in g.arcs:
        m |= 1 << idx[a]
    return m


def mask_to_graph(mask: int, n: int) -> DirectedGraph:
    slots = arc_slots(n)
    return DirectedGraph(n, (slots[k] for k in range(len(slots))
                             if mask >> k & 1))


@lru_cache(maxsize=None)
def _slot_perms(n):
    """For each vertex permutation: slot index -> image slot index."""
    idx = _slot_index(n)
    out = []
    for perm in permutations(range(1, n + 1)):
        relabel = {v: perm[v - 1] for v in range(1, n + 1)}
        out.append(tuple(idx[(relabel[i], relabel[j])]
                         for (i, j) in arc_slots(n)))
    return out


def canonical_mask(mask: int, n: int) -> int:
    """Minimum arc-slot bitmask over all vertex relabelings."""
    best = None
    for sp in _slot_perms(n):
        m = 0
        rest = mask
        k = 0
        while rest:
            if rest & 1:
                m |= 1 << sp[k]
            rest >>= 1
            k += 1
        if best is None or m < best:
            best = m
    return best


def _canonicalize_array(masks: np.ndarray, nbits: int, slot_perms) -> np.ndarray:
    """Vectorized canonical form via per-permutation split lookup tables."""
    lo = nbits // 2
    hi = nbits - lo
    lo_vals = np.arange(1 << lo, dtype=np.int64)
    hi_vals = np.arange(1 << hi, dtype=np.int64)
    mlo = masks & ((1 << lo) - 1)
    mhi = masks >> lo
    best = None
    for sp in slot_perms:
        t_lo = np.zeros(1 << lo, dtype=np.int64)
        for k in range(lo):
            t_lo |= ((lo_vals >> k) & 1) << sp[k]
        t_hi = np.zeros(1 << hi, dtype=np.int64)
        for k in range(hi):
            t_hi |= ((hi_vals >> k) & 1) << sp[lo + k]
        cand = t_lo[mlo] | t_hi[mhi]
        best = cand if best is None else np.minimum(best, cand)
    return best


def canonicalize_masks(masks, n) -> np.ndarray:
    """Unique canonical forms of an iterable of digraph masks."""
    arr = np.asarray(list(masks), dtype=np.int64)
    if arr.size == 0:
        return arr
    nbits = n * (n - 1)
    canon = _canonicalize_array(arr, nbits, _slot_perms(n))
    return np.unique(canon)


def _mask_properties(n):
    """(fano, connected) boolean arrays over all 2^(n(n-1)) labeled digraphs."""
    slots = arc_slots(n)
    s = len(slots)
    masks = np.arange(1 << s, dtype=np.int64)
    adj = np.zeros((masks.size, n, n), dtype=bool)
    for k, (i, j) in enumerate(slots):
        adj[:, i - 1, j - 1] = (masks >> k) & 1
    reach = adj.copy()
    for k in range(n):
        reach |= reach[:, :, k][:, :, None] & reach[:, k, :][:, None, :]
    # every arc on a directed cycle: arc (i,j) needs a return path j -> i
    fano = ~(adj & ~reach.transpose(0, 2, 1)).any(axis=(1, 2))
    fano &= masks > 0
    und = adj | adj.transpose(0, 2, 1)
    und |= np.eye(n, dtype=bool)[None, :, :]
    for k in range(n):
        und |= und[:, :, k][:, :, None] & und[:, k, :][:, None, :]
    connected = und.all(axis=(1, 2))
    return masks, fano, connected


@lru_cache(maxsize=None)
def connected_digraph_masks(n, fano_only=False):
    """Canonical masks of connected digraphs with >= 1 arc on n vertices."""
    if n < 2:
        return ()
    masks, fano, connected = _mask_properties(n)
    keep = connected & (fano if fano_only else (masks > 0))
    return tuple(int(m) for m in canonicalize_masks(masks[keep], n))


@lru_cache(maxsize=None)
def fano_digraph_masks(n):
    """Canonical masks of digraphs (connected or not, >= 1 arc) on n
    vertices with every arc on a directed cycle."""
    if n < 2:
        return ()
    masks, fano, _ = _mask_properties(n)
    return tuple(int(m) for m in canonicalize_masks(masks[fano], n))


def connected_fano_digraphs(max_n):
    """Canonical connected digraphs with every arc on a directed cycle."""
    for n in range(2, max_n + 1):
        for m in connected_digraph_masks(n, fano_only=True):
            yield mask_to_graph(m, n)


def connected_digraphs(max_n):
    """Canonical connected digraphs with at least one arc."""
    for n in range(2, max_n + 1):
        for m in connected_digraph_masks(n):
            yield mask_to_graph(m, n)


@lru_cache(maxsize=None)
def acyclic_digraph_masks(n):
    """Canonical masks of acyclic digraphs on n labeled vertices."""
    if n < 1:
        return ()
    pairs = list(combinations(range(1, n + 1), 2))
    idx = _slot_index(n)
    masks = []
    for states in product((0, 1, 2), repeat=len(pairs)):
        arcs = []
        for (i, j), st in zip(pairs, states):
            if st == 1:
                arcs.append((i, j))
            elif st == 2:
                arcs.append((j, i))
        g = DirectedGraph(n, arcs)
        if g.is_acyclic():
            m = 0
            for a in arcs:
                m |= 1 << idx[a]
            masks.append(m)
    return tuple(int(m) for m in canonicalize_masks(masks, n))


def acyclic_digraphs(max_n):
    for n in range(1, max_n + 1):
        for m in acyclic_digraph_masks(n):
            yield mask_to_graph(m, n)


# -- undirected graphs -----------------------------------------------------

@lru_cache(maxsize=None)
def _edge_slots(n):
    return tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))


@lru_cache(maxsize=None)
def _edge_slot_perms(n):
    slots = _edge_slots(n)
    idx = {e: k for k, e in enumerate(slots)}
    out = []
    for perm in permutations(range(1, n + 1)):
        relabel = {v: perm[v - 1] for v in range(1, n + 1)}
        out.append(tuple(idx[tuple(sorted((relabel[i], relabel[j])))]
                         for (i, j) in slots))
    return out


@lru_cache(maxsize=None)
def undirected_graph_masks(n):
    """Canonical masks of undirected graphs with >= 1 edge on n vertices."""
    slots = _edge_slots(n)
    s = len(slots)
    masks = np.arange(1, 1 << s, dtype=np.int64)
    canon = _canonicalize_array(masks, s, _edge_slot_perms(n))
    return tuple(int(m) for m in np.unique(canon))


def undirected_graphs(max_n):
    for n in range(2, max_n + 1):
        slots = _edge_slots(n)
        for m in undirected_graph_masks(n):
            edges = [slots[k] for k in range(len(slots)) if m >> k & 1]
            yield UndirectedGraph(n, edges)


def symmetric_digraph(u: UndirectedGraph) -> DirectedGraph:
    arcs = []
    for e in u.edges:
        i, j = sorted(e)
        arcs += [(i, j), (j, i)]
    return DirectedGraph(u.n, arcs)


# -- parametric families ---------------------------------------------------

def directed_cycle(length, offset=0, n=None) -> DirectedGraph:
    vs = [offset + i for i in range(1, length + 1)]
    arcs = [(vs[k], vs[(k + 1) % length]) for k in range(length)]
    return DirectedGraph(n or (offset + length), arcs)


def cycle_undirected(length) -> UndirectedGraph:
    return UndirectedGraph(length, ({i, i % length + 1} for i in range(1, length + 1)))


def glued_even_cycles(k, l, shared):
    """Two directed even cycles (lengths 2k, 2l) glued along a directed
    path of `shared` arcs, without multiple edges.

    The shared path must be proper in both cycles; when shared == 2l - 1
    the second cycle closes with a chord of the first.  Degenerate
    parameters that would reproduce a single cycle are rejected.
    """
    if shared < 1 or shared > min(2 * k, 2 * l) - 1:
        raise ValueError("shared path length out of range")
    if shared == 2 * k - 1 and shared == 2 * l - 1:
        raise ValueError("second cycle coincides with the first")
    a = list(range(1, 2 * k + 1))  # first cycle
    b_extra = list(range(2 * k + 1, 2 * k + 1 + 2 * l - shared - 1))
    arcs = [(a[i], a[(i + 1) % (2 * k)]) for i in range(2 * k)]
    # second cycle: a1 -> ... -> a_{shared+1} -> b1 -> ... -> a1
    chain = [a[shared]] + b_extra + [a[0]]
    arcs += [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
    return DirectedGraph(2 * k + len(b_extra), set(arcs))


def glued_cycle_family():
    """Glued-even-cycle instances with cycle lengths 4 or 6 and one to
    three shared arcs whose polytope stays square-free.

    Two 4-cycles sharing two arcs are omitted: that gluing is exactly the
    double-path pattern with no possible rescue, and its polytope has a
    square 2-face.
    """
    out = []
    for k, l in ((2, 2), (2, 3), (3, 2), (3, 3)):
        for shared in (1, 2, 3):
            if (k, l, shared) == (2, 2, 2):
                continue
            if shared > min(2 * k, 2 * l) - 1:
                continue
            if shared == 2 * k - 1 and shared == 2 * l - 1:
                continue
            out.append((k, l, shared, glued_even_cycles(k, l, shared)))
    return out


# -- random sampling -------------------------------------------------------

def random_connected_fano_digraph(n, rng: random.Random, density=None) -> DirectedGraph:
    """A uniform-ish connected digraph with every arc on a directed cycle.

    Arcs are sampled at a (random) density, then arcs on no directed
    cycle are stripped until a fixed point; non-connected or empty
    outcomes are resampled.
    """
    slots = arc_slots(n)
    while True:
        p = density if density is not None else rng.uniform(0.15, 0.85)
        arcs = {a for a in slots if rng.random() < p}
        while True:
            g = DirectedGraph(n, arcs)
            dist = g.distance_matrix()
            bad = {(i, j) for i, j in arcs if dist[j][i] == math.inf}
            if not bad:
                break
            arcs -= bad
        if not arcs:
            continue
        g = DirectedGraph(n, arcs)
        if len(g.connected_components()) == 1:
            return g
