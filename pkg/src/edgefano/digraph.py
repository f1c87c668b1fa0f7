"""Finite directed graphs and the cycle/distance primitives.

Vertices are 1..n.  Graphs are immutable after construction; loops and
duplicate arcs are rejected, antiparallel pairs (i,j),(j,i) are allowed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

CYCLE_ENUM_VERTEX_CAP = 12


class GraphError(ValueError):
    pass


class DirectedGraph:
    def __init__(self, n, arcs):
        arcs = frozenset((int(i), int(j)) for i, j in arcs)
        for i, j in arcs:
            if i == j:
                raise GraphError(f"loop ({i},{i}) not allowed")
            if not (1 <= i <= n and 1 <= j <= n):
                raise GraphError(f"arc ({i},{j}) out of vertex range 1..{n}")
        self.n = int(n)
        self.arcs = arcs
        self._dist = None
        self._out = None

    def __eq__(self, other):
        return (isinstance(other, DirectedGraph)
                and self.n == other.n and self.arcs == other.arcs)

    def __hash__(self):
        return hash((self.n, self.arcs))

    def __repr__(self):
        return f"DirectedGraph(n={self.n}, arcs={sorted(self.arcs)})"

    # -- basic structure ---------------------------------------------------

    def out_neighbors(self, v):
        if self._out is None:
            out = {u: [] for u in range(1, self.n + 1)}
            for i, j in self.arcs:
                out[i].append(j)
            self._out = {u: sorted(vs) for u, vs in out.items()}
        return self._out[v]

    def underlying(self) -> "UndirectedGraph":
        return UndirectedGraph(self.n, (frozenset(a) for a in self.arcs))

    def connected_components(self):
        """Partition of 1..n by connectivity of the underlying graph."""
        return self.underlying().connected_components()

    def distance_matrix(self):
        """dist[u][v]: shortest directed path length, math.inf if unreachable."""
        if self._dist is not None:
            return self._dist
        dist = {}
        for s in range(1, self.n + 1):
            d = {s: 0}
            frontier = [s]
            while frontier:
                nxt = []
                for u in frontier:
                    for w in self.out_neighbors(u):
                        if w not in d:
                            d[w] = d[u] + 1
                            nxt.append(w)
                frontier = nxt
            dist[s] = {v: d.get(v, math.inf) for v in range(1, self.n + 1)}
        self._dist = dist
        return dist

    def dist(self, u, v):
        """Directed distance between two distinct vertices (inf if unreachable)."""
        if u == v:
            raise GraphError("distance is defined for distinct vertices only")
        return self.distance_matrix()[u][v]

    def is_acyclic(self) -> bool:
        state = {}  # 0 = in progress, 1 = done
        for root in range(1, self.n + 1):
            if root in state:
                continue
            stack = [(root, iter(self.out_neighbors(root)))]
            state[root] = 0
            while stack:
                v, it = stack[-1]
                advanced = False
                for w in it:
                    if w not in state:
                        state[w] = 0
                        stack.append((w, iter(self.out_neighbors(w))))
                        advanced = True
                        break
                    if state[w] == 0:
                        return False
                if not advanced:
                    state[v] = 1
                    stack.pop()
        return True

    def every_arc_on_directed_cycle(self) -> bool:
        dist = self.distance_matrix()
        return all(dist[j][i] != math.inf for i, j in self.arcs)

    def restrict(self, vertices):
        """Induced subgraph on a vertex subset, relabeled 1..k.

        Returns (subgraph, labels) with labels[new - 1] = old vertex.
        """
        labels = sorted(vertices)
        index = {v: i + 1 for i, v in enumerate(labels)}
        arcs = [(index[i], index[j]) for i, j in self.arcs
                if i in index and j in index]
        return DirectedGraph(len(labels), arcs), labels

    # -- cycles ------------------------------------------------------------

    def cycle_walks(self, vertex_cap=CYCLE_ENUM_VERTEX_CAP):
        """All cycle walks: arc realizations of simple underlying cycles,
        plus antiparallel length-two walks.  Each underlying cycle is
        visited once up to rotation and reflection.
        """
        if self.n > vertex_cap:
            raise GraphError(
                f"cycle enumeration capped at {vertex_cap} vertices (got {self.n})")
        for i, j in sorted(self.arcs):
            if i < j and (j, i) in self.arcs:
                yield CycleWalk((i, j), ((i, j), (j, i)), (True, True))
        for cyc in self.underlying().simple_cycles():
            yield from self._realize(cyc)

    def _realize(self, cyc):
        l = len(cyc)
        choices = []
        for k in range(l):
            a, b = cyc[k], cyc[(k + 1) % l]
            opts = []
            if (a, b) in self.arcs:
                opts.append(((a, b), True))
            if (b, a) in self.arcs:
                opts.append(((b, a), False))
            choices.append(opts)
        for combo in product(*choices):
            arcs = tuple(c[0] for c in combo)
            flags = tuple(c[1] for c in combo)
            yield CycleWalk(tuple(cyc), arcs, flags)


class UndirectedGraph:
    def __init__(self, n, edges):
        edges = frozenset(frozenset(e) for e in edges)
        for e in edges:
            if len(e) != 2:
                raise GraphError(f"edge {set(e)} is not a pair of distinct vertices")
            if not all(1 <= v <= n for v in e):
                raise GraphError(f"edge {set(e)} out of vertex range 1..{n}")
        self.n = int(n)
        self.edges = edges
        self._adj = None

    def __eq__(self, other):
        return (isinstance(other, UndirectedGraph)
                and self.n == other.n and self.edges == other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"UndirectedGraph(n={self.n}, edges={sorted(map(sorted, self.edges))})"

    def neighbors(self, v):
        if self._adj is None:
            adj = {u: set() for u in range(1, self.n + 1)}
            for e in self.edges:
                a, b = tuple(e)
                adj[a].add(b)
                adj[b].add(a)
            self._adj = {u: sorted(vs) for u, vs in adj.items()}
        return self._adj[v]

    def connected_components(self):
        seen = set()
        comps = []
        for root in range(1, self.n + 1):
            if root in seen:
                continue
            comp = {root}
            frontier = [root]
            seen.add(root)
            while frontier:
                v = frontier.pop()
                for w in self.neighbors(v):
                    if w not in seen:
                        seen.add(w)
                        comp.add(w)
                        frontier.append(w)
            comps.append(frozenset(comp))
        return sorted(comps, key=min)

    def simple_cycles(self):
        """All simple cycles of length >= 3 as vertex tuples.

        Each cycle appears once, rooted at its smallest vertex with the
        second vertex smaller than the last (rotation/reflection dedup).
        """
        for root in range(1, self.n + 1):
            # DFS over paths root -> ... using only vertices > root
            stack = [(root, (root,))]
            while stack:
                v, path = stack.pop()
                for w in self.neighbors(v):
                    if w == root and len(path) >= 3 and path[1] < path[-1]:
                        yield path
                    elif w > root and w not in path:
                        stack.append((w, path + (w,)))

    def has_even_cycle(self) -> bool:
        return any(len(c) % 2 == 0 for c in self.simple_cycles())

    def has_4cycle(self) -> bool:
        return any(len(c) == 4 for c in self.simple_cycles())


@dataclass(frozen=True)
class CycleWalk:
    """A cycle of arcs over a simple underlying cycle (or antiparallel pair).

    vertices: traversal order i_1..i_l; arcs[j] has underlying edge
    {i_j, i_{j+1}}; forward[j] is True when arcs[j] == (i_j, i_{j+1}).
    """

    vertices: tuple
    arcs: tuple
    forward: tuple

    def __post_init__(self):
        l = len(self.vertices)
        if l < 2 or len(self.arcs) != l or len(self.forward) != l:
            raise GraphError("malformed cycle walk")
        for k in range(l):
            a, b = self.vertices[k], self.vertices[(k + 1) % l]
            expect = (a, b) if self.forward[k] else (b, a)
            if self.arcs[k] != expect:
                raise GraphError("cycle walk arcs inconsistent with traversal")

    @property
    def length(self):
        return len(self.arcs)

    @property
    def delta_plus(self):
        return tuple(a for a, f in zip(self.arcs, self.forward) if f)

    @property
    def delta_minus(self):
        return tuple(a for a, f in zip(self.arcs, self.forward) if not f)

    def is_homogeneous(self):
        """Balanced orientation; antiparallel 2-walks are never homogeneous."""
        if self.length == 2 and set(self.arcs[0]) == set(self.arcs[1]):
            return False
        return len(self.delta_plus) == len(self.delta_minus)

    def arc_set(self):
        return frozenset(self.arcs)


# -- edge-list text format -------------------------------------------------

def parse_edge_list(text) -> DirectedGraph:
    """Parse the `n <count>` / `i j` edge-list format (# for comments)."""
    n = None
    arcs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise GraphError(f"line {lineno}: expected header 'n <count>'")
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphError(f"line {lineno}: bad vertex count {parts[1]!r}")
            continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'i j'")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer arc {line!r}")
        if (i, j) in arcs:
            raise GraphError(f"line {lineno}: duplicate arc ({i},{j})")
        arcs.append((i, j))
    if n is None:
        raise GraphError("empty input: missing 'n <count>' header")
    try:
        return DirectedGraph(n, arcs)
    except GraphError as exc:
        raise GraphError(str(exc)) from None


def format_edge_list(g: DirectedGraph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"{i} {j}" for i, j in sorted(g.arcs)]
    return "\n".join(lines) + "\n"
