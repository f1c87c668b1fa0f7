"""Exact lattice polytope engine.

Vertices live in Z^n; every computation (embedding, facet enumeration,
face lattice, smoothness determinants) is carried out in arbitrary
precision integer/rational arithmetic.  Facets are enumerated by the
double description method on the homogenization cone, which keeps the
cost output-sensitive for the desk-scale polytopes this library targets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import gcd

from .intlinalg import (
    affine_rank,
    det_int,
    dot,
    integer_solvable,
    matrix_rank,
    primitive,
    solve_exact,
    span_lattice_basis,
    vec_gcd,
)


class GeometryError(ValueError):
    pass


@dataclass(frozen=True)
class Facet:
    """Supporting inequality normal . x <= rhs of the embedded polytope."""

    normal: tuple
    rhs: int


@dataclass(frozen=True)
class Face:
    """A face given by its vertex subset (ambient coordinates)."""

    vertex_subset: tuple
    dim: int


def _dd_initial_subset(constraints, d1):
    """Greedily pick d1 linearly independent constraint rows."""
    chosen = []
    for i, c in enumerate(constraints):
        if matrix_rank([constraints[j] for j in chosen] + [c]) > len(chosen):
            chosen.append(i)
            if len(chosen) == d1:
                return chosen
    return None


def _dd_rays_of_simplicial_cone(rows):
    """Extreme rays of {y : R y <= 0} for an invertible row matrix R."""
    d1 = len(rows)
    rays = []
    for j in range(d1):
        rhs = [(-1 if i == j else 0) for i in range(d1)]
        sol = solve_exact(rows, rhs)
        den = 1
        for x in sol:
            den = den * x.denominator // gcd(den, x.denominator)
        rays.append(primitive([int(x * den) for x in sol]))
    return rays


def dual_cone_rays(constraints, d1):
    """Extreme rays of {y in R^d1 : c . y <= 0 for all c}, c spanning R^d1.

    Double description with the combinatorial adjacency test.  Zero sets
    are bitmasks over the constraint list.
    """
    order = _dd_initial_subset(constraints, d1)
    if order is None:
        raise GeometryError("constraint rows do not span the space")
    rest = [i for i in range(len(constraints)) if i not in order]
    processed = list(order)
    rays = _dd_rays_of_simplicial_cone([constraints[i] for i in order])

    def zeroset(r):
        z = 0
        for bit, ci in enumerate(processed):
            if dot(constraints[ci], r) == 0:
                z |= 1 << bit
        return z

    zsets = [zeroset(r) for r in rays]
    for ci in rest:
        c = constraints[ci]
        vals = [dot(c, r) for r in rays]
        if all(v <= 0 for v in vals):
            processed.append(ci)
            bit = 1 << (len(processed) - 1)
            zsets = [z | (bit if v == 0 else 0) for z, v in zip(zsets, vals)]
            continue
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zero = [i for i, v in enumerate(vals) if v == 0]
        new_rays = []
        for ip in pos:
            for im in neg:
                z = zsets[ip] & zsets[im]
                if bin(z).count("1") < d1 - 2:
                    continue
                adjacent = True
                for k in range(len(rays)):
                    if k != ip and k != im and (z & ~zsets[k]) == 0:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                rp, rm = rays[ip], rays[im]
                r = primitive([vals[ip] * b - vals[im] * a for a, b in zip(rp, rm)])
                new_rays.append(r)
        processed.append(ci)
        bit = 1 << (len(processed) - 1)
        rays = [rays[i] for i in neg + zero] + new_rays
        zsets = [zsets[i] | (bit if i in zero else 0) for i in neg + zero]
        zsets += [zeroset(r) for r in new_rays]
        # new rays generated from distinct adjacent pairs may coincide
        seen = {}
        for r, z in zip(rays, zsets):
            seen[r] = z
        rays = list(seen.keys())
        zsets = [seen[r] for r in rays]
    return rays


def _facets_of_embedded(points, d):
    """Irredundant facet list of a full-dimensional point configuration."""
    if d == 0:
        raise GeometryError("facet enumeration needs dimension >= 1")
    cons = sorted(set(tuple(p) + (1,) for p in points))
    rays = dual_cone_rays(cons, d + 1)
    facets = []
    for r in rays:
        normal, rhs = r[:d], -r[d]
        if all(x == 0 for x in normal):
            continue
        facets.append(Facet(tuple(normal), rhs))
    return sorted(facets, key=lambda f: (f.normal, f.rhs))


class LatticePolytope:
    """Convex hull of integer points, with a full-dimensional embedding.

    The embedding is linear (origin-preserving) whenever the origin lies in
    the affine hull, so that the Fano-property predicates are meaningful;
    otherwise the polytope is translated by one of its points first.  In
    both cases integer points of the affine hull map bijectively onto the
    integer points of the embedded space.
    """

    def __init__(self, points):
        pts = sorted(set(tuple(int(x) for x in p) for p in points))
        if not pts:
            raise GeometryError("empty point set")
        self.ambient_dim = len(pts[0])
        if any(len(p) != self.ambient_dim for p in pts):
            raise GeometryError("inconsistent point dimensions")
        self._points = pts
        n = self.ambient_dim
        linear_basis = span_lattice_basis(pts, n)
        ra = affine_rank(pts)
        self.origin_in_affine_hull = len(linear_basis) == ra
        if self.origin_in_affine_hull:
            self._shift = tuple(0 for _ in range(n))
            self.lattice_basis = linear_basis
        else:
            self._shift = pts[0]
            diffs = [tuple(a - b for a, b in zip(p, self._shift)) for p in pts]
            self.lattice_basis = span_lattice_basis(diffs, n)
        self.dim = len(self.lattice_basis)
        self._embedded_points = [self._embed_point(p) for p in pts]
        self._facets = None
        self._vertex_list = None  # embedded coords of hull vertices
        self._facet_masks = None  # per facet: bitmask over self._vertex_list
        self._face_dims = None  # full face lattice: mask -> dim
        self._rank_cache = {}

    # -- embedding ---------------------------------------------------------

    def _embed_point(self, p):
        q = tuple(a - b for a, b in zip(p, self._shift))
        if self.dim == 0:
            return ()
        rows = [[self.lattice_basis[j][i] for j in range(self.dim)]
                for i in range(self.ambient_dim)]
        sol = solve_exact(rows, q)
        if sol is None or any(x.denominator != 1 for x in sol):
            raise GeometryError("point not in the lattice of the affine hull")
        return tuple(int(x) for x in sol)

    def _unembed_point(self, q):
        out = list(self._shift)
        for coef, bvec in zip(q, self.lattice_basis):
            for i in range(self.ambient_dim):
                out[i] += coef * bvec[i]
        return tuple(out)

    @property
    def embedded(self):
        return list(self._embedded_points)

    # -- facets and vertices -----------------------------------------------

    def facets(self):
        """Irredundant facet inequalities of the embedded polytope."""
        self._ensure_facets()
        return list(self._facets)

    def _ensure_facets(self):
        if self._facets is not None:
            return
        if self.dim == 0:
            raise GeometryError("facets undefined for a 0-dimensional polytope")
        self._facets = _facets_of_embedded(self._embedded_points, self.dim)
        # classify points: vertices are points whose tight facet normals
        # span the whole space
        verts = []
        for p in self._embedded_points:
            tight = [f.normal for f in self._facets if dot(f.normal, p) == f.rhs]
            if matrix_rank(tight) == self.dim:
                verts.append(p)
        self._vertex_list = verts
        self._facet_masks = []
        for f in self._facets:
            m = 0
            for i, p in enumerate(verts):
                if dot(f.normal, p) == f.rhs:
                    m |= 1 << i
            self._facet_masks.append(m)

    @property
    def vertices(self):
        """Hull vertices in ambient coordinates (sorted)."""
        if self.dim == 0:
            return [self._points[0]]
        self._ensure_facets()
        return sorted(self._unembed_point(p) for p in self._vertex_list)

    @property
    def embedded_vertices(self):
        if self.dim == 0:
            return [()]
        self._ensure_facets()
        return list(self._vertex_list)

    def _mask_rank(self, mask):
        r = self._rank_cache.get(mask)
        if r is None:
            pts = [self._vertex_list[i] for i in _bits(mask)]
            r = affine_rank(pts) if pts else -1
            self._rank_cache[mask] = r
        return r

    # -- face lattice ------------------------------------------------------

    def _faces(self):
        """All nonempty faces as {vertex bitmask: dimension}, polytope included."""
        if self._face_dims is not None:
            return self._face_dims
        self._ensure_facets()
        full = (1 << len(self._vertex_list)) - 1
        faces = {full: self.dim}
        frontier = [full]
        while frontier:
            nxt = []
            for fm in frontier:
                for gm in self._facet_masks:
                    m = fm & gm
                    if m and m not in faces:
                        faces[m] = self._mask_rank(m)
                        nxt.append(m)
            frontier = nxt
        self._face_dims = faces
        return faces

    def faces_of_dim(self, k):
        """All proper k-faces, 0 <= k < dim."""
        if not 0 <= k < self.dim:
            raise GeometryError(f"face dimension {k} out of range [0, {self.dim})")
        out = []
        for mask, d in self._faces().items():
            if d == k and mask != (1 << len(self._vertex_list)) - 1:
                vs = tuple(sorted(self._unembed_point(self._vertex_list[i])
                                  for i in _bits(mask)))
                out.append(Face(vs, k))
        return sorted(out, key=lambda f: f.vertex_subset)

    def _two_face_masks(self, early_square=False):
        """Vertex bitmasks of all 2-faces via closure of vertex triples.

        With early_square, stops and returns as soon as a 2-face with more
        than 3 vertices is found.
        """
        self._ensure_facets()
        verts = self._vertex_list
        nf = len(self._facets)
        vert_facet = []  # per vertex: bitmask over facets
        for i, p in enumerate(verts):
            m = 0
            for j, f in enumerate(self._facets):
                if dot(f.normal, p) == f.rhs:
                    m |= 1 << j
            vert_facet.append(m)
        found = set()
        for tri in combinations(range(len(verts)), 3):
            fm = vert_facet[tri[0]] & vert_facet[tri[1]] & vert_facet[tri[2]]
            mask = 0
            for i in range(len(verts)):
                if fm & ~vert_facet[i] == 0:
                    mask |= 1 << i
            if fm == 0:
                # contained in no facet: smallest face is the polytope itself
                continue
            if mask in found:
                continue
            if self._mask_rank(mask) == 2:
                found.add(mask)
                if early_square and bin(mask).count("1") > 3:
                    return found
        return found

    def two_faces_all_triangles(self):
        """(all 2-faces triangles?, census {vertex count: multiplicity}).

        Vacuously true for dim <= 2, where there are no proper 2-faces.
        """
        if self.dim <= 2:
            return True, {}
        census = {}
        for mask in self._two_face_masks():
            c = bin(mask).count("1")
            census[c] = census.get(c, 0) + 1
        return all(c == 3 for c in census), census

    def has_non_triangle_two_face(self):
        """Early-exit square detection; equivalent to the census containing >3."""
        if self.dim <= 2:
            return False
        masks = self._two_face_masks(early_square=True)
        return any(bin(m).count("1") > 3 for m in masks)

    # -- Fano dictionary ---------------------------------------------------

    def is_fano(self):
        """Origin in the (relative) interior and all hull vertices primitive."""
        if not self.origin_in_affine_hull or self.dim == 0:
            return False
        self._ensure_facets()
        if any(f.rhs <= 0 for f in self._facets):
            return False
        return all(vec_gcd(v) == 1 for v in self._vertex_list)

    def _require_fano(self):
        if not self.is_fano():
            raise GeometryError("polytope is not Fano (origin not interior)")

    def is_reflexive(self):
        self._require_fano()
        return all(f.rhs == 1 for f in self._facets)

    def is_terminal(self):
        self._require_fano()
        vset = set(self._vertex_list)
        for p in self._lattice_points():
            if any(x != 0 for x in p):
                boundary = any(dot(f.normal, p) == f.rhs for f in self._facets)
                if boundary and p not in vset:
                    return False
        return True

    def is_simplicial(self):
        self._require_fano()
        return all(bin(m).count("1") == self.dim for m in self._facet_masks)

    def is_smooth(self):
        self._require_fano()
        if not self.is_simplicial():
            return False
        for m in self._facet_masks:
            rows = [self._vertex_list[i] for i in _bits(m)]
            if abs(det_int(rows)) != 1:
                return False
        return True

    def _edges(self):
        """1-faces as embedded vertex pairs; the polytope itself when dim 1."""
        if self.dim == 0:
            return []
        if self.dim == 1:
            self._ensure_facets()
            return [tuple(self._vertex_list)]
        out = []
        for mask, d in self._faces().items():
            if d == 1:
                pair = [self._vertex_list[i] for i in _bits(mask)]
                out.append(tuple(pair))
        return out

    def edge_lattice_lengths_ok(self):
        """Every edge contains exactly its two endpoints as lattice points."""
        return all(vec_gcd([a - b for a, b in zip(u, v)]) == 1
                   for u, v in self._edges())

    def edges_at_height_one(self):
        """Every edge admits an integer functional equal to 1 on it."""
        for u, v in self._edges():
            if not integer_solvable([u, v], [1, 1]):
                return False
        return True

    # -- lattice points ----------------------------------------------------

    def _lattice_points(self):
        self._ensure_facets()
        lo = [min(p[i] for p in self._vertex_list) for i in range(self.dim)]
        hi = [max(p[i] for p in self._vertex_list) for i in range(self.dim)]
        for p in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
            if all(dot(f.normal, p) <= f.rhs for f in self._facets):
                yield p

    def lattice_points(self):
        """All lattice points of the polytope, in ambient coordinates."""
        if self.dim == 0:
            return [self._points[0]]
        return sorted(self._unembed_point(p) for p in self._lattice_points())

    # -- serialization -----------------------------------------------------

    def to_json_dict(self):
        d = {
            "ambient_dim": self.ambient_dim,
            "vertices": [list(v) for v in self.vertices],
        }
        if self.dim >= 1:
            d["facets"] = [{"normal": list(f.normal), "rhs": f.rhs}
                           for f in self.facets()]
        else:
            d["facets"] = []
        return d

    def __repr__(self):
        return (f"LatticePolytope(dim={self.dim}, "
                f"ambient_dim={self.ambient_dim}, "
                f"points={len(self._points)})")


def _bits(mask):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def hull_vertices(points):
    """Extreme points of conv(points), exactly."""
    return LatticePolytope(points).vertices


def embed_full_dim(points) -> LatticePolytope:
    return LatticePolytope(points)


def free_sum(p: LatticePolytope, q: LatticePolytope) -> LatticePolytope:
    """conv{(P, 0) union (0, Q)} in the ambient product space."""
    if not (p.is_fano() and q.is_fano()):
        raise GeometryError("free sum requires both summands Fano")
    zp = tuple(0 for _ in range(p.ambient_dim))
    zq = tuple(0 for _ in range(q.ambient_dim))
    pts = [tuple(v) + zq for v in p.vertices] + [zp + tuple(v) for v in q.vertices]
    return LatticePolytope(pts)


def brute_force_facets(points, d):
    """Independent facet oracle: hyperplanes through d-subsets of points.

    Exponential in d; used by the test suite to cross-check the double
    description enumeration on small instances.
    """
    pts = sorted(set(tuple(p) for p in points))
    facets = set()
    for sub in combinations(pts, d):
        if affine_rank(sub) != d - 1:
            continue
        rows = [[a - b for a, b in zip(p, sub[0])] for p in sub[1:]]
        from .intlinalg import rational_nullspace

        ns = rational_nullspace(rows, d)
        if len(ns) != 1:
            continue
        normal = ns[0]
        rhs = dot(normal, sub[0])
        vals = [dot(normal, p) for p in pts]
        if all(v <= rhs for v in vals):
            facets.add(Facet(tuple(normal), rhs))
        elif all(v >= rhs for v in vals):
            facets.add(Facet(tuple(-x for x in normal), -rhs))
    return sorted(facets, key=lambda f: (f.normal, f.rhs))
