"""Exact linear algebra over the integers and rationals.

Everything in here operates on plain Python ints (arbitrary precision) or
fractions.Fraction; no floating point.  Matrices are lists of tuples/lists.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def vec_gcd(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def primitive(v):
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    g = vec_gcd(v)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def matrix_rank(rows) -> int:
    """Rank of an integer (or Fraction) matrix by fraction-free elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, len(m)):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        pv = m[row][col]
        for r in range(row + 1, len(m)):
            if m[r][col] != 0:
                f = m[r][col]
                m[r] = [pv * a - f * b for a, b in zip(m[r], m[row])]
        rank += 1
        row += 1
        if row == len(m):
            break
    return rank


def affine_rank(points) -> int:
    """Dimension of the affine hull of a nonempty point set."""
    pts = list(points)
    p0 = pts[0]
    return matrix_rank([[a - b for a, b in zip(p, p0)] for p in pts[1:]])


def solve_exact(rows, rhs):
    """Solve A x = b over the rationals.

    Returns a tuple of Fractions or None when the system is inconsistent.
    When the solution space is positive-dimensional an arbitrary solution
    (free variables set to zero) is returned.
    """
    m = [[Fraction(x) for x in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, len(m)):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        pv = m[row][col]
        m[row] = [x / pv for x in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
    for r in range(row, len(m)):
        if m[r][-1] != 0:
            return None
    x = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        x[col] = m[r][-1]
    return tuple(x)


def rational_nullspace(rows, ncols=None):
    """Basis of {x : A x = 0} over Q, returned as primitive integer vectors."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, len(m)):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        pv = m[row][col]
        m[row] = [x / pv for x in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, col in enumerate(pivots):
            v[col] = -m[r][fc]
        den = 1
        for x in v:
            den = den * x.denominator // gcd(den, x.denominator)
        basis.append(primitive([int(x * den) for x in v]))
    return basis


def integer_kernel(rows, ncols=None):
    """Basis of the saturated lattice {x in Z^n : A x = 0}.

    Unimodular column reduction: columns of the transform matrix whose
    image column vanishes form a basis of the kernel lattice.
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    a = [list(r) for r in rows]
    nrows = len(a)
    v = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def col_op_swap(j, k):
        for r in range(nrows):
            a[r][j], a[r][k] = a[r][k], a[r][j]
        for r in range(ncols):
            v[r][j], v[r][k] = v[r][k], v[r][j]

    def col_op_addmul(j, k, f):
        # col_j += f * col_k
        for r in range(nrows):
            a[r][j] += f * a[r][k]
        for r in range(ncols):
            v[r][j] += f * v[r][k]

    lead = 0
    for i in range(nrows):
        if lead >= ncols:
            break
        # clear row i to a single nonzero in column `lead` via gcd steps
        while True:
            nz = [j for j in range(lead, ncols) if a[i][j] != 0]
            if not nz:
                break
            if len(nz) == 1:
                if nz[0] != lead:
                    col_op_swap(lead, nz[0])
                lead += 1
                break
            # reduce the two smallest-magnitude entries against each other
            nz.sort(key=lambda j: abs(a[i][j]))
            j0, j1 = nz[0], nz[1]
            q = a[i][j1] // a[i][j0]
            col_op_addmul(j1, j0, -q)
    kernel = []
    for j in range(ncols):
        if all(a[r][j] == 0 for r in range(nrows)):
            kernel.append(tuple(v[r][j] for r in range(ncols)))
    return kernel


def span_lattice_basis(vectors, n):
    """Basis of span_R(vectors) intersected with Z^n (a saturated lattice).

    The span is cut out by its rational orthogonal complement; the integer
    kernel of that complement is automatically saturated.
    """
    vecs = [v for v in vectors if any(x != 0 for x in v)]
    if not vecs:
        return []
    complement = rational_nullspace(vecs, n)
    if not complement:
        return [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    return integer_kernel(complement, n)


def integer_solvable(rows, rhs) -> bool:
    """Does A x = b admit an integer solution x?"""
    ncols = len(rows[0]) if rows else 0
    a = [list(r) + [0] for r in rows]
    for i, b in enumerate(rhs):
        a[i][ncols] = b
    # x solves A x = b iff (x, -1) is in the kernel of [A | b]; equivalently
    # the kernel lattice of [A | b] contains a vector with last entry -1.
    ker = integer_kernel(a, ncols + 1)
    last = [v[ncols] for v in ker]
    g = vec_gcd(last)
    return g == 1


def det_int(rows) -> int:
    """Determinant of a square integer matrix (Bareiss)."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = None
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    piv = r
                    break
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
