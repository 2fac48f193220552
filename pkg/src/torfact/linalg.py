"""Exact integer and rational linear algebra.

Everything computes over Python's arbitrary-precision integers, switching to
fractions.Fraction only where division is unavoidable; floating point is never
used. Vectors are tuples, matrices are sequences of equal-length rows.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import NamedTuple, Sequence

from .errors import DependentRows, ShapeMismatch, ZeroVector

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise ShapeMismatch(f"cannot pair vectors of lengths {len(u)} and {len(v)}")
    return sum(x * y for x, y in zip(u, v))


def add(u: Sequence, v: Sequence) -> tuple:
    if len(u) != len(v):
        raise ShapeMismatch(f"cannot add vectors of lengths {len(u)} and {len(v)}")
    return tuple(x + y for x, y in zip(u, v))


def scaled(k, v: Sequence) -> tuple:
    return tuple(k * x for x in v)


def negated(v: Sequence) -> tuple:
    return tuple(-x for x in v)


def is_zero(v: Sequence) -> bool:
    return all(x == 0 for x in v)


def primitive(v: Sequence[int]) -> Vector:
    """Divide an integer vector by the gcd of its entries, keeping direction."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ZeroVector("the zero vector has no primitive representative")
    return tuple(x // g for x in v)


def identity_rows(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(matrix) -> Matrix:
    rows = [tuple(r) for r in matrix]
    if not rows:
        return ()
    return tuple(zip(*rows))


def _copy_rows(matrix) -> list[list]:
    rows = [list(r) for r in matrix]
    if rows:
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ShapeMismatch("ragged matrix")
    return rows


def rank(matrix) -> int:
    """Rank over the rationals, by fraction-free (Bareiss) elimination."""
    rows = _copy_rows(matrix)
    if not rows:
        return 0
    ncols = len(rows[0])
    denom = 1
    rk = 0
    for col in range(ncols):
        piv = next((i for i in range(rk, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        for i in range(rk + 1, len(rows)):
            for j in range(col + 1, ncols):
                rows[i][j] = (rows[rk][col] * rows[i][j] - rows[i][col] * rows[rk][j]) // denom
            rows[i][col] = 0
        denom = rows[rk][col]
        rk += 1
        if rk == len(rows):
            break
    return rk


def determinant(matrix) -> int:
    """Determinant of a square integer matrix (Bareiss, exact)."""
    rows = _copy_rows(matrix)
    n = len(rows)
    if n == 0:
        return 1
    if len(rows[0]) != n:
        raise ShapeMismatch("determinant needs a square matrix")
    sign = 1
    denom = 1
    for col in range(n - 1):
        piv = next((i for i in range(col, n) if rows[i][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            sign = -sign
        for i in range(col + 1, n):
            for j in range(col + 1, n):
                rows[i][j] = (rows[col][col] * rows[i][j] - rows[i][col] * rows[col][j]) // denom
            rows[i][col] = 0
        denom = rows[col][col]
    return sign * rows[n - 1][n - 1]


class LinearSolution(NamedTuple):
    """One exact solution of A x = b plus a basis of the homogeneous kernel."""

    particular: tuple[Fraction, ...]
    kernel: tuple[tuple[Fraction, ...], ...]


def solve_rational(matrix, rhs) -> LinearSolution | None:
    """Solve A x = b exactly over the rationals.

    Returns None when the system is inconsistent. Otherwise the particular
    solution sets every free variable to zero and the kernel holds one basis
    vector per free variable (empty when the solution is unique).
    """
    rows = [[Fraction(x) for x in r] for r in matrix]
    m = len(rows)
    if m == 0:
        raise ShapeMismatch("empty coefficient matrix")
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise ShapeMismatch("ragged matrix")
    if len(rhs) != m:
        raise ShapeMismatch(f"matrix has {m} rows but right-hand side has {len(rhs)}")
    b = [Fraction(x) for x in rhs]

    pivots: list[tuple[int, int]] = []
    prow = 0
    for col in range(ncols):
        piv = next((i for i in range(prow, m) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[prow], rows[piv] = rows[piv], rows[prow]
        b[prow], b[piv] = b[piv], b[prow]
        f = rows[prow][col]
        rows[prow] = [x / f for x in rows[prow]]
        b[prow] /= f
        for i in range(m):
            if i != prow and rows[i][col] != 0:
                g = rows[i][col]
                rows[i] = [x - g * y for x, y in zip(rows[i], rows[prow])]
                b[i] -= g * b[prow]
        pivots.append((prow, col))
        prow += 1
        if prow == m:
            break
    if any(b[i] != 0 for i in range(prow, m)):
        return None

    particular = [Fraction(0)] * ncols
    for r, c in pivots:
        particular[c] = b[r]
    pivot_cols = {c for _, c in pivots}
    kernel = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for r, c in pivots:
            vec[c] = -rows[r][free]
        kernel.append(tuple(vec))
    return LinearSolution(tuple(particular), tuple(kernel))


def hnf_with_transform(matrix) -> tuple[Matrix, Matrix]:
    """Row-operation Hermite normal form H with unimodular U, U @ M = H.

    Pivots are positive, entries above each pivot are reduced into
    [0, pivot), zero rows sink to the bottom. Two integer matrices span the
    same row lattice exactly when their Hermite forms agree up to trailing
    zero rows, which is what makes this the canonical form for lattices.
    """
    rows = _copy_rows(matrix)
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    top = 0
    for col in range(ncols):
        if top == m:
            break
        while True:
            nz = [i for i in range(top, m) if rows[i][col] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(rows[i][col]), i))
            if i0 != top:
                rows[top], rows[i0] = rows[i0], rows[top]
                u[top], u[i0] = u[i0], u[top]
            for i in range(top + 1, m):
                if rows[i][col] != 0:
                    q = rows[i][col] // rows[top][col]
                    if q:
                        rows[i] = [x - q * y for x, y in zip(rows[i], rows[top])]
                        u[i] = [x - q * y for x, y in zip(u[i], u[top])]
            if all(rows[i][col] == 0 for i in range(top + 1, m)):
                break
        if rows[top][col] == 0:
            continue
        if rows[top][col] < 0:
            rows[top] = [-x for x in rows[top]]
            u[top] = [-x for x in u[top]]
        p = rows[top][col]
        for i in range(top):
            q = rows[i][col] // p
            if q:
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[top])]
                u[i] = [x - q * y for x, y in zip(u[i], u[top])]
        top += 1
    return tuple(tuple(r) for r in rows), tuple(tuple(r) for r in u)


def hermite_normal_form(matrix) -> Matrix:
    """Canonical basis (Hermite form, zero rows dropped) of the row lattice."""
    h, _ = hnf_with_transform(matrix)
    return tuple(r for r in h if not is_zero(r))


def integer_kernel(matrix) -> Matrix:
    """Basis rows of {v in Z^n : M v = 0}; the result is saturated."""
    rows = [tuple(r) for r in matrix]
    if not rows:
        raise ShapeMismatch("kernel of an empty matrix is ambiguous")
    h, u = hnf_with_transform(transpose(rows))
    ker = [ui for ui, hi in zip(u, h) if is_zero(hi)]
    if not ker:
        return ()
    return hermite_normal_form(ker)


def saturation_basis(matrix) -> Matrix:
    """Canonical basis of the saturation of the row lattice inside Z^n.

    The saturation is the set of integer vectors lying in the rational row
    span; it is computed as the kernel of the kernel.
    """
    rows = [tuple(r) for r in matrix if not is_zero(r)]
    if not rows:
        return ()
    n = len(rows[0])
    k1 = integer_kernel(rows)
    if not k1:
        return identity_rows(n)
    return integer_kernel(k1)


def rational_coordinates(v, basis) -> tuple[Fraction, ...] | None:
    """Coordinates of v in the given independent basis rows, or None if v
    lies outside their span."""
    sol = solve_rational(transpose(basis), v)
    if sol is None:
        return None
    if sol.kernel:
        raise DependentRows("coordinates in a dependent basis are not unique")
    return sol.particular


def lattice_coordinates(v, basis) -> Vector:
    """Integer coordinates of a lattice point of the row lattice of basis."""
    coords = rational_coordinates(v, basis)
    if coords is None:
        raise ValueError(f"{tuple(v)} is not in the span of the basis")
    if any(c.denominator != 1 for c in coords):
        raise ValueError(f"{tuple(v)} is in the span but not in the lattice")
    return tuple(int(c) for c in coords)


def in_span(v, basis) -> bool:
    """Does v lie in the rational span of the basis rows?"""
    rows = [tuple(r) for r in basis]
    if not rows:
        return is_zero(v)
    return rank(rows) == rank(rows + [tuple(v)])


def clear_denominators(fracs) -> Vector:
    """Scale a nonzero rational vector to the primitive integer vector on
    the same ray."""
    mult = 1
    for f in fracs:
        mult = lcm(mult, Fraction(f).denominator)
    return primitive(tuple(int(Fraction(f) * mult) for f in fracs))


def lattice_index_in(sub, sup) -> int:
    """Index [L_sup : L_sub] of one lattice inside another with the same
    rational span, both given by basis rows."""
    sub_rows = [tuple(r) for r in sub]
    sup_rows = [tuple(r) for r in sup]
    if len(sub_rows) != len(sup_rows):
        raise ShapeMismatch("lattices of different rank have no finite index")
    if not sub_rows:
        return 1
    coords = [lattice_coordinates(row, sup_rows) for row in sub_rows]
    d = determinant(coords)
    if d == 0:
        raise DependentRows("sub-lattice basis rows are dependent")
    return abs(d)


def saturation_index(matrix) -> int:
    """Index of the row lattice inside its saturation in Z^n.

    Equals |det| for a square matrix of full rank. Raises DependentRows when
    the rows are linearly dependent.
    """
    rows = [tuple(r) for r in matrix]
    if not rows:
        return 1
    if rank(rows) != len(rows):
        raise DependentRows("saturation index needs independent rows")
    return lattice_index_in(rows, saturation_basis(rows))
