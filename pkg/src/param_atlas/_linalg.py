"""Tiny exact linear algebra over Z and Fraction for lattice bookkeeping.

Everything here is desk scale (matrices of size at most ~15); clarity over speed.
Matrices are row-major tuples of tuples of ints unless stated otherwise.
"""

from __future__ import annotations

from fractions import Fraction

Vec = tuple[int, ...]
Mat = tuple[Vec, ...]


def mat_id(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_vec(m: Mat, v: Vec) -> Vec:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def mat_mul(a: Mat, b: Mat) -> Mat:
    cols = range(len(b[0]))
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in cols)
        for i in range(len(a))
    )


def mat_transpose(m: Mat) -> Mat:
    return tuple(zip(*m))


def dot(u: Vec, v: Vec) -> int:
    return sum(a * b for a, b in zip(u, v, strict=True))


def mat_det(m: Mat) -> Fraction:
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] * inv
                a[r] = [a[r][j] - f * a[col][j] for j in range(n)]
    return det


def mat_inv(m: Mat) -> Mat:
    """Inverse of an integer matrix with det +-1 (lattice automorphism)."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [a[r][j] - f * a[col][j] for j in range(2 * n)]
    out = []
    for i in range(n):
        row = a[i][n:]
        assert all(x.denominator == 1 for x in row), "matrix is not unimodular"
        out.append(tuple(int(x) for x in row))
    return tuple(out)


def solve_fraction(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    """Solve a square nonsingular system exactly."""
    n = len(a)
    aug = [row[:] + [b[i]] for i, row in enumerate(a)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [aug[r][j] - f * aug[col][j] for j in range(n + 1)]
    return [aug[i][n] for i in range(n)]


def rank_fraction(rows: list[list[Fraction]]) -> int:
    if not rows:
        return 0
    a = [row[:] for row in rows]
    ncols = len(a[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(a)) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = 1 / a[rank][col]
        a[rank] = [x * inv for x in a[rank]]
        for r in range(len(a)):
            if r != rank and a[r][col] != 0:
                f = a[r][col]
                a[r] = [a[r][j] - f * a[rank][j] for j in range(ncols)]
        rank += 1
    return rank


def _rref_fraction(rows: list[list[Fraction]]):
    a = [row[:] for row in rows]
    if not a:
        return a, []
    ncols = len(a[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(a)) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = 1 / a[rank][col]
        a[rank] = [x * inv for x in a[rank]]
        for r in range(len(a)):
            if r != rank and a[r][col] != 0:
                f = a[r][col]
                a[r] = [a[r][j] - f * a[rank][j] for j in range(ncols)]
        pivots.append(col)
        rank += 1
    return a, pivots


def nullspace_fraction(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Basis of the right kernel of a (possibly rectangular) matrix."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = _rref_fraction(rows)
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][free]
        basis.append(v)
    return basis


def solve_rectangular_fraction(columns: list[list[Fraction]], target: list[Fraction]):
    """Coefficients c with sum c_j * columns[j] = target, or None if inconsistent."""
    rows = [[col[i] for col in columns] + [target[i]] for i in range(len(target))]
    red, pivots = _rref_fraction(rows)
    ncols = len(columns)
    if ncols in pivots:
        return None
    out = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        out[pc] = red[r][ncols]
    return out
