"""Exact linear algebra over any of the tower fields.

Plain Gaussian elimination with first-nonzero pivoting; matrix sizes stay
small (at most m^2 x m^2 at desk scale), so no fraction-free tricks needed.
"""

from __future__ import annotations

from itertools import permutations


def _rref(rows, field, width):
    """Reduced row echelon form in place; returns the list of pivot columns."""
    pivots = []
    r = 0
    for c in range(width):
        pivot = None
        for i in range(r, len(rows)):
            if not rows[i][c].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.one() / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def kernel_basis(matrix, field):
    """Basis of the right kernel of the matrix (rows x cols of field elements)."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    rows = [list(r) for r in matrix]
    pivots = _rref(rows, field, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [field.zero()] * ncols
        vec[fc] = field.one()
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][fc]
        basis.append(vec)
    return basis


def solve_affine(matrix, rhs, field):
    """All solutions of M x = b: (particular or None, kernel basis)."""
    if not matrix:
        return [], []
    ncols = len(matrix[0])
    rows = [list(r) + [b] for r, b in zip(matrix, rhs)]
    pivots = _rref(rows, field, ncols)
    # inconsistent iff a row is (0 ... 0 | nonzero)
    for row in rows:
        if all(x.is_zero() for x in row[:-1]) and not row[-1].is_zero():
            return None, kernel_basis(matrix, field)
    particular = [field.zero()] * ncols
    for r, pc in enumerate(pivots):
        particular[pc] = rows[r][-1]
    return particular, kernel_basis(matrix, field)


def invert_matrix(matrix, field):
    """Inverse of a square matrix; raises ZeroDivisionError when singular."""
    n = len(matrix)
    rows = [list(r) + [field.one() if i == j else field.zero() for j in range(n)] for i, r in enumerate(matrix)]
    pivots = _rref(rows, field, n)
    if len(pivots) != n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in rows]


def det_expansion(matrix, ring):
    """Determinant by permutation expansion; works over rings without division."""
    n = len(matrix)
    if n == 0:
        return ring.one()
    total = ring.zero()
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = ring.one()
        skip = False
        for i in range(n):
            entry = matrix[i][perm[i]]
            if entry.is_zero():
                skip = True
                break
            term = term * entry
        if skip:
            continue
        total = total + term if sign > 0 else total - term
    return total
