"""Small exact linear-algebra kernel over Python ints and Fractions.

Everything here is dimension-agnostic but tuned for the tiny systems this
package solves (d <= 5, a handful of rows). No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vscale(a, k):
    return tuple(k * x for x in a)


def det(matrix):
    """Exact determinant by cofactor expansion; fine for the sizes used here."""
    n = len(matrix)
    if n == 0:
        return 1
    if n == 1:
        return matrix[0][0]
    if n == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    total = 0
    for j, c in enumerate(matrix[0]):
        if c:
            minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
            term = c * det(minor)
            total = total + term if j % 2 == 0 else total - term
    return total


def rank(rows) -> int:
    """Rank over Q of a list of equal-length vectors."""
    work = [[Fraction(x) for x in row] for row in rows]
    if not work:
        return 0
    nrows, ncols = len(work), len(work[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if work[i][c]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = Fraction(1) / work[r][c]
        work[r] = [v * inv for v in work[r]]
        for i in range(nrows):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        r += 1
        if r == nrows:
            break
    return r


def solve(matrix, rhs):
    """Solve a square system exactly; returns a Fraction tuple or None if singular."""
    n = len(matrix)
    work = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if work[i][c]), None)
        if pivot is None:
            return None
        work[c], work[pivot] = work[pivot], work[c]
        inv = Fraction(1) / work[c][c]
        work[c] = [v * inv for v in work[c]]
        for i in range(n):
            if i != c and work[i][c]:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[c])]
    return tuple(work[i][n] for i in range(n))


def row_basis(rows):
    """Indices of a maximal linearly independent subset, plus pivot columns.

    Returned pivot columns are chosen so that the original rows restricted to
    those columns form an invertible square matrix.
    """
    basis = []  # (pivot_col, reduced Fraction vector)
    indices, columns = [], []
    for i, row in enumerate(rows):
        v = [Fraction(x) for x in row]
        for pc, bv in basis:
            if v[pc]:
                f = v[pc] / bv[pc]
                v = [a - f * b for a, b in zip(v, bv)]
        pc = next((j for j, x in enumerate(v) if x), None)
        if pc is not None:
            basis.append((pc, v))
            indices.append(i)
            columns.append(pc)
    return indices, columns


def hyperplane_normal(diffs, k):
    """Integer vector orthogonal to k-1 difference vectors in R^k.

    Computed by cofactor expansion of the formal determinant; returns None
    when the differences do not span a hyperplane.
    """
    normal = []
    for j in range(k):
        minor = [[row[c] for c in range(k) if c != j] for row in diffs]
        entry = det(minor)
        normal.append(entry if j % 2 == 0 else -entry)
    if not any(normal):
        return None
    return tuple(normal)
