"""Exact dense linear algebra on lists of field scalars.

Everything here is plain Gaussian elimination over whatever exact scalar
type the entries carry (``Fraction`` or ``GaussianRational``).  Matrices are
sequences of rows.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionMismatch, SingularMatrix


def _div(a, b):
    if isinstance(b, int):
        b = Fraction(b)
    return a / b


def zeros(rows, cols, zero=0):
    return [[zero] * cols for _ in range(rows)]


def identity(n, zero=0, one=1):
    m = zeros(n, n, zero)
    for i in range(n):
        m[i][i] = one
    return m


def transpose(m):
    return [list(col) for col in zip(*m)]


def mat_mul(a, b):
    if a and b and len(a[0]) != len(b):
        raise DimensionMismatch(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x{len(b[0])}")
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * cols
        for k, r in enumerate(row):
            if r:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        acc[j] += r * bk[j]
        out.append(acc)
    return out


def mat_vec(m, v):
    out = []
    for row in m:
        acc = 0
        for r, x in zip(row, v):
            if r and x:
                acc += r * x
        out.append(acc)
    return out


def rref(m):
    """Reduced row echelon form; returns ``(rows, pivot_columns)``."""
    a = [list(r) for r in m]
    if not a:
        return a, []
    nrows, ncols = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = _div(1, a[r][c])
        a[r] = [x * inv if x else x for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                ai, ar = a[i], a[r]
                for j in range(c, ncols):
                    if ar[j]:
                        ai[j] = ai[j] - f * ar[j]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m) -> int:
    return len(rref(m)[1])


def nullspace(m, ncols=None, zero=0, one=1):
    """Basis of ``{x : m x = 0}`` as a list of coordinate lists."""
    if not m:
        n = ncols or 0
        return [[one if i == j else zero for i in range(n)] for j in range(n)]
    red, pivots = rref(m)
    n = len(m[0])
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [zero] * n
        v[fc] = one
        for row, pc in zip(red, pivots):
            if row[fc]:
                v[pc] = -row[fc]
        basis.append(v)
    return basis


def det(m):
    """Determinant by fraction-exact elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    result = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return a[0][0] * 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            result = -result
        p = a[c][c]
        result = result * p
        for i in range(c + 1, n):
            if a[i][c]:
                f = _div(a[i][c], p)
                for j in range(c, n):
                    if a[c][j]:
                        a[i][j] = a[i][j] - f * a[c][j]
    return result


def inverse(m, zero=0, one=1):
    n = len(m)
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(m)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is not invertible")
    return [row[n:] for row in red]


def solve_linear_span(basis, defect, zero=0, one=1):
    """Solve a homogeneous linear condition over a spanning family.

    ``defect`` maps an element of ``basis`` to a flat list of equation
    residuals and must be linear.  Returns coefficient vectors ``c`` with
    ``sum c_k * basis[k]`` satisfying every equation.
    """
    columns = [defect(b) for b in basis]
    if not columns:
        return []
    neq = len(columns[0])
    system = [[col[r] for col in columns] for r in range(neq)]
    system = [row for row in system if any(row)]
    return nullspace(system, ncols=len(basis), zero=zero, one=one)
