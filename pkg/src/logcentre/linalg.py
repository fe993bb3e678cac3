"""Small exact linear-algebra kernels: rational elimination and integer lattices.

Everything here is dense, tiny (dimension at most a handful), and exact:
rational work uses Fraction, lattice work uses plain integers with extended
gcd column operations. Inputs are sequences of rows unless a function says
columns.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def _copy(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows):
    """Reduced row echelon form; returns (matrix, pivot column list)."""
    m = _copy(rows)
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        d = m[r][c]
        m[r] = [x / d for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows) -> int:
    if not rows:
        return 0
    return len(rref(rows)[1])


def solve_exact(rows, rhs):
    """Solve row_i . x = rhs_i exactly.

    Returns the unique solution as a tuple of Fractions, or None when the
    system is inconsistent. Raises ValueError if the rows do not determine x
    uniquely (column rank below the number of unknowns).
    """
    n = len(rows[0])
    aug = [list(row) + [r] for row, r in zip(rows, rhs)]
    red, pivots = rref(aug)
    if n in pivots:
        return None
    if len(pivots) < n:
        raise ValueError("system does not determine a unique solution")
    x = [Fraction(0)] * n
    for row, c in zip(red, pivots):
        x[c] = row[-1]
    return tuple(x)


def nullspace(rows):
    """Basis of the right kernel over the rationals."""
    red, pivots = rref(rows)
    ncols = len(rows[0])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, c in zip(red, pivots):
            v[c] = -row[f]
        basis.append(tuple(v))
    return basis


def invert(rows):
    """Exact inverse of a square matrix; raises ValueError when singular."""
    n = len(rows)
    aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(rows)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red[:n]]


def det(rows) -> Fraction:
    m = _copy(rows)
    n = len(m)
    sign = 1
    out = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        out *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return sign * out


def primitive_vector(v):
    """Divide an integer vector by the gcd of its entries (orientation kept)."""
    ints = []
    for x in v:
        if not isinstance(x, int):
            raise ValueError(f"expected integer coordinates, got {x!r}")
        ints.append(x)
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(x // g for x in ints)


def scale_to_primitive_integer(v):
    """Clear denominators of a rational vector and reduce to primitive."""
    fracs = [Fraction(x) for x in v]
    mult = lcm(*(f.denominator for f in fracs)) if fracs else 1
    return primitive_vector([int(f * mult) for f in fracs])


def xgcd(a: int, b: int):
    """Return (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def integer_kernel_of_row(row):
    """Basis of {x integer vector : row . x = 0} for a nonzero integer row."""
    n = len(row)
    if all(v == 0 for v in row):
        raise ValueError("row must be nonzero")
    cols = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    cur = list(row)
    for j in range(1, n):
        a, b = cur[0], cur[j]
        if b == 0:
            continue
        g, x, y = xgcd(a, b)
        c0, cj = cols[0], cols[j]
        cols[0] = [x * p + y * q for p, q in zip(c0, cj)]
        cols[j] = [(-b // g) * p + (a // g) * q for p, q in zip(c0, cj)]
        cur[0], cur[j] = g, 0
    return [tuple(c) for c in cols[1:]]


def hermite_column_form(cols):
    """Canonical basis of the integer column span: lower triangular, positive
    diagonal, entries left of the diagonal reduced into [0, pivot)."""
    work = [list(c) for c in cols]
    if not work:
        raise ValueError("no columns given")
    d = len(work[0])
    pivot = 0
    for row in range(d):
        j = next((j for j in range(pivot, len(work)) if work[j][row] != 0), None)
        if j is None:
            continue
        work[pivot], work[j] = work[j], work[pivot]
        for j in range(pivot + 1, len(work)):
            a, b = work[pivot][row], work[j][row]
            if b == 0:
                continue
            g, x, y = xgcd(a, b)
            cp, cj = work[pivot], work[j]
            work[pivot] = [x * p + y * q for p, q in zip(cp, cj)]
            work[j] = [(-b // g) * p + (a // g) * q for p, q in zip(cp, cj)]
        if work[pivot][row] < 0:
            work[pivot] = [-v for v in work[pivot]]
        for j in range(pivot):
            q = work[j][row] // work[pivot][row]
            if q:
                work[j] = [p - q * t for p, t in zip(work[j], work[pivot])]
        pivot += 1
    return [tuple(c) for c in work[:pivot]]


def det_int(cols) -> int:
    """Determinant of the square integer matrix whose columns are given."""
    value = det(cols)
    if value.denominator != 1:
        raise ValueError("matrix is not integral")
    return int(value)
