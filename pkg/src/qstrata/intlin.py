"""Exact linear algebra over ZZ: Hermite/Smith normal forms, kernels, saturation.

Everything here works on tuples of Python ints, so results are exact for any
magnitude.  Matrices are tuples of rows; vectors act as columns under `matvec`.
"""

from __future__ import annotations

from math import gcd

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


def mat(rows) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(m: int, n: int) -> Matrix:
    return tuple((0,) * n for _ in range(m))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(a: Matrix, v: Vector) -> Vector:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(x + y for x, y in zip(u, v))


def vec_scale(c: int, v: Vector) -> Vector:
    return tuple(c * x for x in v)


def _echelonize(rows: list[list[int]], ncols: int) -> int:
    """In-place integer row echelon on the first `ncols` columns.

    Uses repeated Euclidean reduction, so pivots end up positive and entries
    above each pivot are reduced into [0, pivot).  Returns the pivot count.
    Columns beyond `ncols` are carried along (companion columns).
    """
    pivot_row = 0
    for col in range(ncols):
        # gather rows with a nonzero entry in this column
        while True:
            nz = [i for i in range(pivot_row, len(rows)) if rows[i][col] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(rows[i][col]), i))
            rows[pivot_row], rows[i0] = rows[i0], rows[pivot_row]
            piv = rows[pivot_row][col]
            clean = True
            for i in range(pivot_row + 1, len(rows)):
                if rows[i][col] != 0:
                    q = rows[i][col] // piv
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[pivot_row])]
                    if rows[i][col] != 0:
                        clean = False
            if clean:
                break
        if pivot_row < len(rows) and rows[pivot_row][col] != 0:
            if rows[pivot_row][col] < 0:
                rows[pivot_row] = [-x for x in rows[pivot_row]]
            piv = rows[pivot_row][col]
            for i in range(pivot_row):
                q = rows[i][col] // piv
                if q:
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[pivot_row])]
            pivot_row += 1
    return pivot_row


def hnf(rows) -> Matrix:
    """Canonical row Hermite normal form; zero rows dropped.

    Two generating sets span the same sublattice of ZZ^n iff their HNFs agree.
    """
    work = [list(r) for r in rows]
    if not work:
        return ()
    n = len(work[0])
    npiv = _echelonize(work, n)
    return mat(work[:npiv])


def rank(a: Matrix) -> int:
    work = [list(r) for r in a]
    if not work:
        return 0
    return _echelonize(work, len(work[0]))


def kernel(a: Matrix, n: int | None = None) -> Matrix:
    """Basis (as HNF rows) of {x in ZZ^n : a @ x = 0}, x a column vector."""
    if n is None:
        if not a:
            raise ValueError("need explicit n for an empty matrix")
        n = len(a[0])
    if not a:
        return identity(n)
    # left kernel of a^T via companion columns
    at = transpose(a)
    m = len(at[0]) if at else 0
    work = [list(at[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    npiv = _echelonize(work, m)
    ker_rows = [row[m:] for row in work[npiv:]]
    return hnf(ker_rows)


def saturate(rows) -> Matrix:
    """Saturation of the row span: the smallest saturated sublattice containing it."""
    b = hnf(rows)
    if not b:
        return ()
    n = len(b[0])
    return kernel(kernel(b, n), n)


def snf_diagonal(a: Matrix) -> tuple[int, ...]:
    """Invariant factors d_1 | d_2 | ... of an integer matrix (nonnegative)."""
    work = [list(r) for r in a]
    m = len(work)
    n = len(work[0]) if m else 0
    diag = []
    t = 0
    while t < min(m, n):
        # find a nonzero entry in the remaining block
        entries = [(abs(work[i][j]), i, j) for i in range(t, m) for j in range(t, n) if work[i][j] != 0]
        if not entries:
            break
        _, pi, pj = min(entries)
        work[t], work[pi] = work[pi], work[t]
        for row in work:
            row[t], row[pj] = row[pj], row[t]
        while True:
            # clear column t
            for i in range(t + 1, m):
                if work[i][t] != 0:
                    q = work[i][t] // work[t][t]
                    work[i] = [x - q * y for x, y in zip(work[i], work[t])]
            if any(work[i][t] != 0 for i in range(t + 1, m)):
                _, pi = min((abs(work[i][t]), i) for i in range(t, m) if work[i][t] != 0)
                work[t], work[pi] = work[pi], work[t]
                continue
            # clear row t
            for j in range(t + 1, n):
                if work[t][j] != 0:
                    q = work[t][j] // work[t][t]
                    for row in work:
                        row[j] -= q * row[t]
            if any(work[t][j] != 0 for j in range(t + 1, n)):
                nzj = min((abs(work[t][j]), j) for j in range(t, n) if work[t][j] != 0)[1]
                for row in work:
                    row[t], row[nzj] = row[nzj], row[t]
                continue
            break
        # enforce divisibility of the rest of the block by the pivot
        piv = abs(work[t][t])
        bad = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if work[i][j] % piv != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            work[t] = [x + y for x, y in zip(work[t], work[bad])]
            continue
        diag.append(piv)
        t += 1
    return tuple(diag)


def det(a: Matrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    work = [list(r) for r in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if work[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if work[i][k] != 0), None)
            if swap is None:
                return 0
            work[k], work[swap] = work[swap], work[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = (work[i][j] * work[k][k] - work[i][k] * work[k][j]) // prev
            work[i][k] = 0
        prev = work[k][k]
    return sign * work[n - 1][n - 1]


def inverse_unimodular(a: Matrix) -> Matrix:
    """Inverse of an integer matrix with det +-1, via the adjugate."""
    n = len(a)
    d = det(a)
    if d not in (1, -1):
        raise ValueError(f"matrix is not unimodular (det={d})")

    def minor(i, j):
        return tuple(tuple(a[r][c] for c in range(n) if c != j) for r in range(n) if r != i)

    adj = tuple(
        tuple(((-1) ** (i + j)) * det(minor(j, i)) for j in range(n)) for i in range(n)
    )
    return tuple(tuple(x * d for x in row) for row in adj)


def solve_in_rowspan(h: Matrix, v: Vector) -> Vector | None:
    """Coefficients c with c @ h == v, for h in HNF; None if v is not in the span."""
    res = list(v)
    coeffs = []
    for row in h:
        p = next((j for j, x in enumerate(row) if x != 0), None)
        if p is None:
            coeffs.append(0)
            continue
        if res[p] % row[p] != 0:
            return None
        q = res[p] // row[p]
        coeffs.append(q)
        if q:
            res = [x - q * y for x, y in zip(res, row)]
    if any(res):
        return None
    return tuple(coeffs)


def vectors_gcd(v: Vector) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g
