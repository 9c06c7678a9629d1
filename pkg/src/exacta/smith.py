"""Integer matrices: Smith normal form and what it buys (kernels, solving)."""
from __future__ import annotations


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A, B):
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(A))]


def matvec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def transpose(A, rows=None):
    if not A:
        return [[] for _ in range(rows or 0)]
    return [list(col) for col in zip(*A)]


def snf(M, rows=None, cols=None):
    """Smith normal form.

    Returns (U, D, V) with U·M·V = D, U and V unimodular and D diagonal with
    non-negative entries d1 | d2 | ...  The pivot is always the entry of least
    absolute value (ties broken by lowest row, then lowest column), so the
    result is a deterministic function of M.  ``rows``/``cols`` give the shape
    when M has no rows or no columns.
    """
    m = len(M) if rows is None else rows
    n = (len(M[0]) if M else 0) if cols is None else cols
    A = [list(map(int, r)) for r in M] if m and n else [[0] * n for _ in range(m)]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        if i != j:
            A[i], A[j] = A[j], A[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for r in A:
                r[i], r[j] = r[j], r[i]
            for r in V:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, c):  # row dst += c * row src
        A[dst] = [a + c * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + c * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, c):
        for r in A:
            r[dst] += c * r[src]
        for r in V:
            r[dst] += c * r[src]

    def pivot_in(cells):
        best = None
        for i, j in cells:
            v = A[i][j]
            if v and (best is None or (abs(v), i, j) < best):
                best = (abs(v), i, j)
        return best

    for t in range(min(m, n)):
        p = pivot_in((i, j) for i in range(t, m) for j in range(t, n))
        if p is None:
            break
        swap_rows(t, p[1])
        swap_cols(t, p[2])
        while True:
            piv = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // piv))
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // piv))
            rest = pivot_in([(i, t) for i in range(t + 1, m)] + [(t, j) for j in range(t + 1, n)])
            if rest is not None:
                swap_rows(t, rest[1])
                swap_cols(t, rest[2])
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % piv), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
    return U, A, V


def diagonal(D):
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


def inverse_unimodular(U):
    """Exact inverse of a unimodular integer matrix (via SNF of U itself)."""
    n = len(U)
    if n == 0:
        return []
    P, D, Q = snf(U)
    if any(abs(D[i][i]) != 1 for i in range(n)):
        raise ValueError("matrix is not unimodular")
    # P U Q = D with D = I  =>  U^-1 = Q P
    return matmul(Q, P)


def kernel_basis(A, cols=None):
    """Columns spanning {x in Z^n : A x = 0}, as a list of vectors."""
    n = (len(A[0]) if A else 0) if cols is None else cols
    if n == 0:
        return []
    _, D, V = snf(A, rows=len(A), cols=n)
    r = sum(1 for d in diagonal(D) if d) if A else 0
    return [[V[i][j] for i in range(n)] for j in range(r, n)]


def solve(A, b, cols):
    """One integer solution x of A x = b, or None."""
    m = len(A)
    U, D, V = snf(A, rows=m, cols=cols)
    c = matvec(U, b)
    y = [0] * cols
    for i in range(m):
        d = D[i][i] if i < cols else 0
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d:
                return None
            y[i] = c[i] // d
    return matvec(V, y) if cols else []
