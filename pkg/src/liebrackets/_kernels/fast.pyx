# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot exact-arithmetic kernels.

Entries stay Python objects (big ints / Fractions); the win over
``pure.py`` is C-level loop and index handling.  Semantics are identical
by contract and checked by the kernel parity tests.
"""


def rref(rows):
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t ncols = 0, r = 0, c, i, j, pr
    cdef list work = [list(src) for src in rows]
    if m:
        ncols = len(work[0])
    pivots = []
    cdef list ri, rr, row
    for c in range(ncols):
        if r == m:
            break
        pr = -1
        for i in range(r, m):
            if (<list>work[i])[c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            work[pr], work[r] = work[r], work[pr]
        row = <list>work[r]
        pv = row[c]
        if pv != 1:
            for j in range(c, ncols):
                row[j] = row[j] / pv
        rr = <list>work[r]
        for i in range(m):
            if i != r:
                ri = <list>work[i]
                f = ri[c]
                if f:
                    for j in range(c, ncols):
                        ri[j] = ri[j] - f * rr[j]
        pivots.append(c)
        r += 1
    return work, pivots


def mat_mul(a, b):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t m = len(b)
    cdef Py_ssize_t k = 0
    cdef Py_ssize_t i, j, t
    if m:
        k = len(b[0])
    bt = [[b[i][j] for i in range(m)] for j in range(k)]
    out = []
    cdef list ai, bj, orow
    for i in range(n):
        ai = <list>list(a[i])
        orow = []
        for j in range(k):
            bj = <list>bt[j]
            s = 0
            for t in range(m):
                s = s + ai[t] * bj[t]
            orow.append(s)
        out.append(orow)
    return out


def trace_mul(a, b):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i, j, m
    s = 0
    for i in range(n):
        ai = a[i]
        m = len(ai)
        for j in range(m):
            s = s + ai[j] * b[j][i]
    return s


def charpoly_int(rows):
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, k
    if n == 0:
        return [1]
    bmat = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    cs = []
    for k in range(1, n + 1):
        amat = mat_mul(rows, bmat)
        tr = 0
        for i in range(n):
            tr = tr + amat[i][i]
        q, rem = divmod(tr, k)
        if rem:
            raise ArithmeticError("non-exact trace division in charpoly")
        cs.append(q)
        if k < n:
            for i in range(n):
                (<list>amat[i])[i] = (<list>amat[i])[i] - q
            bmat = amat
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    for k in range(1, n + 1):
        coeffs[n - k] = -cs[k - 1]
    return coeffs


def power_is_zero(rows, n):
    cdef Py_ssize_t size = len(rows)
    cdef Py_ssize_t e = 1
    cdef bint zero
    if size == 0:
        return True
    cur = [list(r) for r in rows]
    while True:
        zero = True
        for row in cur:
            for v in row:
                if v:
                    zero = False
                    break
            if not zero:
                break
        if zero:
            return True
        if e >= n:
            return False
        cur = mat_mul(cur, cur)
        e *= 2
