"""Pure-Python reference implementations of the hot linear-algebra kernels.

Semantics must match ``fast.pyx`` exactly: the compiled module is a plain
speedup, never a behavioural change.  Everything here is exact; entries are
Python ints or ``fractions.Fraction``.
"""


def rref(rows):
    """Reduced row echelon form of a dense matrix given as a list of rows.

    Entries must divide exactly (Fractions); returns ``(new_rows,
    pivot_cols)``.  The input is not modified.
    """
    m = len(rows)
    rows = [list(r) for r in rows]
    ncols = len(rows[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        pr = -1
        for i in range(r, m):
            if rows[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            rows[pr], rows[r] = rows[r], rows[pr]
        pv = rows[r][c]
        if pv != 1:
            row = rows[r]
            for j in range(c, ncols):
                row[j] = row[j] / pv
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                ri, rr = rows[i], rows[r]
                for j in range(c, ncols):
                    ri[j] = ri[j] - f * rr[j]
        pivots.append(c)
        r += 1
    return rows, pivots


def mat_mul(a, b):
    """Dense matrix product of two lists-of-rows (any exact scalar type)."""
    n = len(a)
    m = len(b)
    k = len(b[0]) if m else 0
    bt = [[b[i][j] for i in range(m)] for j in range(k)]
    out = []
    for i in range(n):
        ai = a[i]
        row = []
        for j in range(k):
            bj = bt[j]
            s = 0
            for t in range(m):
                s += ai[t] * bj[t]
            row.append(s)
        out.append(row)
    return out


def trace_mul(a, b):
    """trace(a @ b) without forming the product."""
    s = 0
    for i in range(len(a)):
        ai = a[i]
        for j in range(len(ai)):
            s += ai[j] * b[j][i]
    return s


def charpoly_int(rows):
    """Characteristic polynomial det(tI - M) of a square integer matrix.

    Faddeev-LeVerrier recurrence; the only divisions are the exact integer
    divisions trace/k.  Returns coefficients low degree first, monic, length
    n+1.
    """
    n = len(rows)
    if n == 0:
        return [1]
    bmat = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    cs = []
    for k in range(1, n + 1):
        amat = mat_mul(rows, bmat)
        tr = 0
        for i in range(n):
            tr += amat[i][i]
        q, rem = divmod(tr, k)
        if rem:
            raise ArithmeticError("non-exact trace division in charpoly")
        cs.append(q)
        if k < n:
            for i in range(n):
                amat[i][i] -= q
            bmat = amat
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    for k in range(1, n + 1):
        coeffs[n - k] = -cs[k - 1]
    return coeffs


def power_is_zero(rows, n):
    """True iff the square integer matrix is nilpotent (some power <= n is 0).

    Repeated squaring: M^(2^j) for 2^j >= n vanishes iff M^n does.
    """
    size = len(rows)
    if size == 0:
        return True
    cur = [list(r) for r in rows]
    e = 1
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
