"""Desk-scale standard algebras: sl(n), Heisenberg, triangular families.

The matrix families are built from explicit matrix bases and their
commutators, so the structure constants are derived rather than typed in;
every construction is Jacobi-validated before it is returned.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import LieAlgebra
from .errors import InputFormatError
from .linalg import F0, F1, Matrix, solve_linear

MAX_DIM = 100


def _zero_mat(n):
    return [[F0] * n for _ in range(n)]


def _eij(n, i, j):
    m = _zero_mat(n)
    m[i][j] = F1
    return tuple(tuple(r) for r in m)


def _commutator(a, b):
    n = len(a)
    ab = [[sum((a[i][t] * b[t][j] for t in range(n)), F0) for j in range(n)] for i in range(n)]
    ba = [[sum((b[i][t] * a[t][j] for t in range(n)), F0) for j in range(n)] for i in range(n)]
    return tuple(tuple(ab[i][j] - ba[i][j] for j in range(n)) for i in range(n))


def matrix_coords(basis_mats, m):
    """Coordinates of the matrix m in the given independent matrix basis."""
    n = len(m)
    flat_basis = Matrix([[bm[i][j] for bm in basis_mats] for i in range(n) for j in range(n)])
    target = [m[i][j] for i in range(n) for j in range(n)]
    coords = solve_linear(flat_basis, target)
    if coords is None:
        raise ValueError("matrix lies outside the span of the basis")
    return coords


def _algebra_from_matrices(name, labels, mats):
    dim = len(mats)
    table = {}
    for i in range(dim):
        for j in range(i + 1, dim):
            coords = matrix_coords(mats, _commutator(mats[i], mats[j]))
            entry = {k: c for k, c in enumerate(coords) if c}
            if entry:
                table[(i, j)] = entry
    return LieAlgebra(name, dim, labels, table, validate=True)


def sl_matrix_basis(n):
    """Elementary-matrix basis of traceless n x n matrices.

    Order: strict uppers E_ij (i<j) lexicographic, then H_i = E_ii - E_(i+1)(i+1),
    then strict lowers lexicographic; for n = 2 this is the classical (e, h, f).
    """
    mats, labels = [], []
    for i in range(n):
        for j in range(i + 1, n):
            mats.append(_eij(n, i, j))
            labels.append(f"E{i + 1}{j + 1}")
    for i in range(n - 1):
        m = _zero_mat(n)
        m[i][i] = F1
        m[i + 1][i + 1] = -F1
        mats.append(tuple(tuple(r) for r in m))
        labels.append(f"H{i + 1}")
    for i in range(n):
        for j in range(i):
            mats.append(_eij(n, i, j))
            labels.append(f"E{i + 1}{j + 1}")
    return mats, labels


def strictly_upper_matrix_basis(n):
    mats, labels = [], []
    for i in range(n):
        for j in range(i + 1, n):
            mats.append(_eij(n, i, j))
            labels.append(f"E{i + 1}{j + 1}")
    return mats, labels


def borel_matrix_basis(n):
    """Upper-triangular traceless matrices: nilradical basis then Cartan part."""
    mats, labels = strictly_upper_matrix_basis(n)
    for i in range(n - 1):
        m = _zero_mat(n)
        m[i][i] = F1
        m[i + 1][i + 1] = -F1
        mats.append(tuple(tuple(r) for r in m))
        labels.append(f"H{i + 1}")
    return mats, labels


def _check_dim(name, dim):
    if dim > MAX_DIM:
        raise InputFormatError(f"catalog {name}: dimension {dim} exceeds the cap {MAX_DIM}")


def sl(n):
    if n < 2:
        raise InputFormatError("sl(n) needs n >= 2")
    _check_dim(f"sl({n})", n * n - 1)
    mats, labels = sl_matrix_basis(n)
    return _algebra_from_matrices(f"sl{n}", labels, mats)


def strictly_upper(n):
    if n < 2:
        raise InputFormatError("strictly_upper(n) needs n >= 2")
    _check_dim(f"strictly_upper({n})", n * (n - 1) // 2)
    mats, labels = strictly_upper_matrix_basis(n)
    return _algebra_from_matrices(f"n{n}", labels, mats)


def borel_sl(n):
    if n < 2:
        raise InputFormatError("borel_sl(n) needs n >= 2")
    _check_dim(f"borel_sl({n})", n * (n + 1) // 2 - 1)
    mats, labels = borel_matrix_basis(n)
    return _algebra_from_matrices(f"b{n}", labels, mats)


def heisenberg(m):
    """Heisenberg algebra of odd dimension m = 2k+1: [x_i, y_i] = z."""
    if m < 3 or m % 2 == 0:
        raise InputFormatError("heisenberg(m) needs odd m >= 3")
    _check_dim(f"heisenberg({m})", m)
    k = (m - 1) // 2
    labels = [f"x{i + 1}" for i in range(k)] + [f"y{i + 1}" for i in range(k)] + ["z"]
    table = {(i, k + i): {2 * k: Fraction(1)} for i in range(k)}
    return LieAlgebra(f"heis{m}", m, labels, table, validate=True)


def abelian(n):
    if n < 1:
        raise InputFormatError("abelian(n) needs n >= 1")
    _check_dim(f"abelian({n})", n)
    return LieAlgebra(f"ab{n}", n, [f"a{i + 1}" for i in range(n)], {}, validate=True)


FAMILIES = {
    "sl": sl,
    "heisenberg": heisenberg,
    "strictly_upper": strictly_upper,
    "borel_sl": borel_sl,
    "abelian": abelian,
}


def make(family, param):
    """The catalog entry point: build a validated standard algebra."""
    try:
        builder = FAMILIES[family]
    except KeyError:
        known = ", ".join(sorted(FAMILIES))
        raise InputFormatError(f"unknown catalog family {family!r} (known: {known})") from None
    return builder(param)
