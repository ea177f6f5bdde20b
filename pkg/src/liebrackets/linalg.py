"""Exact linear algebra over the rationals.

Every rank, kernel and characteristic-polynomial decision in the toolkit
runs through this module.  Scalars are ``fractions.Fraction`` (arbitrary
precision, always reduced, positive denominator); there is no floating
point anywhere.  Matrices are small and dense by design.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from . import _kernels

F0 = Fraction(0)
F1 = Fraction(1)

# Vectors are plain tuples of Fraction; a few helpers keep call sites tidy.


def vec(values) -> tuple:
    return tuple(Fraction(v) for v in values)


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c, a):
    return tuple(c * x for x in a)


def vec_is_zero(a) -> bool:
    return not any(a)


class Matrix:
    """Immutable dense matrix of Fractions, row major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        rows = tuple(tuple(Fraction(v) for v in r) for r in data)
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != self.cols:
                raise ValueError("ragged matrix rows")
        self.data = rows

    @classmethod
    def identity(cls, n):
        return cls([[F1 if i == j else F0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[F0] * cols for _ in range(rows)])

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i):
        return self.data[i]

    def col(self, j):
        return tuple(r[j] for r in self.data)

    def __add__(self, other):
        self._same_shape(other)
        return Matrix([vec_add(a, b) for a, b in zip(self.data, other.data)])

    def __sub__(self, other):
        self._same_shape(other)
        return Matrix([vec_sub(a, b) for a, b in zip(self.data, other.data)])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError("inner dimensions do not match")
            return Matrix(_kernels.mat_mul(self.data, other.data))
        c = Fraction(other)
        return Matrix([[c * v for v in r] for r in self.data])

    def __rmul__(self, other):
        return self.__mul__(other)

    def apply(self, v):
        """Matrix times column vector, as a tuple."""
        if len(v) != self.cols:
            raise ValueError("vector length does not match")
        return tuple(sum((r[j] * v[j] for j in range(self.cols)), F0) for r in self.data)

    def transpose(self):
        return Matrix([self.col(j) for j in range(self.cols)])

    def trace(self):
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return sum((self.data[i][i] for i in range(self.rows)), F0)

    def is_zero(self):
        return all(vec_is_zero(r) for r in self.data)

    def is_square(self):
        return self.rows == self.cols

    def __pow__(self, e):
        if not self.is_square() or e < 0:
            raise ValueError("power needs a square matrix and e >= 0")
        result = Matrix.identity(self.rows)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def rank(self):
        return mat_rref(self)[1]

    def inverse(self):
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = [list(self.data[i]) + [F1 if j == i else F0 for j in range(n)] for i in range(n)]
        red, pivots = _kernels.rref(aug)
        if pivots != list(range(n)):
            raise ValueError("matrix is singular")
        return Matrix([r[n:] for r in red])

    def _same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def __repr__(self):
        return f"Matrix({[list(map(str, r)) for r in self.data]})"


def mat_rref(m: Matrix):
    """Reduced row echelon form and rank: ``(R, rank)``."""
    red, pivots = _kernels.rref(m.data)
    return Matrix(red) if red else Matrix.zeros(0, m.cols), len(pivots)


def rref_rows(rows):
    """RREF of a list of coordinate tuples, dropping zero rows.

    The nonzero RREF rows are a canonical basis of the row space, so two
    row sets span the same space iff this returns identical tuples.
    """
    if not rows:
        return []
    red, pivots = _kernels.rref(rows)
    return [tuple(red[i]) for i in range(len(pivots))]


def mat_kernel(m: Matrix):
    """Basis of the right null space; empty list for injective maps."""
    red, pivots = _kernels.rref(m.data)
    pivset = set(pivots)
    free = [c for c in range(m.cols) if c not in pivset]
    basis = []
    for fc in free:
        v = [F0] * m.cols
        v[fc] = F1
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(tuple(v))
    return basis


def solve_linear(m: Matrix, b):
    """Some exact solution of M x = b, or None if inconsistent."""
    if len(b) != m.rows:
        raise ValueError("right-hand side length does not match")
    aug = [list(m.data[i]) + [Fraction(b[i])] for i in range(m.rows)]
    red, pivots = _kernels.rref(aug)
    if m.cols in pivots:
        return None
    x = [F0] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][m.cols]
    return tuple(x)


class Polynomial:
    """Univariate polynomial over the rationals.

    Coefficients are stored low degree first with no trailing zeros; the
    zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def x_power(cls, k, c=F1):
        return cls([F0] * k + [Fraction(c)])

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self):
        lead = self.leading()
        if lead == 1:
            return self
        return Polynomial([c / lead for c in self.coeffs])

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __sub__(self, other):
        return self + Polynomial([-c for c in other.coeffs])

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.is_zero() or other.is_zero():
                return Polynomial.zero()
            out = [F0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return Polynomial(out)
        return Polynomial([Fraction(other) * c for c in self.coeffs])

    __rmul__ = __mul__

    def divmod(self, other):
        """Exact polynomial division with remainder."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Polynomial.zero(), self
        quot = [F0] * (dq + 1)
        lead = other.leading()
        for k in range(dq, -1, -1):
            if len(rem) == k + len(other.coeffs):
                c = rem[-1] / lead
                quot[k] = c
                for i, b in enumerate(other.coeffs):
                    rem[k + i] -= c * b
                while rem and rem[-1] == 0:
                    rem.pop()
        return Polynomial(quot), Polynomial(rem)

    def derivative(self):
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def eval(self, x):
        acc = F0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_matrix(self, m: Matrix):
        acc = Matrix.zeros(m.rows, m.rows)
        for c in reversed(self.coeffs):
            acc = acc * m + c * Matrix.identity(m.rows)
        return acc

    def divides(self, other) -> bool:
        return other.divmod(self)[1].is_zero()

    def __repr__(self):
        return f"Polynomial([{', '.join(map(str, self.coeffs))}])"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("t" if c == 1 else f"{c}*t")
            else:
                parts.append(f"t^{i}" if c == 1 else f"{c}*t^{i}")
        return " + ".join(parts).replace("+ -", "- ")


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor (Euclid over the rationals)."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    if a.is_zero():
        return a
    return a.monic()


def poly_lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero() or b.is_zero():
        return Polynomial.zero()
    g = poly_gcd(a, b)
    return (a * b).divmod(g)[0].monic()


def _scaled_int_rows(m: Matrix):
    """Clear denominators: returns (integer rows, common multiplier d)."""
    d = 1
    for r in m.data:
        for v in r:
            d = lcm(d, v.denominator)
    rows = [[int(v * d) for v in r] for r in m.data]
    return rows, d


def char_poly(m: Matrix) -> Polynomial:
    """det(tI - M), exactly, monic of degree equal to the dimension.

    Computed over the integers after clearing denominators; with d the
    common denominator, the t^j coefficient of det(tI - dM) is d^(n-j)
    times the one of det(tI - M).
    """
    if not m.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    rows, d = _scaled_int_rows(m)
    raw = _kernels.charpoly_int(rows)
    n = m.rows
    if d == 1:
        return Polynomial(raw)
    return Polynomial([Fraction(raw[j], d ** (n - j)) for j in range(n + 1)])


def _local_min_poly(m: Matrix, start) -> Polynomial:
    """Minimal monic p with p(M) v = 0 for the single vector v."""
    n = m.rows
    krylov = [start]
    v = start
    while True:
        red, pivots = _kernels.rref(krylov)
        if len(pivots) < len(krylov):
            break
        v = m.apply(v)
        krylov.append(v)
    k = len(krylov) - 1
    lhs = Matrix([[krylov[j][i] for j in range(k)] for i in range(n)])
    sol = solve_linear(lhs, [-c for c in krylov[k]])
    return Polynomial(list(sol) + [F1])


def min_poly(m: Matrix) -> Polynomial:
    """Monic minimal polynomial, as the lcm of the minimal polynomials of
    the standard basis vectors (no factorization needed)."""
    if not m.is_square():
        raise ValueError("minimal polynomial of a non-square matrix")
    n = m.rows
    if n == 0:
        return Polynomial([F1])
    result = Polynomial([F1])
    for i in range(n):
        e = tuple(F1 if j == i else F0 for j in range(n))
        result = poly_lcm(result, _local_min_poly(m, e))
        if result.degree() == n:
            break
    return result


def is_squarefree(p: Polynomial) -> bool:
    """True iff gcd(p, p') is constant."""
    if p.is_zero():
        raise ValueError("squarefreeness of the zero polynomial is undefined")
    if p.degree() == 0:
        return True
    return poly_gcd(p, p.derivative()).degree() == 0
