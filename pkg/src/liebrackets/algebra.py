"""Lie algebras presented by structure constants over the rationals.

An algebra stores only the brackets [b_i, b_j] for i < j; antisymmetry is
built into lookup rather than validated.  Elements are coordinate tuples
of Fractions in the algebra's basis.  Everything is immutable after
construction and all operations are pure.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .errors import InternalInvariantError, PreconditionError
from .linalg import (
    F0,
    F1,
    Matrix,
    mat_kernel,
    rref_rows,
    solve_linear,
    vec,
    vec_add,
    vec_is_zero,
    vec_scale,
)
from . import _kernels

LOWER_CENTRAL = "lower_central"
DERIVED = "derived"


class JacobiFailure:
    """One violated Jacobi triple, with the exact defect vector."""

    __slots__ = ("i", "j", "k", "defect")

    def __init__(self, i, j, k, defect):
        self.i, self.j, self.k = i, j, k
        self.defect = defect

    def __repr__(self):
        return f"JacobiFailure(i={self.i}, j={self.j}, k={self.k})"


class LieAlgebra:
    """Finite-dimensional Lie algebra given by rational structure constants.

    ``table`` maps ``(i, j)`` with i < j to a sparse ``{k: c}`` dict meaning
    [b_i, b_j] = sum_k c * b_k; missing pairs bracket to zero.
    """

    def __init__(self, name, dim, basis_labels=None, table=None, validate=False):
        self.name = name
        self.dim = dim
        self.basis_labels = tuple(basis_labels) if basis_labels else tuple(f"b{i}" for i in range(dim))
        if len(self.basis_labels) != dim:
            raise ValueError("label count does not match dimension")
        frozen = {}
        for (i, j), coeffs in (table or {}).items():
            if not (0 <= i < j < dim):
                raise ValueError(f"structure constants need 0 <= i < j < dim, got ({i},{j})")
            entry = {k: Fraction(c) for k, c in coeffs.items() if c}
            for k in entry:
                if not 0 <= k < dim:
                    raise ValueError(f"target index {k} out of range")
            if entry:
                frozen[(i, j)] = entry
        self.table = frozen
        self._ad_basis = None
        self._killing = None
        if validate:
            failures = self.validate()
            if failures:
                f = failures[0]
                raise PreconditionError(
                    f"Jacobi identity fails at triple ({f.i},{f.j},{f.k}) of {name}"
                )

    # ---- basic element handling -------------------------------------

    def zero(self):
        return (F0,) * self.dim

    def basis_vector(self, i):
        return tuple(F1 if j == i else F0 for j in range(self.dim))

    def element(self, coords):
        v = vec(coords)
        if len(v) != self.dim:
            raise ValueError(f"element has {len(v)} coordinates, algebra has dim {self.dim}")
        return v

    def _check(self, x):
        if len(x) != self.dim:
            raise ValueError("element dimension mismatch")

    # ---- bracket and adjoint ----------------------------------------

    def bracket_basis(self, i, j):
        """Sparse bracket of two basis vectors, as a {k: c} dict."""
        if i == j:
            return {}
        if i < j:
            return self.table.get((i, j), {})
        return {k: -c for k, c in self.table.get((j, i), {}).items()}

    def bracket(self, x, y):
        self._check(x)
        self._check(y)
        out = [F0] * self.dim
        for (i, j), coeffs in self.table.items():
            f = x[i] * y[j] - x[j] * y[i]
            if f:
                for k, c in coeffs.items():
                    out[k] += f * c
        return tuple(out)

    def ad(self, x):
        """Matrix of y -> [x, y] in the algebra basis."""
        self._check(x)
        cols = [[F0] * self.dim for _ in range(self.dim)]
        for (i, j), coeffs in self.table.items():
            if x[i]:
                for k, c in coeffs.items():
                    cols[j][k] += x[i] * c
            if x[j]:
                for k, c in coeffs.items():
                    cols[i][k] -= x[j] * c
        return Matrix([[cols[j][k] for j in range(self.dim)] for k in range(self.dim)])

    def is_ad_nilpotent(self, x) -> bool:
        """True iff ad(x)^dim vanishes exactly."""
        m = self.ad(x)
        d = 1
        for r in m.data:
            for v in r:
                if v.denominator != 1:
                    d = lcm(d, v.denominator)
        rows = [[int(v * d) for v in r] for r in m.data]
        return _kernels.power_is_zero(rows, max(self.dim, 1))

    # ---- validation ---------------------------------------------------

    def validate(self):
        """All failed Jacobi triples (i<j<k) with their defect vectors."""
        failures = []
        for i in range(self.dim):
            bi = self.basis_vector(i)
            for j in range(i + 1, self.dim):
                bj = self.basis_vector(j)
                bij = self.bracket(bi, bj)
                for k in range(j + 1, self.dim):
                    bk = self.basis_vector(k)
                    defect = vec_add(
                        self.bracket(bij, bk),
                        vec_add(
                            self.bracket(self.bracket(bj, bk), bi),
                            self.bracket(self.bracket(bk, bi), bj),
                        ),
                    )
                    if not vec_is_zero(defect):
                        failures.append(JacobiFailure(i, j, k, defect))
        return failures

    # ---- series, nilpotency, solvability ------------------------------

    def series(self, kind=LOWER_CENTRAL, within=None):
        """Lower central or derived series as subalgebras of this algebra.

        Terms are produced until the row space stabilizes or reaches zero;
        the final stabilized/zero term is included.
        """
        if within is not None:
            if within.ambient is not self:
                raise ValueError("subalgebra belongs to a different algebra")
            if not within.closed:
                raise PreconditionError("series needs a bracket-closed subalgebra")
            top = within
        else:
            top = Subalgebra.full(self)
        if kind not in (LOWER_CENTRAL, DERIVED):
            raise ValueError(f"unknown series kind {kind!r}")
        terms = [top]
        while True:
            cur = terms[-1]
            if cur.dim == 0:
                break
            left = top.basis_rows if kind == LOWER_CENTRAL else cur.basis_rows
            brackets = [self.bracket(a, b) for a in left for b in cur.basis_rows]
            nxt = Subalgebra.from_spanning(self, brackets, closed=None)
            if nxt.row_space_equals(cur):
                terms.append(nxt)
                break
            terms.append(nxt)
            if nxt.dim == 0:
                break
        return terms

    def is_nilpotent(self) -> bool:
        return self.series(LOWER_CENTRAL)[-1].dim == 0

    def is_solvable(self) -> bool:
        return self.series(DERIVED)[-1].dim == 0

    # ---- Killing form and friends -------------------------------------

    def ad_basis(self):
        if self._ad_basis is None:
            self._ad_basis = tuple(self.ad(self.basis_vector(i)) for i in range(self.dim))
        return self._ad_basis

    def killing_form(self) -> Matrix:
        """K[i][j] = trace(ad b_i · ad b_j); symmetric."""
        if self._killing is None:
            ads = self.ad_basis()
            n = self.dim
            grid = [[F0] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    t = _kernels.trace_mul(ads[i].data, ads[j].data)
                    grid[i][j] = t
                    grid[j][i] = t
            self._killing = Matrix(grid)
        return self._killing

    def is_semisimple(self) -> bool:
        """Nondegenerate Killing form; the 0-dim algebra counts as semisimple."""
        if self.dim == 0:
            return True
        return self.killing_form().rank() == self.dim

    def derived_subalgebra(self):
        brackets = [
            self.bracket(self.basis_vector(i), self.basis_vector(j))
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        ]
        return Subalgebra.from_spanning(self, brackets, closed=None)

    def radical(self):
        """Killing-orthogonal of the derived algebra (valid in char 0)."""
        der = self.derived_subalgebra()
        if der.dim == 0:
            return Subalgebra.full(self)
        k = self.killing_form()
        rows = [k.apply(d) for d in der.basis_rows]
        basis = mat_kernel(Matrix(rows))
        sub = Subalgebra.from_rows(self, basis)
        if not sub.closed:
            raise InternalInvariantError("radical is not bracket-closed")
        return sub

    def centralizer(self, h):
        """Kernel of ad(h), as a closed subalgebra."""
        self._check(h)
        sub = Subalgebra.from_rows(self, mat_kernel(self.ad(h)))
        if not sub.closed:
            raise InternalInvariantError("centralizer is not bracket-closed")
        return sub

    def center(self):
        """Elements bracketing to zero with the whole algebra."""
        stacked = []
        for i in range(self.dim):
            stacked.extend(self.ad(self.basis_vector(i)).data)
        if not stacked:
            return Subalgebra.full(self)
        basis = mat_kernel(Matrix(stacked))
        return Subalgebra.from_rows(self, basis)

    # ---- generation, automorphisms, change of basis -------------------

    def generated_subalgebra(self, elements):
        """Smallest bracket-closed subspace containing the given elements.

        Returns ``(subalgebra, provenance)`` where each basis row of the
        subalgebra is the exact value of the iterated-bracket expression at
        the same position in ``provenance`` (leaves are tuple positions).
        Expression depth is at most dim; the closure loop adds pairwise
        brackets of the current basis until the rank stabilizes.
        """
        from .brackets import Leaf, Node

        arity = len(elements)
        basis = []
        exprs = []
        echelon = []  # canonical RREF rows tracking the current span

        def try_add(v, e):
            if vec_is_zero(v):
                return False
            new = rref_rows(echelon + [list(v)])
            if len(new) == len(echelon):
                return False
            echelon[:] = new
            basis.append(tuple(v))
            exprs.append(e)
            return True

        for idx, el in enumerate(elements):
            self._check(el)
            try_add(el, Leaf(idx + 1, arity))
        while True:
            grew = False
            snapshot = list(zip(basis, exprs))
            for a, ea in snapshot:
                for b, eb in snapshot:
                    if try_add(self.bracket(a, b), Node(ea, eb)):
                        grew = True
            if not grew:
                break
        sub = Subalgebra(self, tuple(basis), closed=True, _verified=True)
        return sub, exprs

    def exp_ad(self, x) -> Matrix:
        """exp(ad x) for ad-nilpotent x: an exact inner automorphism."""
        if not self.is_ad_nilpotent(x):
            raise PreconditionError("exp(ad x) needs an ad-nilpotent element")
        m = self.ad(x)
        total = Matrix.identity(self.dim)
        term = Matrix.identity(self.dim)
        k = 1
        while True:
            term = term * m * Fraction(1, k)
            if term.is_zero():
                break
            total = total + term
            k += 1
        return total

    def change_of_basis(self, p: Matrix) -> LieAlgebra:
        """The same algebra written in the basis whose coordinate rows are P.

        Row i of P holds the old coordinates of the new basis vector b'_i.
        """
        if p.rows != self.dim or p.cols != self.dim:
            raise ValueError("change of basis matrix has wrong shape")
        try:
            pinv = p.inverse()
        except ValueError:
            raise PreconditionError("change of basis matrix is singular") from None
        table = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                w = self.bracket(p.row(i), p.row(j))
                coords = tuple(
                    sum((w[t] * pinv.data[t][k] for t in range(self.dim)), F0)
                    for k in range(self.dim)
                )
                entry = {k: c for k, c in enumerate(coords) if c}
                if entry:
                    table[(i, j)] = entry
        return LieAlgebra(
            self.name + "'", self.dim, [f"{lab}'" for lab in self.basis_labels], table, validate=True
        )

    def __repr__(self):
        return f"LieAlgebra({self.name!r}, dim={self.dim})"


class Subalgebra:
    """Subspace of an ambient algebra, with a bracket-closure flag.

    ``basis_rows`` are linearly independent coordinate tuples.  ``closed``
    states whether bracketing basis pairs stays in the row space; it is
    verified at construction unless the caller already proved it.
    """

    __slots__ = ("ambient", "basis_rows", "closed", "_echelon", "_induced")

    def __init__(self, ambient, basis_rows, closed=None, _verified=False):
        self.ambient = ambient
        rows = tuple(tuple(Fraction(c) for c in r) for r in basis_rows)
        for r in rows:
            if len(r) != ambient.dim:
                raise ValueError("basis row dimension mismatch")
        echelon = rref_rows([list(r) for r in rows])
        if len(echelon) != len(rows):
            raise ValueError("basis rows are linearly dependent")
        self.basis_rows = rows
        self._echelon = echelon
        self._induced = None
        if _verified:
            self.closed = bool(closed)
        else:
            self.closed = self._check_closed()
            if closed is True and not self.closed:
                raise PreconditionError("rows do not span a bracket-closed subspace")

    @classmethod
    def full(cls, ambient):
        return cls(ambient, [ambient.basis_vector(i) for i in range(ambient.dim)], closed=True, _verified=True)

    @classmethod
    def from_rows(cls, ambient, rows, closed=None):
        return cls(ambient, rows, closed=closed)

    @classmethod
    def from_spanning(cls, ambient, rows, closed=None):
        """Reduce a spanning set to a basis (canonical RREF rows)."""
        reduced = rref_rows([list(r) for r in rows])
        return cls(ambient, reduced, closed=closed)

    @property
    def dim(self):
        return len(self.basis_rows)

    def _check_closed(self):
        for a in self.basis_rows:
            for b in self.basis_rows:
                if not self.contains(self.ambient.bracket(a, b)):
                    return False
        return True

    def contains(self, v) -> bool:
        if vec_is_zero(v):
            return True
        return len(rref_rows(self._echelon + [list(v)])) == len(self._echelon)

    def row_space_equals(self, other) -> bool:
        return self._echelon == other._echelon

    def coords_of(self, v):
        """Coordinates of v in basis_rows, or None if v is outside."""
        if self.dim == 0:
            return () if vec_is_zero(v) else None
        m = Matrix([[self.basis_rows[j][i] for j in range(self.dim)] for i in range(self.ambient.dim)])
        return solve_linear(m, v)

    def to_ambient(self, coords):
        out = self.ambient.zero()
        for c, row in zip(coords, self.basis_rows):
            if c:
                out = vec_add(out, vec_scale(Fraction(c), row))
        return out

    def induced(self) -> LieAlgebra:
        """The subalgebra as an abstract algebra in its own basis.

        Requires closure; re-expanding induced brackets into ambient
        coordinates agrees exactly with ambient brackets by construction.
        """
        if not self.closed:
            raise PreconditionError("induced constants need a bracket-closed subspace")
        if self._induced is None:
            table = {}
            for i in range(self.dim):
                for j in range(i + 1, self.dim):
                    w = self.ambient.bracket(self.basis_rows[i], self.basis_rows[j])
                    coords = self.coords_of(w)
                    if coords is None:
                        raise InternalInvariantError("closed subalgebra lost a bracket")
                    entry = {k: c for k, c in enumerate(coords) if c}
                    if entry:
                        table[(i, j)] = entry
            self._induced = LieAlgebra(
                f"{self.ambient.name}|sub{self.dim}", self.dim, None, table
            )
        return self._induced

    def is_nilpotent(self) -> bool:
        """Nilpotency of the subalgebra as an abstract algebra."""
        return self.induced().is_nilpotent()

    def is_solvable(self) -> bool:
        return self.induced().is_solvable()

    def __repr__(self):
        return f"Subalgebra(dim={self.dim} of {self.ambient.name!r}, closed={self.closed})"


def ad_in(sub: Subalgebra, coords_local):
    """ad matrix of an element of a subalgebra, inside the induced algebra."""
    return sub.induced().ad(coords_local)


def conjugate_tuple(aut: Matrix, elements):
    """Apply an automorphism matrix to every element of a tuple."""
    return tuple(aut.apply(x) for x in elements)
