"""Semisimple structure tools: sl2-triples through nonzero nilpotents,
integer gradings by a semisimple element, the bracket subalgebra of the
extreme grading layers, reductivity testing, and the recursive refuter
showing that a nonzero semisimple algebra admits no basis whose iterated
brackets are all ad-nilpotent.
"""

from __future__ import annotations

from math import isqrt, lcm

from .algebra import Subalgebra
from .brackets import Leaf, Node, find_non_nilpotent_witness
from .errors import InternalInvariantError, PreconditionError
from .linalg import (
    F0,
    Matrix,
    Polynomial,
    is_squarefree,
    mat_kernel,
    min_poly,
    rref_rows,
    vec_add,
    vec_is_zero,
    vec_scale,
)

# ---------------------------------------------------------------------------
# sl2-triples
# ---------------------------------------------------------------------------


class Sl2Triple:
    """(y, h, f) with [h,y] = 2y, [h,f] = -2f, [y,f] = h, all exact."""

    __slots__ = ("y", "h", "f")

    def __init__(self, y, h, f):
        self.y, self.h, self.f = y, h, f

    def verify(self, algebra) -> bool:
        return (
            algebra.bracket(self.h, self.y) == vec_scale(2, self.y)
            and algebra.bracket(self.h, self.f) == vec_scale(-2, self.f)
            and algebra.bracket(self.y, self.f) == self.h
        )


def jacobson_morozov(algebra, y) -> Sl2Triple:
    """Complete a nonzero nilpotent y of a semisimple algebra to an sl2-triple.

    Two linear solves: first h = [y, u] with ad_y^2 u = -2y, then f from the
    stacked system [y, f] = h, [h, f] = -2f.  Both systems are solvable for
    valid input; inconsistency therefore signals a precondition violation.
    """
    if not algebra.is_semisimple():
        raise PreconditionError("sl2-triples need a semisimple ambient algebra")
    if vec_is_zero(y):
        raise PreconditionError("cannot embed zero in an sl2-triple")
    if not algebra.is_ad_nilpotent(y):
        raise PreconditionError("sl2-triples exist only through ad-nilpotent elements")
    ady = algebra.ad(y)
    target = vec_scale(-2, y)
    u = _solve_matrix(ady * ady, target)
    if u is None:
        raise InternalInvariantError("ad_y^2 u = -2y is inconsistent for valid input")
    h = ady.apply(u)
    adh = algebra.ad(h)
    n = algebra.dim
    stacked = [list(ady.data[i]) for i in range(n)]
    rhs = list(h)
    two_i = adh + 2 * Matrix.identity(n)
    stacked += [list(two_i.data[i]) for i in range(n)]
    rhs += [F0] * n
    f = _solve_matrix(Matrix(stacked), rhs)
    if f is None:
        raise InternalInvariantError("sl2-triple completion system is inconsistent")
    triple = Sl2Triple(tuple(y), h, f)
    if not triple.verify(algebra):
        raise InternalInvariantError("constructed sl2-triple fails its relations")
    return triple


def _solve_matrix(m: Matrix, b):
    from .linalg import solve_linear

    return solve_linear(m, b)


# ---------------------------------------------------------------------------
# integer gradings
# ---------------------------------------------------------------------------


class Grading:
    """Eigenspace decomposition of ad(h) with integer eigenvalues.

    ``layers`` maps each occurring weight to its eigenspace; the projections
    are exact and precomputed from the stacked eigenbasis.
    """

    def __init__(self, algebra, h, layers):
        self.algebra = algebra
        self.h = h
        self.layers = dict(sorted(layers.items()))
        self.weights = sorted(layers)
        rows = []
        self._slices = {}
        for w in self.weights:
            start = len(rows)
            rows.extend(layers[w].basis_rows)
            self._slices[w] = (start, len(rows))
        self._basis = Matrix(rows)
        self._basis_inv = self._basis.inverse()

    def layer(self, weight) -> Subalgebra:
        sub = self.layers.get(weight)
        if sub is None:
            return Subalgebra(self.algebra, (), closed=True, _verified=True)
        return sub

    def coords(self, x):
        """Coefficients of x along the stacked eigenbasis rows."""
        inv = self._basis_inv
        n = self.algebra.dim
        return tuple(sum((x[t] * inv.data[t][j] for t in range(n)), F0) for j in range(n))

    def project(self, weight, x):
        """Projection onto the weight layer; an absent weight gives zero."""
        self.algebra._check(x)
        if weight not in self._slices:
            return self.algebra.zero()
        c = self.coords(x)
        start, stop = self._slices[weight]
        out = self.algebra.zero()
        rows = self._basis.data
        for j in range(start, stop):
            if c[j]:
                out = vec_add(out, vec_scale(c[j], rows[j]))
        return out

    def highest_weight(self) -> int:
        if not self.weights:
            raise PreconditionError("highest weight of a trivial grading")
        return self.weights[-1]

    def negative_part_is_zero(self, x) -> bool:
        c = self.coords(x)
        for w in self.weights:
            if w >= 0:
                continue
            start, stop = self._slices[w]
            if any(c[start:stop]):
                return False
        return True


def _integer_roots(poly, scan_bound):
    """Integer roots of a monic rational polynomial.

    Scans the small window |r| <= scan_bound (covers every sl2-style
    grading, whose weights are below twice the dimension) and, when the
    cleared constant term is small enough to factor, all of its divisors.
    """
    coeffs = list(poly.coeffs)
    roots = set()
    while coeffs and coeffs[0] == 0:
        roots.add(0)
        coeffs = coeffs[1:]
    if not coeffs or len(coeffs) == 1:
        return sorted(roots)
    reduced = Polynomial(coeffs)
    candidates = set(range(-scan_bound, scan_bound + 1))
    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    const = abs(int(coeffs[0] * den))
    if 0 < const <= 10**10:
        divs = set()
        d = 1
        r = isqrt(const)
        while d <= r:
            if const % d == 0:
                divs.add(d)
                divs.add(const // d)
            d += 1
        for d in divs:
            candidates.add(d)
            candidates.add(-d)
    for r in sorted(candidates):
        if r != 0 and reduced.eval(r) == 0:
            roots.add(r)
    return sorted(roots)


def characteristic_grading(algebra, h) -> Grading:
    """Grading of the algebra by the integer eigenvalues of ad(h).

    Requires ad(h) diagonalizable with integer spectrum: the minimal
    polynomial must be squarefree and its integer roots must account for
    the full dimension, otherwise the input is rejected.
    """
    algebra._check(h)
    adh = algebra.ad(h)
    if algebra.dim == 0:
        return Grading(algebra, h, {})
    mp = min_poly(adh)
    if not is_squarefree(mp):
        raise PreconditionError("ad(h) is not semisimple: minimal polynomial is not squarefree")
    roots = _integer_roots(mp, 2 * algebra.dim + 1)
    layers = {}
    total = 0
    ident = Matrix.identity(algebra.dim)
    for r in roots:
        basis = mat_kernel(adh - r * ident)
        if basis:
            sub = Subalgebra(algebra, basis, closed=None)
            layers[r] = sub
            total += sub.dim
    if total != algebra.dim:
        raise PreconditionError(
            "ad(h) has a non-integer eigenvalue: integer eigenspaces cover "
            f"{total} of {algebra.dim} dimensions"
        )
    return Grading(algebra, h, layers)


def projected_nilpotency_pair(algebra, grading: Grading, x):
    """(ad-nilpotency of x, ad-nilpotency of its zero-weight projection).

    x must lie in the non-negative part of the grading.  The two booleans
    agree for every valid input; they are returned as a checkable pair
    rather than assumed equal.
    """
    algebra._check(x)
    if not grading.negative_part_is_zero(x):
        raise PreconditionError("element has a negative-weight component")
    return (
        algebra.is_ad_nilpotent(x),
        algebra.is_ad_nilpotent(grading.project(0, x)),
    )


# ---------------------------------------------------------------------------
# the bracket subalgebra of the extreme layers, and reductivity
# ---------------------------------------------------------------------------


def extreme_bracket_subalgebra(algebra, grading: Grading) -> Subalgebra:
    """Span of all brackets between the top and bottom grading layers.

    A bracket-closed subalgebra of the zero-weight layer; closure is
    re-verified rather than trusted.
    """
    i0 = grading.highest_weight()
    if i0 == 0:
        raise PreconditionError("extreme-layer subalgebra needs a nontrivial grading")
    top = grading.layer(i0)
    bottom = grading.layer(-i0)
    brackets = [algebra.bracket(a, b) for a in top.basis_rows for b in bottom.basis_rows]
    sub = Subalgebra.from_spanning(algebra, brackets, closed=None)
    if not sub.closed:
        raise InternalInvariantError("extreme-layer bracket span is not closed")
    zero_layer = grading.layer(0)
    for row in sub.basis_rows:
        if not zero_layer.contains(row):
            raise InternalInvariantError("extreme-layer bracket left the zero layer")
    return sub


def is_ad_semisimple(algebra, x) -> bool:
    """Squarefree minimal polynomial of ad(x)."""
    algebra._check(x)
    return is_squarefree(min_poly(algebra.ad(x)))


def is_reductive_in(algebra, sub: Subalgebra) -> bool:
    """Decomposition test for reductivity of a subalgebra in the ambient.

    Requires: the subalgebra splits as centre + derived subalgebra, every
    centre basis element is ad-semisimple in the ambient algebra, and the
    derived part is semisimple (or zero) for its own Killing form.
    """
    if not sub.closed:
        raise PreconditionError("reductivity test needs a bracket-closed subalgebra")
    if not algebra.is_semisimple():
        raise PreconditionError("reductivity test is stated inside a semisimple algebra")
    if sub.dim == 0:
        return True
    induced = sub.induced()
    centre_local = induced.center()
    derived_local = induced.derived_subalgebra()
    if centre_local.dim + derived_local.dim != sub.dim:
        return False
    combined = rref_rows(
        [list(r) for r in centre_local.basis_rows] + [list(r) for r in derived_local.basis_rows]
    )
    if len(combined) != sub.dim:
        return False
    for row in centre_local.basis_rows:
        if not is_ad_semisimple(algebra, sub.to_ambient(row)):
            return False
    if derived_local.dim and not derived_local.induced().is_semisimple():
        return False
    return True


# ---------------------------------------------------------------------------
# descent and the refuter
# ---------------------------------------------------------------------------


class DescentStep:
    """One pass of the dimension-lowering construction.

    All recorded elements are in the coordinates of the algebra the step ran
    in; ``k`` is the extreme-layer subalgebra and ``extracted`` the greedy
    basis chosen from the x grid in index order.
    """

    __slots__ = (
        "algebra",
        "triple",
        "grading",
        "top_weight",
        "z_elements",
        "bottom_projections",
        "x_grid",
        "k",
        "extracted_indices",
        "extracted_basis",
        "non_nilpotent_indices",
        "ambient_embed",
    )

    def __init__(self, **kw):
        for name in self.__slots__:
            setattr(self, name, kw.get(name))


def descent_step(algebra, elements) -> DescentStep:
    """Build the extreme-layer subalgebra and its bracket-value basis.

    ``elements`` must span the (semisimple) algebra and start with a nonzero
    ad-nilpotent element.  Verifies, rather than assumes, that the z family
    spans the top layer, the projected family spans the bottom layer, the x
    grid spans the constructed subalgebra, and that projecting after
    bracketing agrees with bracketing the projection.
    """
    if not algebra.is_semisimple():
        raise PreconditionError("descent runs inside a semisimple algebra")
    n = len(elements)
    if len(rref_rows([list(e) for e in elements])) != algebra.dim:
        raise PreconditionError("descent needs a spanning tuple")
    y1 = elements[0]
    if vec_is_zero(y1):
        raise PreconditionError("descent needs a nonzero leading element")
    if not algebra.is_ad_nilpotent(y1):
        raise PreconditionError("descent needs an ad-nilpotent leading element")
    triple = jacobson_morozov(algebra, y1)
    grading = characteristic_grading(algebra, triple.h)
    i0 = grading.highest_weight()
    ady = algebra.ad(y1)
    power = ady**i0
    zs = [power.apply(yj) for yj in elements]
    top = grading.layer(i0)
    for z in zs:
        if not top.contains(z):
            raise InternalInvariantError("z family left the top layer")
    if rref_rows([list(z) for z in zs]) != top._echelon:
        raise InternalInvariantError("z family does not span the top layer")
    yprimes = [grading.project(-i0, yk) for yk in elements]
    bottom = grading.layer(-i0)
    if rref_rows([list(v) for v in yprimes]) != bottom._echelon:
        raise InternalInvariantError("projected family does not span the bottom layer")
    x_grid = []
    for j in range(n):
        row = []
        for k in range(n):
            via_projection = grading.project(0, algebra.bracket(zs[j], elements[k]))
            via_bottom = algebra.bracket(zs[j], yprimes[k])
            if via_projection != via_bottom:
                raise InternalInvariantError(
                    "projection and bracket do not commute on the x grid"
                )
            row.append(via_projection)
        x_grid.append(row)
    k_sub = extreme_bracket_subalgebra(algebra, grading)
    flat = [x_grid[j][k] for j in range(n) for k in range(n)]
    if rref_rows([list(v) for v in flat]) != k_sub._echelon:
        raise InternalInvariantError("x grid does not span the extreme-layer subalgebra")
    extracted_indices = []
    extracted_basis = []
    echelon = []
    for j in range(n):
        for k in range(n):
            v = x_grid[j][k]
            if vec_is_zero(v):
                continue
            new = rref_rows(echelon + [list(v)])
            if len(new) > len(echelon):
                echelon = new
                extracted_indices.append((j, k))
                extracted_basis.append(v)
    non_nilpotent = [
        (j, k)
        for j in range(n)
        for k in range(n)
        if not algebra.is_ad_nilpotent(x_grid[j][k])
    ]
    return DescentStep(
        algebra=algebra,
        triple=triple,
        grading=grading,
        top_weight=i0,
        z_elements=zs,
        bottom_projections=yprimes,
        x_grid=x_grid,
        k=k_sub,
        extracted_indices=extracted_indices,
        extracted_basis=extracted_basis,
        non_nilpotent_indices=non_nilpotent,
    )


class DirectWitness:
    """An iterated-bracket expression whose value is not ad-nilpotent.

    ``level`` counts the descent steps taken before the witness was found;
    at level 0 the expression refers to the input basis, deeper levels refer
    to the extracted basis of the corresponding trace entry.
    """

    __slots__ = ("expr", "value", "level")

    def __init__(self, expr, value, level):
        self.expr = expr
        self.value = value
        self.level = level


class StructuralContradiction:
    """A non-nilpotent central element of the final constructed subalgebra."""

    __slots__ = ("element", "level")

    def __init__(self, element, level):
        self.element = element
        self.level = level


class RefutationReport:
    __slots__ = ("trace", "outcome")

    def __init__(self, trace, outcome):
        self.trace = trace
        self.outcome = outcome


def _iterated_ad_expr(arity, j, k, times):
    """[ad_{y1}^times (y_j), y_k] as an explicit bracket expression."""
    inner = Leaf(j + 1, arity)
    for _ in range(times):
        inner = Node(Leaf(1, arity), inner)
    return Node(inner, Leaf(k + 1, arity))


def engel_refuter(algebra, basis) -> RefutationReport:
    """Refute very-nilpotency of a spanning tuple of a semisimple algebra.

    Strategy per level: hunt for a cheap direct witness among values of
    depth at most 2; otherwise run one descent step, turn any non-nilpotent
    grid element into a direct witness, and recurse into the constructed
    subalgebra with its extracted basis.  A non-semisimple terminal
    subalgebra yields a non-nilpotent central element instead.  Dimensions
    strictly decrease, so this always terminates.
    """
    if not algebra.is_semisimple() or algebra.dim == 0:
        raise PreconditionError("the refuter applies to nonzero semisimple algebras")
    if len(rref_rows([list(b) for b in basis])) != algebra.dim:
        raise PreconditionError("refuter needs a spanning tuple")

    current = algebra
    embed = [algebra.basis_vector(i) for i in range(algebra.dim)]
    local_basis = [tuple(b) for b in basis]
    trace = []

    def to_ambient(v):
        out = algebra.zero()
        for c, row in zip(v, embed):
            if c:
                out = vec_add(out, vec_scale(c, row))
        return out

    while True:
        hit = find_non_nilpotent_witness(current, local_basis, 2)
        if hit is not None:
            expr, value = hit
            amb = to_ambient(value)
            if algebra.is_ad_nilpotent(amb):
                raise InternalInvariantError("witness is nilpotent in the ambient algebra")
            return RefutationReport(trace, DirectWitness(expr, amb, len(trace)))

        step = descent_step(current, local_basis)
        step.ambient_embed = list(embed)
        trace.append(step)
        if step.non_nilpotent_indices:
            j, k = step.non_nilpotent_indices[0]
            value = current.bracket(step.z_elements[j], local_basis[k])
            expr = _iterated_ad_expr(len(local_basis), j, k, step.top_weight)
            amb = to_ambient(value)
            if algebra.is_ad_nilpotent(amb):
                raise InternalInvariantError("grid witness is nilpotent in the ambient algebra")
            return RefutationReport(trace, DirectWitness(expr, amb, len(trace) - 1))

        k_sub = step.k
        if k_sub.dim == 0:
            raise InternalInvariantError("extreme-layer subalgebra collapsed to zero")
        induced = k_sub.induced()
        if induced.is_semisimple():
            new_embed = [to_ambient(row) for row in k_sub.basis_rows]
            new_basis = []
            for v in step.extracted_basis:
                coords = k_sub.coords_of(v)
                if coords is None:
                    raise InternalInvariantError("extracted element fell outside its subalgebra")
                new_basis.append(tuple(coords))
            current = induced
            embed = new_embed
            local_basis = new_basis
            continue

        centre = induced.center()
        if centre.dim == 0:
            raise InternalInvariantError("non-semisimple reductive subalgebra with no centre")
        for row in centre.basis_rows:
            in_current = k_sub.to_ambient(row)
            amb = to_ambient(in_current)
            if not algebra.is_ad_nilpotent(amb):
                return RefutationReport(trace, StructuralContradiction(amb, len(trace)))
        raise InternalInvariantError("central elements of the terminal subalgebra are all nilpotent")
