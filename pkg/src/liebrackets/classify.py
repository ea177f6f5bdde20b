"""Classification of n-tuples in a semisimple algebra.

A tuple generates a subalgebra k whose basis consists of iterated-bracket
values.  The verdicts: ``neither`` when k is not solvable, otherwise
``common_nilradical`` when every recorded basis value is ad-nilpotent in
the ambient algebra, otherwise ``common_borel``.  The invariant route to
the same answers evaluates the non-leading coefficients of the adjoint
characteristic polynomial on closure values; ``cross_check`` compares the
two.
"""

from __future__ import annotations

from fractions import Fraction

from .brackets import (
    Leaf,
    enumerate_exprs,
    find_non_nilpotent_witness,
    value_closure,
)
from .errors import CapExceeded, InternalInvariantError, PreconditionError
from .linalg import char_poly
from .multipoly import MultiPoly

COMMON_NILRADICAL = "common_nilradical"
COMMON_BOREL = "common_borel"
NEITHER = "neither"


def invariant_values(algebra, x):
    """Non-leading coefficients c_0..c_(dim-1) of det(tI - ad x).

    All of them vanish exactly when x is ad-nilpotent, so they cut out the
    nilpotent cone.
    """
    algebra._check(x)
    coeffs = char_poly(algebra.ad(x)).coeffs
    full = list(coeffs) + [Fraction(0)] * (algebra.dim + 1 - len(coeffs))
    return tuple(full[: algebra.dim])


def generator_value(algebra, expr, elements, coeff_index):
    """One invariant coefficient evaluated on one bracket expression."""
    from .brackets import eval_expr

    if not 0 <= coeff_index < algebra.dim:
        raise ValueError(f"coefficient index {coeff_index} outside 0..{algebra.dim - 1}")
    return invariant_values(algebra, eval_expr(algebra, expr, elements))[coeff_index]


class ClassifyReport:
    """Evidence-carrying outcome of the tuple classification."""

    __slots__ = (
        "verdict",
        "k",
        "provenance",
        "nilpotency_class",
        "non_nilpotent_entry",
        "witness",
        "witness_depth_cap",
        "derived_dims",
    )

    def __init__(self, **kw):
        for name in self.__slots__:
            setattr(self, name, kw.get(name))


def classify_tuple(algebra, elements, witness_depth_cap=4) -> ClassifyReport:
    """Decide common-nilradical / common-Borel / neither for a tuple.

    ``neither`` carries the derived-series dimensions of k as the
    authoritative certificate plus, when found within the depth cap, a
    depth >= 2 bracket expression with non-nilpotent value.
    """
    if not algebra.is_semisimple():
        raise PreconditionError("classification is defined inside a semisimple algebra")
    k, provenance = algebra.generated_subalgebra(elements)
    induced = k.induced()
    derived = induced.series("derived")
    derived_dims = [t.dim for t in derived]
    solvable = derived_dims[-1] == 0
    if not solvable:
        witness = None
        try:
            witness = find_non_nilpotent_witness(
                algebra, elements, witness_depth_cap, min_depth=2
            )
        except CapExceeded:
            witness = None
        return ClassifyReport(
            verdict=NEITHER,
            k=k,
            provenance=provenance,
            witness=witness,
            witness_depth_cap=witness_depth_cap,
            derived_dims=derived_dims,
        )
    for expr, row in zip(provenance, k.basis_rows):
        if not algebra.is_ad_nilpotent(row):
            if expr.depth != 1:
                raise InternalInvariantError(
                    "solvable subalgebra with a non-nilpotent deep bracket value"
                )
            return ClassifyReport(
                verdict=COMMON_BOREL,
                k=k,
                provenance=provenance,
                non_nilpotent_entry=(expr, row),
                witness_depth_cap=witness_depth_cap,
                derived_dims=derived_dims,
            )
    lower = induced.series("lower_central")
    if lower[-1].dim != 0:
        raise InternalInvariantError("all-nilpotent solvable subalgebra is not nilpotent")
    return ClassifyReport(
        verdict=COMMON_NILRADICAL,
        k=k,
        provenance=provenance,
        nilpotency_class=sum(1 for t in lower if t.dim > 0),
        witness_depth_cap=witness_depth_cap,
        derived_dims=derived_dims,
    )


class CrossCheckReport:
    __slots__ = (
        "verdict",
        "consistent",
        "depth",
        "depth1_violations",
        "deep_violation",
        "witness_beyond_cap",
        "closure_truncated",
    )

    def __init__(self, **kw):
        for name in self.__slots__:
            setattr(self, name, kw.get(name))


def cross_check(algebra, elements, depth=4) -> CrossCheckReport:
    """Compare the structural verdict against invariant vanishing.

    Evaluates every closure value up to the given depth: the nilradical
    verdict demands vanishing from depth 1, the Borel verdict a depth-1
    violation with vanishing from depth 2, and ``neither`` a deep violation
    within the cap (otherwise it is flagged, not failed).
    """
    report = classify_tuple(algebra, elements, witness_depth_cap=depth)
    truncated = False
    try:
        closure = value_closure(algebra, elements, depth)
    except CapExceeded as exc:
        closure = exc.partial
        truncated = True
    depth1 = []
    deep = None
    for d, expr, value in closure.all_entries():
        vanishes = not any(invariant_values(algebra, value))
        if vanishes:
            continue
        if d == 1:
            depth1.append((expr, value))
        elif deep is None:
            deep = (expr, value)
    verdict = report.verdict
    beyond_cap = False
    if verdict == COMMON_NILRADICAL:
        consistent = not depth1 and deep is None
    elif verdict == COMMON_BOREL:
        consistent = bool(depth1) and deep is None
    else:
        consistent = True
        beyond_cap = deep is None
    return CrossCheckReport(
        verdict=verdict,
        consistent=consistent,
        depth=depth,
        depth1_violations=depth1,
        deep_violation=deep,
        witness_beyond_cap=beyond_cap,
        closure_truncated=truncated,
    )


# ---------------------------------------------------------------------------
# symbolic generator export
# ---------------------------------------------------------------------------

SYMBOLIC_SIZE_CAP = 12


def tuple_variable_names(algebra, arity):
    """One indeterminate per tuple coordinate, named from the basis labels."""
    if arity == 1:
        return [f"x_{lab}" for lab in algebra.basis_labels]
    return [f"x{j + 1}_{lab}" for j in range(arity) for lab in algebra.basis_labels]


def _symbolic_tuple(algebra, arity):
    n = algebra.dim * arity
    return [
        [MultiPoly.variable(n, j * algebra.dim + b) for b in range(algebra.dim)]
        for j in range(arity)
    ]


def _symbolic_bracket(algebra, nvars, xs, ys):
    out = [MultiPoly.zero(nvars) for _ in range(algebra.dim)]
    for (i, j), coeffs in algebra.table.items():
        f = xs[i] * ys[j] - xs[j] * ys[i]
        if f.is_zero():
            continue
        for k, c in coeffs.items():
            out[k] = out[k] + f.scale(c)
    return out


def _symbolic_ad(algebra, nvars, xs):
    n = algebra.dim
    grid = [[MultiPoly.zero(nvars) for _ in range(n)] for _ in range(n)]
    for (i, j), coeffs in algebra.table.items():
        for k, c in coeffs.items():
            grid[k][j] = grid[k][j] + xs[i].scale(c)
            grid[k][i] = grid[k][i] - xs[j].scale(c)
    return grid


def _symbolic_charpoly_coeffs(nvars, grid):
    """Non-leading coefficients of det(tI - M) for a polynomial matrix.

    Same trace recurrence as the numeric path; divisions are by the
    integers 1..n only, hence exact.
    """
    n = len(grid)
    bmat = [
        [MultiPoly.const(nvars, 1) if i == j else MultiPoly.zero(nvars) for j in range(n)]
        for i in range(n)
    ]
    cs = []
    for k in range(1, n + 1):
        amat = [
            [
                _poly_dot(grid[i], [bmat[t][j] for t in range(n)])
                for j in range(n)
            ]
            for i in range(n)
        ]
        tr = MultiPoly.zero(nvars)
        for i in range(n):
            tr = tr + amat[i][i]
        ck = tr.scale(Fraction(1, k))
        cs.append(ck)
        if k < n:
            for i in range(n):
                amat[i][i] = amat[i][i] - ck
            bmat = amat
    coeffs = [MultiPoly.zero(nvars)] * n
    for k in range(1, n + 1):
        coeffs[n - k] = -cs[k - 1]
    return coeffs


def _poly_dot(row, col):
    acc = None
    for a, b in zip(row, col):
        p = a * b
        acc = p if acc is None else acc + p
    return acc


def symbolic_generators(algebra, arity, depth_min, depth_max):
    """Fully expanded invariant polynomials p_i of bracket expressions.

    For every expression with depth in [depth_min, depth_max] and every
    coefficient index, the polynomial in the tuple coordinates obtained by
    composing the invariant with the expression; identically zero
    polynomials are dropped.  Gated to small cases.
    """
    if algebra.dim * arity > SYMBOLIC_SIZE_CAP:
        raise PreconditionError(
            f"symbolic export is capped at dim*arity <= {SYMBOLIC_SIZE_CAP}"
        )
    if depth_min < 1 or depth_max < depth_min:
        raise ValueError("need 1 <= depth_min <= depth_max")
    nvars = algebra.dim * arity
    sym_tuple = _symbolic_tuple(algebra, arity)
    cache = {}

    def sym_value(expr):
        key = expr.key()
        if key in cache:
            return cache[key]
        if isinstance(expr, Leaf):
            val = sym_tuple[expr.index - 1]
        else:
            val = _symbolic_bracket(algebra, nvars, sym_value(expr.left), sym_value(expr.right))
        cache[key] = val
        return val

    out = []
    for expr in enumerate_exprs(arity, depth_max):
        if expr.depth < depth_min:
            continue
        grid = _symbolic_ad(algebra, nvars, sym_value(expr))
        coeffs = _symbolic_charpoly_coeffs(nvars, grid)
        for i, poly in enumerate(coeffs):
            if not poly.is_zero():
                out.append((expr, i, poly))
    return out
