"""Iterated-bracket expressions in n slots: construction, enumeration,
exact counting, value closures, and the search for non-nilpotent values.

An expression is a leaf (slot projection, written ``y1..yn``) or a bracket
of two expressions, written ``[f,g]``.  Depth counts nesting: leaves have
depth 1 and a bracket has the maximum depth of its parts plus one.  The
grammar is raw: ``[f,g]`` and ``[g,f]`` are distinct and ``[f,f]`` is kept,
which is what the exact counting recurrence reproduces.
"""

from __future__ import annotations

from .errors import CapExceeded
from .linalg import vec_is_zero

ENUM_CAP = 10**7
LAYER_CAP = 10**5


class BracketExpr:
    __slots__ = ()

    def __str__(self):
        return self.text()


class Leaf(BracketExpr):
    __slots__ = ("index", "arity", "depth")

    def __init__(self, index, arity):
        if not 1 <= index <= arity:
            raise ValueError(f"leaf index {index} outside 1..{arity}")
        self.index = index
        self.arity = arity
        self.depth = 1

    def text(self):
        return f"y{self.index}"

    def key(self):
        return self.index

    def __eq__(self, other):
        return isinstance(other, Leaf) and (self.index, self.arity) == (other.index, other.arity)

    def __hash__(self):
        return hash((Leaf, self.index, self.arity))


class Node(BracketExpr):
    __slots__ = ("left", "right", "arity", "depth")

    def __init__(self, left, right):
        if left.arity != right.arity:
            raise ValueError("bracket parts have different arities")
        self.left = left
        self.right = right
        self.arity = left.arity
        self.depth = max(left.depth, right.depth) + 1

    def text(self):
        return f"[{self.left.text()},{self.right.text()}]"

    def key(self):
        return (self.left.key(), self.right.key())

    def __eq__(self, other):
        return isinstance(other, Node) and self.key() == other.key()

    def __hash__(self):
        return hash((Node, self.key()))


def depth(expr: BracketExpr) -> int:
    return expr.depth


def eval_expr(algebra, expr: BracketExpr, elements):
    """Value of the expression at the given tuple, via the algebra bracket."""
    if expr.arity != len(elements):
        raise ValueError(f"expression arity {expr.arity} != tuple length {len(elements)}")

    def rec(e):
        if isinstance(e, Leaf):
            return elements[e.index - 1]
        return algebra.bracket(rec(e.left), rec(e.right))

    return rec(expr)


def count_exprs(arity, depth, mode="cumulative"):
    """Exact number of expressions: all of depth <= d, or of depth exactly d.

    With A_0 = 0 and A_1 = n, the cumulative counts satisfy
    A_(d+1) = A_d + (A_d^2 - A_(d-1)^2): the new expressions of depth d+1
    are the ordered pairs whose maximal part depth is exactly d.
    """
    if arity < 1 or depth < 1:
        raise ValueError("arity and depth must be >= 1")
    prev, cur = 0, arity
    for _ in range(depth - 1):
        prev, cur = cur, cur + cur * cur - prev * prev
    if mode == "cumulative":
        return cur
    if mode == "exact":
        return cur - prev
    raise ValueError(f"unknown counting mode {mode!r}")


def enumerate_exprs(arity, max_depth, cap=ENUM_CAP):
    """Stream every expression of depth <= max_depth exactly once.

    Canonical order: ascending depth, then lexicographic by (left, right)
    in emission order.  Refuses up front when the cumulative count exceeds
    the cap, reporting the exact count.
    """
    total = count_exprs(arity, max_depth, "cumulative")
    if total > cap:
        raise CapExceeded(
            f"{total} expressions of arity {arity} up to depth {max_depth} exceed the cap {cap}",
            detail=total,
        )

    def stream():
        emitted = [Leaf(i, arity) for i in range(1, arity + 1)]
        yield from emitted
        for d in range(2, max_depth + 1):
            new = []
            for f in emitted:
                for g in emitted:
                    if max(f.depth, g.depth) == d - 1:
                        new.append(Node(f, g))
            yield from new
            emitted.extend(new)

    return stream()


class ValueClosure:
    """Distinct bracket values reachable from a tuple, layered by least depth.

    ``layers[k]`` (1-based via ``layer(k)``) lists (expr, value) pairs for
    every value first attained at depth exactly k, each with its canonical
    witnessing expression.  Zero is recorded once where first reached but
    never used as a bracket operand.
    """

    def __init__(self, arity, max_depth, layers, truncated=False):
        self.arity = arity
        self.max_depth = max_depth
        self.layers = layers
        self.truncated = truncated

    def layer(self, depth):
        return self.layers[depth - 1]

    def all_entries(self):
        for d, layer in enumerate(self.layers, start=1):
            for expr, value in layer:
                yield d, expr, value


def _closure_layers(algebra, elements, max_depth, layer_cap):
    """Yield closure layers one depth at a time (canonical order)."""
    arity = len(elements)
    seen = set()
    operands = []  # (expr, value, depth) for nonzero recorded values
    layer1 = []
    for idx, el in enumerate(elements):
        algebra._check(el)
        key = tuple(el)
        if key in seen:
            continue
        seen.add(key)
        expr = Leaf(idx + 1, arity)
        layer1.append((expr, tuple(el)))
        if not vec_is_zero(el):
            operands.append((expr, tuple(el), 1))
    yield layer1
    for d in range(2, max_depth + 1):
        new_layer = []
        snapshot = list(operands)
        for fa, va, da in snapshot:
            for fb, vb, db in snapshot:
                if max(da, db) != d - 1:
                    continue
                v = algebra.bracket(va, vb)
                key = tuple(v)
                if key in seen:
                    continue
                seen.add(key)
                expr = Node(fa, fb)
                new_layer.append((expr, v))
                if len(new_layer) > layer_cap:
                    raise CapExceeded(
                        f"value closure layer {d} exceeded the cap {layer_cap}",
                        detail=d,
                        partial=new_layer,
                    )
                if not vec_is_zero(v):
                    operands.append((expr, v, d))
        yield new_layer


def value_closure(algebra, elements, max_depth, layer_cap=LAYER_CAP):
    """Materialize all closure layers up to max_depth."""
    if max_depth < 1:
        raise ValueError("max_depth must be >= 1")
    layers = []
    try:
        for layer in _closure_layers(algebra, elements, max_depth, layer_cap):
            layers.append(layer)
    except CapExceeded as exc:
        exc.partial = ValueClosure(len(elements), max_depth, layers, truncated=True)
        raise
    return ValueClosure(len(elements), max_depth, layers)


def find_non_nilpotent_witness(algebra, elements, max_depth, layer_cap=LAYER_CAP, min_depth=1):
    """First recorded closure value (canonical order) that is not ad-nilpotent.

    Returns ``(expr, value)`` or None if every value up to max_depth is
    ad-nilpotent.  Layers are generated lazily, so a witness found at depth
    d is found identically for every larger depth bound.
    """
    for d, layer in enumerate(_closure_layers(algebra, elements, max_depth, layer_cap), start=1):
        if d < min_depth:
            continue
        for expr, value in layer:
            if vec_is_zero(value):
                continue
            if not algebra.is_ad_nilpotent(value):
                return expr, value
    return None


class VeryNilpotentVerdict:
    """Two independent answers about a candidate very nilpotent basis.

    ``theorem_verdict`` is the exact decision (tuple is a vector-space basis
    and the algebra is nilpotent).  The search fields report the bounded
    witness hunt: a witness refutes very-nilpotency outright, absence up to
    the depth cap corroborates it.
    """

    def __init__(self, is_basis, algebra_nilpotent, check_depth, witness, search_truncated=False):
        self.is_basis = is_basis
        self.algebra_nilpotent = algebra_nilpotent
        self.theorem_verdict = is_basis and algebra_nilpotent
        self.check_depth = check_depth
        self.witness = witness
        self.search_truncated = search_truncated


def is_very_nilpotent_basis(algebra, elements, check_depth, layer_cap=LAYER_CAP):
    from .linalg import rref_rows

    rank = len(rref_rows([list(e) for e in elements])) if elements else 0
    is_basis = len(elements) == algebra.dim and rank == algebra.dim
    nilpotent = algebra.is_nilpotent()
    witness = None
    truncated = False
    try:
        witness = find_non_nilpotent_witness(algebra, elements, check_depth, layer_cap)
    except CapExceeded:
        truncated = True
    return VeryNilpotentVerdict(is_basis, nilpotent, check_depth, witness, truncated)
