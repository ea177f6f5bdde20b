"""Exact-arithmetic Lie algebra toolkit.

Structure-constant algebras over the rationals, the iterated-bracket
grammar with exact counting and value closures, sl2-triples and integer
gradings, and the decision procedure classifying n-tuples as lying in a
common nilradical, a common Borel subalgebra, or neither.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .algebra import LieAlgebra, Subalgebra
from .brackets import (
    BracketExpr,
    Leaf,
    Node,
    ValueClosure,
    count_exprs,
    depth,
    enumerate_exprs,
    eval_expr,
    find_non_nilpotent_witness,
    is_very_nilpotent_basis,
    value_closure,
)
from .catalog import make as catalog_make
from .classify import (
    ClassifyReport,
    classify_tuple,
    cross_check,
    generator_value,
    invariant_values,
    symbolic_generators,
)
from .errors import CapExceeded, InputFormatError, PreconditionError, ToolkitError
from .linalg import (
    Matrix,
    Polynomial,
    char_poly,
    is_squarefree,
    mat_kernel,
    mat_rref,
    min_poly,
    solve_linear,
)
from .multipoly import MultiPoly
from .semisimple import (
    Grading,
    RefutationReport,
    Sl2Triple,
    characteristic_grading,
    descent_step,
    engel_refuter,
    extreme_bracket_subalgebra,
    is_ad_semisimple,
    is_reductive_in,
    jacobson_morozov,
    projected_nilpotency_pair,
)

__version__ = "0.1.0"

__all__ = [
    "BracketExpr",
    "CapExceeded",
    "ClassifyReport",
    "Grading",
    "InputFormatError",
    "KERNEL_BACKEND",
    "Leaf",
    "LieAlgebra",
    "Matrix",
    "MultiPoly",
    "Node",
    "Polynomial",
    "PreconditionError",
    "RefutationReport",
    "Sl2Triple",
    "Subalgebra",
    "ToolkitError",
    "ValueClosure",
    "catalog_make",
    "char_poly",
    "characteristic_grading",
    "classify_tuple",
    "count_exprs",
    "cross_check",
    "depth",
    "descent_step",
    "engel_refuter",
    "enumerate_exprs",
    "eval_expr",
    "extreme_bracket_subalgebra",
    "find_non_nilpotent_witness",
    "generator_value",
    "invariant_values",
    "is_ad_semisimple",
    "is_reductive_in",
    "is_squarefree",
    "is_very_nilpotent_basis",
    "jacobson_morozov",
    "mat_kernel",
    "mat_rref",
    "min_poly",
    "projected_nilpotency_pair",
    "solve_linear",
    "symbolic_generators",
    "value_closure",
]
