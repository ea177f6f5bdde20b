"""File formats and canonical JSON serialization.

Rationals travel as decimal strings "p" or "p/q" with positive reduced
denominator.  All writers are deterministic: sorted keys, fixed list
orders, no timestamps, one trailing newline.  Readers reject unknown keys.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .algebra import LieAlgebra, Subalgebra
from .errors import InputFormatError

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str) or not _RATIONAL_RE.match(s):
        raise InputFormatError(f"not a rational string: {s!r}")
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            raise InputFormatError(f"zero denominator in {s!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def vector_to_json(v):
    return [format_rational(c) for c in v]


def vector_from_json(data, dim):
    if not isinstance(data, list) or len(data) != dim:
        raise InputFormatError(f"expected a list of {dim} rationals")
    return tuple(parse_rational(c) for c in data)


def _expect_keys(d, required, optional=(), what="object"):
    if not isinstance(d, dict):
        raise InputFormatError(f"{what} must be a JSON object")
    missing = [k for k in required if k not in d]
    if missing:
        raise InputFormatError(f"{what} is missing keys: {', '.join(missing)}")
    unknown = [k for k in d if k not in required and k not in optional]
    if unknown:
        raise InputFormatError(f"{what} has unknown keys: {', '.join(sorted(unknown))}")


# ---- algebra files --------------------------------------------------------


def algebra_to_json(algebra: LieAlgebra) -> dict:
    brackets = []
    for (i, j) in sorted(algebra.table):
        coeffs = algebra.table[(i, j)]
        brackets.append(
            {
                "i": i,
                "j": j,
                "coeffs": {str(k): format_rational(c) for k, c in sorted(coeffs.items())},
            }
        )
    return {
        "name": algebra.name,
        "dim": algebra.dim,
        "basis": list(algebra.basis_labels),
        "brackets": brackets,
    }


def algebra_from_json(data) -> LieAlgebra:
    _expect_keys(data, ("name", "dim", "basis", "brackets"), what="algebra file")
    name = data["name"]
    dim = data["dim"]
    if not isinstance(name, str) or not isinstance(dim, int) or dim < 0:
        raise InputFormatError("algebra file: bad name or dim")
    basis = data["basis"]
    if not isinstance(basis, list) or len(basis) != dim or not all(isinstance(b, str) for b in basis):
        raise InputFormatError("algebra file: basis must list one label per dimension")
    table = {}
    if not isinstance(data["brackets"], list):
        raise InputFormatError("algebra file: brackets must be a list")
    for entry in data["brackets"]:
        _expect_keys(entry, ("i", "j", "coeffs"), what="bracket entry")
        i, j = entry["i"], entry["j"]
        if not (isinstance(i, int) and isinstance(j, int) and 0 <= i < j < dim):
            raise InputFormatError(f"bracket entry needs 0 <= i < j < dim, got ({i},{j})")
        if (i, j) in table:
            raise InputFormatError(f"duplicate bracket entry for ({i},{j})")
        coeffs = entry["coeffs"]
        if not isinstance(coeffs, dict):
            raise InputFormatError("bracket coeffs must be an object")
        parsed = {}
        for ks, cs in coeffs.items():
            try:
                k = int(ks)
            except (TypeError, ValueError):
                raise InputFormatError(f"bad coefficient index {ks!r}") from None
            if not 0 <= k < dim:
                raise InputFormatError(f"coefficient index {k} out of range")
            parsed[k] = parse_rational(cs)
        table[(i, j)] = parsed
    return LieAlgebra(name, dim, basis, table)


def element_from_json(data, algebra) -> tuple:
    _expect_keys(data, ("coords",), what="element file")
    return vector_from_json(data["coords"], algebra.dim)


def element_to_json(v) -> dict:
    return {"coords": vector_to_json(v)}


def tuple_from_json(data, algebra):
    _expect_keys(data, ("elements",), what="tuple file")
    if not isinstance(data["elements"], list) or not data["elements"]:
        raise InputFormatError("tuple file: elements must be a non-empty list")
    return tuple(element_from_json(e, algebra) for e in data["elements"])


def tuple_to_json(elements) -> dict:
    return {"elements": [element_to_json(e) for e in elements]}


def load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path} is not valid JSON: {exc}") from None


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# ---- report serialization -------------------------------------------------


def subalgebra_to_json(sub: Subalgebra) -> dict:
    return {
        "dim": sub.dim,
        "closed": sub.closed,
        "basis": [vector_to_json(r) for r in sub.basis_rows],
    }


def validation_to_json(failures) -> dict:
    return {
        "jacobi": "ok" if not failures else "failed",
        "failures": [
            {"i": f.i, "j": f.j, "k": f.k, "defect": vector_to_json(f.defect)}
            for f in failures
        ],
    }


def series_to_json(kind, terms) -> dict:
    return {
        "kind": kind,
        "dims": [t.dim for t in terms],
        "terms": [subalgebra_to_json(t) for t in terms],
    }


def witness_to_json(found) -> dict:
    if found is None:
        return {"found": False}
    expr, value = found
    return {"found": True, "expr": expr.text(), "depth": expr.depth, "value": vector_to_json(value)}


def classify_report_to_json(report) -> dict:
    evidence = {}
    if report.verdict == "common_nilradical":
        evidence["nilpotency_class"] = report.nilpotency_class
    elif report.verdict == "common_borel":
        expr, value = report.non_nilpotent_entry
        evidence["non_nilpotent_depth1"] = {
            "expr": expr.text(),
            "value": vector_to_json(value),
        }
    else:
        evidence["derived_dims"] = report.derived_dims
        evidence["witness"] = witness_to_json(report.witness)
        evidence["witness_depth_cap"] = report.witness_depth_cap
    return {
        "verdict": report.verdict,
        "k_dim": report.k.dim,
        "k_basis": [vector_to_json(r) for r in report.k.basis_rows],
        "k_provenance": [e.text() for e in report.provenance],
        "evidence": evidence,
    }


def cross_check_to_json(report) -> dict:
    return {
        "verdict": report.verdict,
        "consistent": report.consistent,
        "depth": report.depth,
        "depth1_violations": [
            {"expr": e.text(), "value": vector_to_json(v)} for e, v in report.depth1_violations
        ],
        "deep_violation": (
            None
            if report.deep_violation is None
            else {
                "expr": report.deep_violation[0].text(),
                "depth": report.deep_violation[0].depth,
                "value": vector_to_json(report.deep_violation[1]),
            }
        ),
        "witness_beyond_cap": report.witness_beyond_cap,
        "closure_truncated": report.closure_truncated,
    }


def triple_to_json(triple) -> dict:
    return {
        "y": element_to_json(triple.y),
        "h": element_to_json(triple.h),
        "f": element_to_json(triple.f),
    }


def grading_to_json(grading) -> dict:
    return {
        "h": element_to_json(grading.h),
        "weights": list(grading.weights),
        "layers": [
            {
                "weight": w,
                "dim": grading.layers[w].dim,
                "basis": [vector_to_json(r) for r in grading.layers[w].basis_rows],
            }
            for w in grading.weights
        ],
    }


def very_nilpotent_to_json(verdict) -> dict:
    return {
        "theorem": {
            "is_basis": verdict.is_basis,
            "algebra_nilpotent": verdict.algebra_nilpotent,
            "verdict": verdict.theorem_verdict,
        },
        "search": {
            "check_depth": verdict.check_depth,
            "witness": witness_to_json(verdict.witness),
            "truncated": verdict.search_truncated,
        },
    }


def _embed_rows(step, rows):
    if step.ambient_embed is None:
        return [tuple(r) for r in rows]
    out = []
    for r in rows:
        total = None
        for c, row in zip(r, step.ambient_embed):
            scaled = tuple(c * x for x in row)
            total = scaled if total is None else tuple(a + b for a, b in zip(total, scaled))
        out.append(total if total is not None else ())
    return out


def refutation_to_json(report) -> dict:
    trace = []
    for step in report.trace:
        k_rows = _embed_rows(step, step.k.basis_rows)
        z_rows = _embed_rows(step, step.z_elements)
        trace.append(
            {
                "level_dim": step.algebra.dim,
                "top_weight": step.top_weight,
                "triple": triple_to_json(step.triple),
                "z": [vector_to_json(r) for r in z_rows],
                "k_dim": step.k.dim,
                "k_basis": [vector_to_json(r) for r in k_rows],
                "extracted_indices": [list(ix) for ix in step.extracted_indices],
                "non_nilpotent_indices": [list(ix) for ix in step.non_nilpotent_indices],
            }
        )
    outcome = report.outcome
    from .semisimple import DirectWitness

    if isinstance(outcome, DirectWitness):
        payload = {
            "kind": "direct_witness",
            "expr": outcome.expr.text(),
            "depth": outcome.expr.depth,
            "value": vector_to_json(outcome.value),
            "level": outcome.level,
        }
    else:
        payload = {
            "kind": "structural_contradiction",
            "element": vector_to_json(outcome.element),
            "level": outcome.level,
        }
    return {"outcome": payload, "trace": trace}


def multipoly_to_json(poly, names) -> dict:
    return {
        "vars": list(names),
        "terms": [
            {"exp": list(exps), "coeff": format_rational(c)} for exps, c in poly.sorted_terms()
        ],
    }


def generators_to_json(generators, names) -> list:
    return [
        {
            "expr": expr.text(),
            "depth": expr.depth,
            "coeff_index": i,
            "poly": multipoly_to_json(poly, names),
            "text": poly.text(names),
        }
        for expr, i, poly in generators
    ]


def count_to_json(arity, depth, mode, value) -> dict:
    return {"arity": arity, "depth": depth, "mode": mode, "count": str(value)}
