"""Command-line front end.

JSON in, JSON out (``--format text`` for a human-readable rendering); all
output is deterministic for byte-level diffing.  Exit codes: 0 for a
completed computation whatever the mathematical verdict, 2 for malformed
input, 3 for violated preconditions or exceeded caps.
"""

from __future__ import annotations

import argparse
import sys

from . import brackets, catalog, io, semisimple
from .algebra import LOWER_CENTRAL, DERIVED
from .classify import classify_tuple, cross_check, symbolic_generators, tuple_variable_names
from .errors import CapExceeded, InputFormatError, PreconditionError


def _parent():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("json", "text"), default="json", help="output format (default: json)")
    p.add_argument("--out", metavar="FILE", help="write the result to FILE instead of stdout")
    return p


def build_parser():
    parser = argparse.ArgumentParser(
        prog="liebrackets",
        description="Exact Lie algebra toolkit: iterated brackets, nilpotency witnesses, Borel/nilradical classification.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)
    parent = _parent()

    p = sub.add_parser("validate", parents=[parent], help="check the Jacobi identity of an algebra file")
    p.add_argument("algebra")

    p = sub.add_parser("catalog", parents=[parent], help="emit a standard algebra")
    p.add_argument("family", choices=sorted(catalog.FAMILIES))
    p.add_argument("param", type=int)

    p = sub.add_parser("series", parents=[parent], help="lower central or derived series")
    p.add_argument("--algebra", required=True)
    p.add_argument("--kind", choices=("lower", "derived"), required=True)

    p = sub.add_parser("classify", parents=[parent], help="common nilradical / Borel / neither for a tuple")
    p.add_argument("--algebra", required=True)
    p.add_argument("--tuple", dest="tuple_file", required=True)
    p.add_argument("--witness-depth", type=int, default=4, help="depth cap for the neither-witness search (default: 4)")

    p = sub.add_parser("witness", parents=[parent], help="search for a non-nilpotent iterated bracket value")
    p.add_argument("--algebra", required=True)
    p.add_argument("--tuple", dest="tuple_file", required=True)
    p.add_argument("--max-depth", type=int, default=4, help="search depth cap (default: 4)")

    p = sub.add_parser("very-nilpotent", parents=[parent], help="decide and probe the very nilpotent basis property")
    p.add_argument("--algebra", required=True)
    p.add_argument("--tuple", dest="tuple_file", required=True)
    p.add_argument("--check-depth", type=int, default=4, help="witness search depth (default: 4)")

    p = sub.add_parser("jm", parents=[parent], help="complete a nilpotent element to an sl2-triple")
    p.add_argument("--algebra", required=True)
    p.add_argument("--element", required=True)

    p = sub.add_parser("grading", parents=[parent], help="integer eigenspace grading of ad(h)")
    p.add_argument("--algebra", required=True)
    p.add_argument("--h", dest="h_file", required=True)

    p = sub.add_parser("refute-engel", parents=[parent], help="refute very-nilpotency of a spanning tuple")
    p.add_argument("--algebra", required=True)
    p.add_argument("--basis", required=True)

    p = sub.add_parser("count-brackets", parents=[parent], help="exact count of bracket expressions")
    p.add_argument("--arity", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="count expressions of exactly this depth")
    mode.add_argument("--cumulative", action="store_true", help="count expressions up to this depth (default)")

    p = sub.add_parser("gen-export", parents=[parent], help="export invariant generator polynomials")
    p.add_argument("--algebra", required=True)
    p.add_argument("--arity", type=int, required=True)
    p.add_argument("--min-depth", type=int, default=1, help="lowest expression depth (default: 1)")
    p.add_argument("--max-depth", type=int, required=True)

    p = sub.add_parser("cross-check", parents=[parent], help="compare classification against invariant vanishing")
    p.add_argument("--algebra", required=True)
    p.add_argument("--tuple", dest="tuple_file", required=True)
    p.add_argument("--depth", type=int, default=4, help="closure depth for the comparison (default: 4)")

    return parser


def _load_algebra(path):
    return io.algebra_from_json(io.load_json(path))


def _emit(args, payload, text_lines=None):
    if args.format == "text" and text_lines is not None:
        body = "\n".join(text_lines) + "\n"
    else:
        body = io.dumps_canonical(payload)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def _run(args):
    if args.verb == "validate":
        algebra = _load_algebra(args.algebra)
        failures = algebra.validate()
        payload = io.validation_to_json(failures)
        lines = [f"jacobi: {payload['jacobi']}"]
        for f in failures:
            lines.append(f"triple ({f.i},{f.j},{f.k}) defect {io.vector_to_json(f.defect)}")
        _emit(args, payload, lines)

    elif args.verb == "catalog":
        algebra = catalog.make(args.family, args.param)
        _emit(args, io.algebra_to_json(algebra))

    elif args.verb == "series":
        algebra = _load_algebra(args.algebra)
        kind = LOWER_CENTRAL if args.kind == "lower" else DERIVED
        terms = algebra.series(kind)
        payload = io.series_to_json(kind, terms)
        _emit(args, payload, [f"dims: {' '.join(str(t.dim) for t in terms)}"])

    elif args.verb == "classify":
        algebra = _load_algebra(args.algebra)
        elements = io.tuple_from_json(io.load_json(args.tuple_file), algebra)
        report = classify_tuple(algebra, elements, witness_depth_cap=args.witness_depth)
        payload = io.classify_report_to_json(report)
        lines = [f"verdict: {report.verdict}", f"k dim: {report.k.dim}"]
        if report.witness:
            lines.append(f"witness: {report.witness[0].text()}")
        _emit(args, payload, lines)

    elif args.verb == "witness":
        algebra = _load_algebra(args.algebra)
        elements = io.tuple_from_json(io.load_json(args.tuple_file), algebra)
        found = brackets.find_non_nilpotent_witness(algebra, elements, args.max_depth)
        payload = io.witness_to_json(found)
        lines = ["witness: none" if found is None else f"witness: {found[0].text()}"]
        _emit(args, payload, lines)

    elif args.verb == "very-nilpotent":
        algebra = _load_algebra(args.algebra)
        elements = io.tuple_from_json(io.load_json(args.tuple_file), algebra)
        verdict = brackets.is_very_nilpotent_basis(algebra, elements, args.check_depth)
        payload = io.very_nilpotent_to_json(verdict)
        lines = [
            f"theorem verdict: {'very nilpotent basis' if verdict.theorem_verdict else 'not a very nilpotent basis'}",
            "search witness: "
            + ("none" if verdict.witness is None else verdict.witness[0].text()),
        ]
        _emit(args, payload, lines)

    elif args.verb == "jm":
        algebra = _load_algebra(args.algebra)
        y = io.element_from_json(io.load_json(args.element), algebra)
        triple = semisimple.jacobson_morozov(algebra, y)
        _emit(args, io.triple_to_json(triple))

    elif args.verb == "grading":
        algebra = _load_algebra(args.algebra)
        h = io.element_from_json(io.load_json(args.h_file), algebra)
        grading = semisimple.characteristic_grading(algebra, h)
        payload = io.grading_to_json(grading)
        lines = ["weights: " + " ".join(str(w) for w in grading.weights)]
        _emit(args, payload, lines)

    elif args.verb == "refute-engel":
        algebra = _load_algebra(args.algebra)
        basis = io.tuple_from_json(io.load_json(args.basis), algebra)
        report = semisimple.engel_refuter(algebra, basis)
        payload = io.refutation_to_json(report)
        out = payload["outcome"]
        lines = [f"outcome: {out['kind']}"]
        if out["kind"] == "direct_witness":
            lines.append(f"expr: {out['expr']}")
        _emit(args, payload, lines)

    elif args.verb == "count-brackets":
        mode = "exact" if args.exact else "cumulative"
        value = brackets.count_exprs(args.arity, args.depth, mode)
        payload = io.count_to_json(args.arity, args.depth, mode, value)
        _emit(args, payload, [str(value)])

    elif args.verb == "gen-export":
        algebra = _load_algebra(args.algebra)
        gens = symbolic_generators(algebra, args.arity, args.min_depth, args.max_depth)
        names = tuple_variable_names(algebra, args.arity)
        payload = io.generators_to_json(gens, names)
        lines = [f"{g['expr']} coeff {g['coeff_index']}: {g['text']}" for g in payload]
        _emit(args, payload, lines or ["no nonzero generators"])

    elif args.verb == "cross-check":
        algebra = _load_algebra(args.algebra)
        elements = io.tuple_from_json(io.load_json(args.tuple_file), algebra)
        report = cross_check(algebra, elements, depth=args.depth)
        payload = io.cross_check_to_json(report)
        lines = [
            f"verdict: {report.verdict}",
            f"consistent: {'yes' if report.consistent else 'no'}",
        ]
        _emit(args, payload, lines)

    else:  # pragma: no cover - argparse enforces the verb set
        raise InputFormatError(f"unknown verb {args.verb!r}")
    return 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except InputFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (PreconditionError, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
