"""Command-line front end: ``gentle-hh1 <command> ...``.

Exit codes: 0 success, 1 usage error, 2 invalid presentation, 3 internal
invariant failure (oracle mismatch, Jacobi violation, ...).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from pathlib import Path as FsPath

from .bases import summand_dims, trivial_extension_hh1_basis
from .config import CorpusConfig
from .coords import coordinates
from .corpus import enumerate_corpus
from .linalg import Field
from .oracle import alt_space, center_dimension, hh1_dual_quotient, hh1_quotient
from .quiver import GentlePresentation, MalformedQuiver, PresentationError, presentation
from .ribbon import NoAltFreeCut, admissible_cuts, find_alt_free_cut, ribbon_graph, trivial_extension_quiver

SCHEMA = 1
EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class InternalFailure(Exception):
    def __init__(self, message: str, report: dict | None = None):
        super().__init__(message)
        self.report = report


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# --- input ----------------------------------------------------------------------


def parse_document(doc: dict) -> tuple[GentlePresentation, Field | None]:
    """Build a presentation from the JSON input document."""
    if not isinstance(doc, dict):
        raise MalformedQuiver("input document must be a JSON object")
    try:
        vertices = [str(v) for v in doc["vertices"]]
        arrows = [(a["name"], a["source"], a["target"]) for a in doc.get("arrows", [])]
        relations = [tuple(r) for r in doc.get("relations", [])]
    except (KeyError, TypeError) as exc:
        raise MalformedQuiver(f"missing or malformed field: {exc}") from None
    if any(len(r) != 2 for r in relations):
        raise MalformedQuiver("relations must be [first, second] pairs")
    field = None
    if "field" in doc:
        try:
            field = Field.parse(doc["field"])
        except ValueError as exc:
            raise MalformedQuiver(str(exc)) from None
    return presentation(vertices, arrows, relations), field


def presentation_to_document(G: GentlePresentation, field: Field | None = None) -> dict:
    q = G.quiver
    doc = {
        "vertices": list(q.vertices),
        "arrows": [{"name": a.name, "source": q.vertices[a.source], "target": q.vertices[a.target]} for a in q.arrows],
        "relations": [[q.arrows[x].name, q.arrows[y].name] for x, y in sorted(G.relations)],
    }
    if field is not None:
        doc["field"] = field.to_json()
    return doc


def _load(args) -> tuple[GentlePresentation, Field, dict]:
    try:
        text = FsPath(args.file).read_text() if args.file != "-" else sys.stdin.read()
    except OSError as exc:
        raise UsageError(str(exc)) from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedQuiver(f"invalid JSON: {exc}") from None
    G, doc_field = parse_document(doc)
    field = _resolve_field(args.field, doc_field)
    digest = hashlib.sha256(json.dumps(doc, sort_keys=True, ensure_ascii=False).encode()).hexdigest()
    return G, field, {"sha256": digest}


def _resolve_field(flag: str | None, doc_field: Field | None) -> Field:
    """Precedence: --field, then the document, then $HH1_FIELD, then Q."""
    try:
        if flag:
            return Field.parse(flag)
        if doc_field is not None:
            return doc_field
        return Field.parse(os.environ.get("HH1_FIELD", "Q"))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(report: dict, args) -> None:
    sys.stdout.write(json.dumps(report, indent=2, ensure_ascii=False, sort_keys=True) + "\n")


# --- commands -------------------------------------------------------------------


def cmd_validate(args) -> int:
    try:
        G, field, inp = _load(args)
    except PresentationError as exc:
        _emit({"schema": SCHEMA, "command": "validate", "valid": False, "errors": [exc.to_json()]}, args)
        return EXIT_INVALID
    report = {
        "schema": SCHEMA,
        "command": "validate",
        "input": inp,
        "valid": True,
        "errors": [],
        "dimension": G.dimension(),
        "path_basis": [G.fmt(p) for p in G.path_basis],
        "maximal_paths": [G.fmt(p) for p in G.maximal_paths],
    }
    _emit(report, args)
    return EXIT_OK


def _oracle_dims(G: GentlePresentation, field: Field) -> dict:
    return {
        "Center": center_dimension(G, field),
        "H1Dual": hh1_dual_quotient(G, field).dimension,
        "H1": hh1_quotient(G, field).dimension,
        "Alt": len(alt_space(G, field)),
    }


def cmd_hh1(args) -> int:
    G, field, inp = _load(args)
    co = coordinates(G, field)
    dims = summand_dims(G, field)
    oracle = _oracle_dims(G, field)
    if args.of == "A":
        basis = co.h1_basis
        dims = {"H1": dims["H1"]}
        oracle = {"H1": oracle["H1"]}
    else:
        basis = trivial_extension_hh1_basis(G, field)
    match = dims == oracle
    report = {
        "schema": SCHEMA,
        "command": "hh1",
        "of": args.of,
        "input": inp,
        "field": field.label(),
        "basis": [b.to_json(G) | {"label": b.label(G)} for b in basis],
        "dimension": len(basis),
        "dims": dims,
        "oracle_dims": oracle,
        "match": match,
    }
    if args.format == "text":
        lines = [f"HH^1({args.of}) over {field.label()}: dim {len(basis)}"]
        lines += [f"  {b.summand:<7} {b.label(G)}" for b in basis]
        lines.append("  dims " + " ".join(f"{k}={v}" for k, v in dims.items()))
        lines.append("  oracle " + " ".join(f"{k}={v}" for k, v in oracle.items()) + f"  match={match}")
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        _emit(report, args)
    return EXIT_OK if match else EXIT_INTERNAL


def cmd_lie(args) -> int:
    from .lie import JacobiViolation, classify, structure_constants

    G, field, inp = _load(args)
    try:
        L = structure_constants(G, field, args.of)
        cls = classify(G, field)
    except JacobiViolation as exc:
        raise InternalFailure(f"Jacobi violation: {exc}") from None
    if args.csv:
        FsPath(args.csv).write_text(L.to_csv())
    key = "derived_A" if args.of == "A" else "derived_TA"
    derived = cls.series[key]
    lower = L.lower_central_series()
    report = {
        "schema": SCHEMA,
        "command": "lie",
        "of": args.of,
        "input": inp,
        "field": field.label(),
        "dimension": L.dim,
        "structure_constants": L.to_json(),
        "derived_series": derived.to_json(),
        "lower_central_series": lower.to_json(),
        "solvable": derived.terminated,
        "nilpotent": lower.terminated,
        "abelian": L.is_abelian(),
        "center_dimension": L.center_dim(),
        "classification": cls.to_json(),
    }
    _emit(report, args)
    return EXIT_OK


def cmd_ribbon(args) -> int:
    G, field, inp = _load(args)
    R = ribbon_graph(G)
    if args.dot:
        FsPath(args.dot).write_text(R.to_dot())
    if args.json:
        FsPath(args.json).write_text(R.to_json_string() + "\n")
    if not (args.dot or args.json):
        sys.stdout.write(R.to_json_string() + "\n")
    return EXIT_OK


def cmd_trivext(args) -> int:
    G, field, inp = _load(args)
    report = trivial_extension_quiver(G).to_json()
    report.update({"command": "trivext", "input": inp})
    _emit(report, args)
    return EXIT_OK


def _cut_json(cut, field: Field) -> dict:
    from .bases import alt_basis

    B = cut.algebra
    return {
        "angles": [list(a) for a in cut.angles],
        "algebra": presentation_to_document(B),
        "alt_dimension": len(alt_basis(B, field)),
        "kronecker": B.is_kronecker(),
        "nakayama_two_cycle": B.is_nakayama_two_cycle(),
    }


def cmd_cuts(args) -> int:
    G, field, inp = _load(args)
    R = ribbon_graph(G).unmark()
    report = {"schema": SCHEMA, "command": "cuts", "input": inp, "field": field.label()}
    if args.alt_free:
        try:
            report["cut"] = _cut_json(find_alt_free_cut(R, field), field)
        except NoAltFreeCut as exc:
            report["cut"] = None
            report["error"] = str(exc)
            _emit(report, args)
            return EXIT_INTERNAL
    else:
        report["cuts"] = [_cut_json(c, field) for c in admissible_cuts(R)]
    _emit(report, args)
    return EXIT_OK


def cmd_corpus(args) -> int:
    from .verify import CHECKS, run_checks

    try:
        cfg = CorpusConfig.from_strings(args.max_vertices, args.max_arrows, args.fields, args.checks)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    fields = cfg.field_objects
    groups = list(cfg.checks or CHECKS)
    unknown = set(groups) - set(CHECKS)
    if unknown:
        raise UsageError(f"unknown check groups {sorted(unknown)}")
    t0 = time.perf_counter()
    instances = list(enumerate_corpus(cfg.max_vertices, cfg.max_arrows))
    tallies = run_checks(instances, fields, groups)
    ok = all(t.failed == 0 for t in tallies.values())
    report = {
        "schema": SCHEMA,
        "command": "corpus",
        "bounds": {"max_vertices": args.max_vertices, "max_arrows": args.max_arrows},
        "fields": [f.label() for f in fields],
        "algebras": len(instances),
        "invariants": {
            name: {
                "passed": t.passed,
                "failed": t.failed,
                "exempt": t.exempt,
                "counterexamples": t.counterexamples,
                "exemptions": t.exemptions,
            }
            for name, t in tallies.items()
        },
        "all_passed": ok,
    }
    if args.list:
        report["instances"] = [name for name, _ in instances]
    if args.timing:
        report["seconds"] = round(time.perf_counter() - t0, 3)
    _emit(report, args)
    return EXIT_OK if ok else EXIT_INTERNAL


# --- entry point -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gentle-hh1", description="First Hochschild cohomology of gentle algebras and their trivial extensions.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def with_file(name, helptext):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("file", help="input JSON document, or - for stdin")
        sp.add_argument("--field", help="Q, F2, Fp:5 ... (overrides the document and $HH1_FIELD)")
        return sp

    with_file("validate", "check that the presentation is gentle").set_defaults(func=cmd_validate)
    sp = with_file("hh1", "bases and dimensions of HH^1(A) or HH^1(TA)")
    sp.add_argument("--of", choices=["A", "TA"], default="A")
    sp.add_argument("--format", choices=["json", "text"], default="json")
    sp.set_defaults(func=cmd_hh1)
    sp = with_file("lie", "structure constants, series and classification")
    sp.add_argument("--of", choices=["A", "TA"], default="A")
    sp.add_argument("--csv", metavar="PATH", help="also write structure constants as CSV")
    sp.set_defaults(func=cmd_lie)
    sp = with_file("ribbon", "marked ribbon graph (rotation-system JSON or DOT)")
    sp.add_argument("--dot", metavar="PATH")
    sp.add_argument("--json", metavar="PATH")
    sp.set_defaults(func=cmd_ribbon)
    with_file("trivext", "Brauer presentation of the trivial extension").set_defaults(func=cmd_trivext)
    sp = with_file("cuts", "admissible cuts of the Brauer graph of TA")
    sp.add_argument("--alt-free", action="store_true", help="only the first cut with Alt_B(DB) = 0")
    sp.set_defaults(func=cmd_cuts)

    sp = sub.add_parser("corpus", help="verify all invariants on small gentle presentations")
    sp.add_argument("--max-vertices", type=int, default=3)
    sp.add_argument("--max-arrows", type=int, default=4)
    sp.add_argument("--fields", default="Q,F2,F3")
    sp.add_argument("--checks", help="comma-separated subset of check groups")
    sp.add_argument("--list", action="store_true", help="include instance names")
    sp.add_argument("--timing", action="store_true", help="include wall-clock time (breaks byte-stability)")
    sp.set_defaults(func=cmd_corpus)
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"gentle-hh1: {exc}\n")
        return EXIT_USAGE
    except PresentationError as exc:
        _emit({"schema": SCHEMA, "command": args.command, "valid": False, "errors": [exc.to_json()]}, args)
        return EXIT_INVALID
    except InternalFailure as exc:
        sys.stderr.write(f"gentle-hh1: internal invariant failure: {exc}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
