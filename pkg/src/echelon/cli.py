"""Command-line surface: parse matrices and systems from files, run the
toolkit operations, and print deterministic plain text (or the same data as
JSON). Exit status is 0 for success/true verdicts, 1 for false verdicts, and
2 for usage, parse, or data errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import EchelonError, ParseError
from .gauche import gauche_rref
from .matrices import Matrix, Vector
from .nullspace import graph_relations, null_basis
from .rowops import equivalence_script, format_op, rref_violation
from .scalars import GF, QQ, FieldSpec, parse_scalar
from .systems import Affine, Inconsistent, LinearSystem, row_equivalent, solve, solution_equivalent


def parse_matrix(text: str, field: FieldSpec) -> Matrix:
    """One matrix row per nonempty line of whitespace-separated scalar
    literals; `#` starts a comment. All rows must have the same length."""
    rows: list[list] = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            row = [parse_scalar(tok, field) for tok in line.split()]
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(f"line {lineno}: expected {width} entries, got {len(row)}")
        rows.append(row)
    if not rows:
        raise ParseError("no matrix rows in input")
    return Matrix.from_rows(rows, field)


def parse_system(text: str, field: FieldSpec) -> LinearSystem:
    """Augmented format: a matrix row, a lone `|` token, then one
    right-hand-side entry, per line."""
    coeff_rows: list[list] = []
    rhs_entries: list = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens.count("|") != 1:
            raise ParseError(f"line {lineno}: expected exactly one '|' separator")
        cut = tokens.index("|")
        left, right = tokens[:cut], tokens[cut + 1 :]
        if not left:
            raise ParseError(f"line {lineno}: empty coefficient row")
        if len(right) != 1:
            raise ParseError(f"line {lineno}: expected one right-hand-side entry")
        try:
            row = [parse_scalar(tok, field) for tok in left]
            rhs = parse_scalar(right[0], field)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(f"line {lineno}: expected {width} entries, got {len(row)}")
        coeff_rows.append(row)
        rhs_entries.append(rhs)
    if not coeff_rows:
        raise ParseError("no system rows in input")
    return LinearSystem(
        Matrix.from_rows(coeff_rows, field), Vector(tuple(rhs_entries), field)
    )


def format_matrix(m: Matrix) -> str:
    return str(m)


def format_vector(v: Vector) -> str:
    return str(v)


def _matrix_json(m: Matrix) -> list[list[str]]:
    return [[str(m.entry(i, j)) for j in range(1, m.cols + 1)] for i in range(1, m.rows + 1)]


def _vector_json(v: Vector) -> list[str]:
    return [str(e) for e in v.entries]


def _parse_field_flag(flag: str) -> FieldSpec:
    if flag.lower() == "q":
        return QQ
    if flag.lower().startswith("gf:"):
        try:
            p = int(flag[3:])
        except ValueError:
            raise ParseError(f"bad field flag {flag!r}: modulus must be an integer") from None
        return GF(p)
    raise ParseError(f"bad field flag {flag!r}: expected 'q' or 'gf:<p>'")


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _cmd_rref(args, field) -> tuple[int, str]:
    m = parse_matrix(_read(args.path), field)
    res = gauche_rref(m)
    if args.fmt == "json":
        return 0, json.dumps({"rref": _matrix_json(res.rref)})
    return 0, format_matrix(res.rref)


def _cmd_pivots(args, field) -> tuple[int, str]:
    m = parse_matrix(_read(args.path), field)
    pivots = gauche_rref(m).pivot_set
    if args.fmt == "json":
        return 0, json.dumps({"pivots": list(pivots)})
    return 0, " ".join(str(i) for i in pivots)


def _cmd_basis(args, field) -> tuple[int, str]:
    m = parse_matrix(_read(args.path), field)
    indices = gauche_rref(m).pivot_set
    columns = [m.column(j) for j in indices]
    if args.fmt == "json":
        return 0, json.dumps(
            {"indices": list(indices), "columns": [_vector_json(c) for c in columns]}
        )
    return 0, "\n".join(format_vector(c) for c in columns)


def _cmd_null(args, field) -> tuple[int, str]:
    m = parse_matrix(_read(args.path), field)
    nb = null_basis(m)
    if args.fmt == "json":
        return 0, json.dumps(
            {"free": list(nb.free_indices), "basis": [_vector_json(v) for v in nb.basis]}
        )
    return 0, "\n".join(format_vector(v) for v in nb.basis)


def _cmd_graph(args, field) -> tuple[int, str]:
    m = parse_matrix(_read(args.path), field)
    rel = graph_relations(m)
    if args.fmt == "json":
        return 0, json.dumps(
            {
                "free": list(rel.free_indices),
                "relations": [
                    {"pivot": pivot, "coefficients": [str(c) for c in coeffs]}
                    for pivot, coeffs in rel.pivot_exprs
                ],
            }
        )
    return 0, "\n".join(rel.lines())


def _cmd_check(args, field) -> tuple[int, str]:
    m = parse_matrix(_read(args.path), field)
    violated = rref_violation(m)
    if args.fmt == "json":
        payload = {"rref": violated is None}
        if violated is not None:
            payload["violated"] = violated
        return (0 if violated is None else 1), json.dumps(payload)
    if violated is None:
        return 0, "RREF"
    return 1, f"NOT RREF: {violated}"


def _cmd_equiv(args, field) -> tuple[int, str]:
    a = parse_matrix(_read(args.path_a), field)
    b = parse_matrix(_read(args.path_b), field)
    verdict = row_equivalent(a, b)
    if args.fmt == "json":
        return (0 if verdict else 1), json.dumps({"row_equivalent": verdict})
    return (0, "ROW-EQUIVALENT") if verdict else (1, "NOT ROW-EQUIVALENT")


def _cmd_script(args, field) -> tuple[int, str]:
    m = parse_matrix(_read(args.path), field)
    ops = equivalence_script(m)
    if args.fmt == "json":
        return 0, json.dumps({"ops": [format_op(op) for op in ops]})
    return 0, "\n".join(format_op(op) for op in ops)


def _cmd_solve(args, field) -> tuple[int, str]:
    system = parse_system(_read(args.path), field)
    sol = solve(system)
    if isinstance(sol, Inconsistent):
        if args.fmt == "json":
            return 1, json.dumps({"consistent": False})
        return 1, "INCONSISTENT"
    assert isinstance(sol, Affine)
    if args.fmt == "json":
        return 0, json.dumps(
            {
                "consistent": True,
                "particular": _vector_json(sol.particular),
                "basis": [_vector_json(v) for v in sol.homogeneous.basis],
            }
        )
    lines = [f"particular: {format_vector(sol.particular)}"]
    lines.extend(f"homogeneous: {format_vector(v)}" for v in sol.homogeneous.basis)
    return 0, "\n".join(lines)


def _cmd_syseq(args, field) -> tuple[int, str]:
    a = parse_system(_read(args.path_a), field)
    b = parse_system(_read(args.path_b), field)
    verdict = solution_equivalent(a, b)
    if args.fmt == "json":
        return (0 if verdict else 1), json.dumps({"solution_equivalent": verdict})
    return (0, "SOLUTION-EQUIVALENT") if verdict else (1, "NOT SOLUTION-EQUIVALENT")


_ONE_INPUT = {
    "rref": (_cmd_rref, "print the reduced row echelon form"),
    "pivots": (_cmd_pivots, "print the pivot column indices"),
    "basis": (_cmd_basis, "print the column-space basis columns of the input"),
    "null": (_cmd_null, "print a null-space basis, one vector per line"),
    "graph": (_cmd_graph, "print pivot variables as expressions in the free variables"),
    "check": (_cmd_check, "report RREF or the first violated condition"),
    "script": (_cmd_script, "print a row-operation log reducing the input"),
    "solve": (_cmd_solve, "solve an augmented system (rows like 'a b c | d')"),
}

_TWO_INPUT = {
    "equiv": (_cmd_equiv, "decide row equivalence of two matrices"),
    "syseq": (_cmd_syseq, "decide solution equivalence of two consistent systems"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--field",
        default="q",
        metavar="FIELD",
        help="scalar field: 'q' for rationals (default), 'gf:<p>' for a prime field",
    )
    common.add_argument(
        "--format",
        dest="fmt",
        choices=("plain", "json"),
        default="plain",
        help="output format (default plain)",
    )
    parser = argparse.ArgumentParser(
        prog="echelon",
        description="Exact linear algebra: reduced echelon forms, null spaces, and systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in _ONE_INPUT.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("path", help="input file")
    for name, (_, help_text) in _TWO_INPUT.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("path_a", help="first input file")
        p.add_argument("path_b", help="second input file")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = (_ONE_INPUT | _TWO_INPUT)[args.command][0]
    try:
        field = _parse_field_flag(args.field)
        code, output = handler(args, field)
    except (EchelonError, OSError, ValueError, ZeroDivisionError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if output:
        print(output)
    return code


def entry() -> None:
    raise SystemExit(main(sys.argv[1:]))
