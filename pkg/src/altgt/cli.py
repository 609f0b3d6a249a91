"""Command line front end.

Exit codes: 0 on success, 1 when a verification suite reports a failure,
2 on unusable input (a one-line diagnostic names the offending token).
"""

from __future__ import annotations

import argparse
import json
import sys

from .associator import assoc_coeff
from .geodesics import class_members, geodesic_representatives
from .gt import gt_basis
from .labels import AltLabel, bratteli, young_graph
from .partitions import Partition
from .tableaux import enumerate_syt
from .verify import Report, verify_associator, verify_gt_range, verify_yor
from .yor import rep_matrix

_ROOT_TEXT = {complex(1): "1", complex(-1): "-1", 1j: "i", -1j: "-i"}
_ROOT_LATEX = {complex(1): "", complex(-1): "-", 1j: "i ", -1j: "-i "}


def _matrix_text(mat) -> str:
    cells = [[str(x) for x in row] for row in mat]
    widths = [max(len(cells[r][c]) for r in range(len(cells))) for c in range(len(cells[0]))]
    lines = []
    for row in cells:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def _matrix_latex(mat) -> str:
    body = " \\\\\n".join(" & ".join(x.latex() for x in row) for row in mat)
    return f"\\begin{{pmatrix}}\n{body}\n\\end{{pmatrix}}"


def _coeff_text(scalar) -> str:
    root = scalar.as_fourth_root()
    if root is not None:
        return _ROOT_TEXT[root]
    return str(scalar)


def _cmd_syt(args) -> int:
    shape = Partition.parse(args.shape)
    for tableau in enumerate_syt(shape):
        print(tableau)
    return 0


def _cmd_yor(args) -> int:
    shape = Partition.parse(args.shape)
    if not 1 <= args.gen <= shape.n - 1:
        raise ValueError(
            f"generator {args.gen} out of range 1..{shape.n - 1} for shape {shape}"
        )
    mat = rep_matrix(shape, args.gen)
    if args.format == "json":
        payload = {
            "shape": shape.to_json(),
            "generator": args.gen,
            "basis": [t.to_json() for t in enumerate_syt(shape)],
            "rows": [[x.to_json() for x in row] for row in mat],
        }
        print(json.dumps(payload, indent=2))
    elif args.format == "latex":
        print(_matrix_latex(mat))
    else:
        print(_matrix_text(mat))
    return 0


def _cmd_assoc(args) -> int:
    shape = Partition.parse(args.shape)
    if not shape.is_self_conjugate():
        raise ValueError(f"shape {shape} is not self-conjugate")
    rows = []
    for tableau in enumerate_syt(shape):
        coeff = assoc_coeff(shape, tableau)
        rows.append((tableau, coeff, tableau.conjugate()))
    if args.format == "json":
        payload = [
            {
                "tableau": t.to_json(),
                "coeff": c.to_json(),
                "conjugate": tc.to_json(),
            }
            for t, c, tc in rows
        ]
        print(json.dumps(payload, indent=2))
    else:
        width = max(len(str(t)) for t, _, _ in rows)
        cwidth = max(len(_coeff_text(c)) for _, c, _ in rows)
        for t, c, tc in rows:
            print(f"{str(t):{width}s}  {_coeff_text(c):{cwidth}s}  {tc}")
    return 0


def _cmd_bratteli(args) -> int:
    graph = bratteli(args.max_n) if args.chain == "alternating" else young_graph(args.max_n)
    if args.format == "json":
        print(json.dumps(graph.to_json_dict(), indent=2))
    else:
        print(graph.to_dot(), end="")
    return 0


def _cmd_paths(args) -> int:
    label = AltLabel.parse(args.label)
    for path in geodesic_representatives(label):
        print(f"{path}\t{len(class_members(path))}")
    return 0


def _cmd_gt(args) -> int:
    label = AltLabel.parse(args.label)
    basis = gt_basis(label, normalize=args.normalize)
    if args.format == "json":
        payload = [
            {
                "path": path.to_json(),
                "terms": [
                    {"tableau": t.to_json(), "coeff": c.to_json()}
                    for t, c in vector.items()
                ],
            }
            for path, vector in basis
        ]
        print(json.dumps(payload, indent=2))
    elif args.format == "latex":
        for path, vector in basis:
            terms = []
            for t, c in vector.items():
                root = c.as_fourth_root()
                if root is not None:
                    coeff = _ROOT_LATEX[root]
                else:
                    body = c.latex()
                    mixed = "+" in body[1:] or "-" in body[1:]
                    coeff = f"\\left({body}\\right)" if mixed else body
                terms.append(f"{coeff}v_{{{t.latex()}}}")
            subscript = ",".join(label_part.latex() for label_part in path)
            print(f"u_{{{subscript}}} = {' + '.join(terms)}")
    else:
        for path, vector in basis:
            terms = " + ".join(f"({_coeff_text(c)})*v[{t}]" for t, c in vector.items())
            print(f"u[{path}] = {terms}")
    return 0


def _cmd_verify(args) -> int:
    report = Report([])
    if args.suite in ("yor", "all"):
        report.extend(verify_yor(args.max_n))
    if args.suite == "assoc" or (args.suite == "all" and args.max_n >= 3):
        report.extend(verify_associator(args.max_n))
    if args.suite in ("gt", "all"):
        report.extend(verify_gt_range(args.max_n))
    if args.format == "json":
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        for line in report.lines():
            print(line)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="altgt",
        description="Exact Gelfand-Tsetlin bases for alternating groups in "
        "Young's orthogonal tableau bases.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("syt", help="list the standard tableaux of a shape")
    p.add_argument("shape", help='partition, e.g. "4,1,1"')
    p.set_defaults(func=_cmd_syt)

    p = sub.add_parser("yor", help="matrix of one adjacent transposition")
    p.add_argument("shape")
    p.add_argument("--gen", type=int, required=True, metavar="I",
                   help="generator index i for the transposition (i, i+1)")
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p.set_defaults(func=_cmd_yor)

    p = sub.add_parser("assoc", help="intertwiner coefficients of a self-conjugate shape")
    p.add_argument("shape")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_assoc)

    p = sub.add_parser("bratteli", help="branching graph as DOT or JSON")
    p.add_argument("--chain", choices=("symmetric", "alternating"), default="alternating")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=_cmd_bratteli)

    p = sub.add_parser("paths", help="class representatives ending at a label")
    p.add_argument("label", help='label, e.g. "4,1,1" or "2,1^+"')
    p.set_defaults(func=_cmd_paths)

    p = sub.add_parser("gt", help="basis vectors for a label")
    p.add_argument("label")
    p.add_argument("--normalize", action="store_true")
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p.set_defaults(func=_cmd_gt)

    p = sub.add_parser("verify", help="run the exact verification suites")
    p.add_argument("--suite", choices=("yor", "assoc", "gt", "all"), default="all")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
