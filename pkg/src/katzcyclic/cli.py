"""Command-line front end.

Subcommands:

    tables         -n N [--format json|latex]
    cyclic         -i module.json [--constants 0,1,2]
    companion      -i module.json [--constants 0,1,2]
    certify        -i module.json --criterion prop2.3|prop2.5|prop2.8|lemma2.1
                   [--norm sup|rho-t|rho-d]
    counterexample -p P -e E -n N

Module files: {"ring": {...}, "n": 3, "G1": [["0","1"],["x","0"]]}.
Output is UTF-8 JSON (or LaTeX for tables --format latex), deterministic
for identical inputs, with every value printed exactly.  Exit status:
0 success/certified, 2 criterion not satisfied, 1 error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import katz, ultranorm
from .diffmod import charp_counterexample, module_from_json, module_to_json
from .errors import KatzCyclicError
from .ultranorm import MatrixNormKind

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NOT_CERTIFIED = 2


def _latex_entry(s: int, i: int, j: int, n: int) -> str:
    a = katz.alpha(s, i, j, n)
    if a == 0:
        return "0"
    m = s + j - i
    if m == 0:
        return str(a)
    if a == 1:
        head = ""
    elif a == -1:
        head = "-"
    else:
        head = str(a)
    if m == 1:
        return f"{head}X"
    return f"{head}\\frac{{X^{{{m}}}}}{{{m}!}}"


def _tables_latex(n: int) -> str:
    blocks = []
    for s in range(2 * n - 1):
        rows = [
            " & ".join(_latex_entry(s, i, j, n) for j in range(n))
            for i in range(n)
        ]
        body = " \\\\\n".join(rows)
        mat = f"\\begin{{pmatrix}}\n{body}\n\\end{{pmatrix}}"
        blocks.append(mat if s == 0 else f"{mat} G_{{{s}}}")
    return "H(X) =\n" + "\n+\n".join(blocks) + "\n"


def cmd_tables(args) -> int:
    n = args.n
    if n < 1:
        print("error: n must be >= 1", file=sys.stderr)
        return EXIT_ERROR
    if n > args.max_n:
        print(f"error: n exceeds configured maximum {args.max_n}", file=sys.stderr)
        return EXIT_ERROR
    if args.format == "latex":
        sys.stdout.write(_tables_latex(n))
        return EXIT_OK
    tables = [
        [
            [katz.qx_to_str(katz.h_entry(s, i, j, n)) for j in range(n)]
            for i in range(n)
        ]
        for s in range(2 * n - 1)
    ]
    _emit({"command": "tables", "n": n, "H": tables})
    return EXIT_OK


def _load_module(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return module_from_json(json.load(fh))


def _parse_constants(m, spec: Optional[str]):
    if spec is None:
        return None
    return [m.ring.from_int(int(tok)) for tok in spec.split(",") if tok.strip()]


def cmd_cyclic(args) -> int:
    m = _load_module(args.input)
    result = katz.find_cyclic(m, _parse_constants(m, args.constants))
    ring = m.ring
    payload = {
        "command": "cyclic",
        "input": module_to_json(m),
        "candidate_index": result.candidate_index,
        "a": ring.to_str(result.a),
        "cyclic_vector": [ring.to_str(c) for c in result.vector],
        "determinant": ring.to_str(result.determinant),
    }
    if ring.is_field:
        b = katz.companion_form(m, result.vector)
        payload["companion_coefficients"] = [ring.to_str(c) for c in b]
    _emit(payload)
    return EXIT_OK


def cmd_companion(args) -> int:
    m = _load_module(args.input)
    result = katz.find_cyclic(m, _parse_constants(m, args.constants))
    b = katz.companion_form(m, result.vector)
    ring = m.ring
    _emit(
        {
            "command": "companion",
            "input": module_to_json(m),
            "a": ring.to_str(result.a),
            "cyclic_vector": [ring.to_str(c) for c in result.vector],
            "companion_coefficients": [ring.to_str(c) for c in b],
        }
    )
    return EXIT_OK


_NORM_KINDS = {"sup": None, "rho-t": "rho_t_inverse", "rho-d": "rho_d"}


def cmd_certify(args) -> int:
    m = _load_module(args.input)
    if args.criterion == "prop2.3":
        cert = ultranorm.check_prop_2_3(m)
    elif args.criterion == "prop2.5":
        cert = ultranorm.check_prop_2_5(m)
    elif args.criterion == "prop2.8":
        cert = ultranorm.check_prop_2_8(m)
    else:
        kind = None
        if args.norm == "rho-t":
            kind = MatrixNormKind.rho_t_inverse(m.ring)
        elif args.norm == "rho-d":
            kind = MatrixNormKind.rho_d(m.ring)
        cert = ultranorm.certify_lemma_2_1(m, kind)
    doc = cert.to_json(m.ring)
    doc["command"] = "certify"
    doc["input"] = module_to_json(m)
    _emit(doc)
    return EXIT_OK if cert.certified else EXIT_NOT_CERTIFIED


def cmd_counterexample(args) -> int:
    report = charp_counterexample(args.p, args.e, args.n)
    doc = report.to_json()
    doc["command"] = "counterexample"
    _emit(doc)
    return EXIT_OK


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="katzcyclic",
        description="Cyclic vectors for differential modules, with exact arithmetic",
    )
    sub = top.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("tables", help="emit the universal base-change matrices")
    p.add_argument("-n", type=int, required=True, help="module rank")
    p.add_argument("--format", choices=("json", "latex"), default="json")
    p.add_argument("--max-n", dest="max_n", type=int, default=8)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("cyclic", help="find a cyclic vector for a module file")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--constants", default=None, help="comma-separated integers")
    p.set_defaults(func=cmd_cyclic)

    p = sub.add_parser("companion", help="scalar equation in a cyclic basis")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--constants", default=None)
    p.set_defaults(func=cmd_companion)

    p = sub.add_parser("certify", help="norm-smallness cyclicity certificate")
    p.add_argument("-i", "--input", required=True)
    p.add_argument(
        "--criterion",
        required=True,
        choices=("prop2.3", "prop2.5", "prop2.8", "lemma2.1"),
    )
    p.add_argument("--norm", choices=tuple(_NORM_KINDS), default="sup")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("counterexample", help="characteristic-p witness report")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-e", type=int, default=1)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_counterexample)

    return top


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (KatzCyclicError, OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
