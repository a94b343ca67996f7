"""Command-line front end.

Exit codes: 0 success, 1 bad input, 2 an internal cross-check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .combinatorics import canonicalize, complex_from_json, is_chordal, missing_face
from .errors import ValidationError, VerificationError
from .freegroup import parse_word
from .generators import count_P, enumerate_descriptors, vertex_patterns
from .graphproduct import VertexGroupSpec, enumerate_gp_descriptors, gp_is_free_kernel
from .rewriting import express_in_basis, rewrite_f2
from .topology import build_cube_complex, expected_cell_counts, h1_rank_and_torsion
from .verify import DEFAULT_SEED, run_all

DEFAULT_CELL_CAP = 200_000


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _read_json(path: str):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}:{exc.lineno}:{exc.colno}: malformed JSON ({exc.msg})") from None


def _load_complex(args):
    if not args.input:
        raise ValidationError("--input PATH is required for this command")
    raw = complex_from_json(_read_json(args.input))
    flag, was_flag = canonicalize(raw)
    return raw, flag, was_flag


def cmd_analyze(args, out) -> int:
    raw, K, was_flag = _load_complex(args)
    g = K.one_skeleton()
    chordal = is_chordal(g)
    report = count_P(K, args.bound)
    rows = list(report.to_json()["table"])[: args.table_cap]
    families = len(vertex_patterns(g))
    witness = missing_face(raw)
    if args.format == "json":
        out.write(
            _dumps(
                {
                    "m": K.m,
                    "flag": was_flag,
                    "missing_face": list(witness) if witness else None,
                    "chordal": chordal,
                    "commutator_subgroup_free": chordal,
                    "generator_families": families,
                    "P": report.P,
                    "s": args.bound,
                    "table": rows,
                }
            )
            + "\n"
        )
        return 0
    out.write(f"vertices: {K.m}\n")
    out.write(f"edges: {len(g.edges)}\n")
    out.write(f"flag: {str(was_flag).lower()}\n")
    if witness:
        out.write(f"missing face: {list(witness)} (replaced by the clique complex)\n")
    out.write(f"chordal: {str(chordal).lower()}\n")
    out.write(f"commutator subgroup free: {str(chordal).lower()}\n")
    if families == 0:
        out.write("generators at any s: 0\n")
    else:
        out.write(f"generator families: {families}\n")
        out.write(f"generators at s={args.bound}: {report.P}\n")
    out.write("subset cc table (|J| >= 2):\n")
    for row in rows:
        out.write(f"  {row['subset']}  cc={row['cc']}  contribution={row['contribution']}\n")
    if len(report.table) > len(rows):
        out.write(f"  ... {len(report.table) - len(rows)} more subsets (raise --table-cap)\n")
    return 0


def cmd_enumerate(args, out) -> int:
    _, K, _ = _load_complex(args)
    if args.groups:
        spec = VertexGroupSpec.from_json(_read_json(args.groups))
        items = enumerate_gp_descriptors(K, spec, args.bound)
        header = f"free kernel: {str(gp_is_free_kernel(K, spec)).lower()}"
    else:
        items = enumerate_descriptors(K, args.bound)
        header = None
    if args.format == "json":
        out.write(_dumps([d.to_json() for d in items]) + "\n")
    else:
        if header:
            out.write(header + "\n")
        for d in items:
            out.write(json.dumps(d.to_json(), sort_keys=True) + "\n")
        out.write(f"total: {len(items)}\n")
    return 0


def cmd_count(args, out) -> int:
    _, K, _ = _load_complex(args)
    report = count_P(K, args.bound)
    if args.format == "json":
        out.write(_dumps(report.to_json()) + "\n")
    else:
        out.write(f"m={report.m} s={report.s}\n")
        out.write(f"P={report.P}\n")
        out.write(f"J={report.J} W_closed={report.W_closed} W_recursive={report.W_recursive}\n")
        for row in report.to_json()["table"]:
            out.write(f"  {row['subset']}  cc={row['cc']}  contribution={row['contribution']}\n")
    return 0


def cmd_homology(args, out) -> int:
    _, K, _ = _load_complex(args)
    size = K.m * (args.bound + 1) ** K.m
    if size > args.cell_cap:
        raise ValidationError(
            f"complex too large: m*(s+1)^m = {size} exceeds --cell-cap {args.cell_cap}"
        )
    C = build_cube_complex(K, args.bound)
    if C.counts() != expected_cell_counts(K, args.bound):
        raise VerificationError("cell counts disagree with the face-count formula")
    rank, torsion = h1_rank_and_torsion(C)
    P = count_P(K, args.bound).P
    if args.format == "json":
        out.write(
            _dumps({"m": K.m, "s": args.bound, "cells": list(C.counts()), "h1_rank": rank, "torsion": torsion, "P": P})
            + "\n"
        )
    else:
        out.write(f"cells: {list(C.counts())}\n")
        out.write(f"rank {rank}\n")
        out.write(f"torsion {' '.join(map(str, torsion)) if torsion else 'none'}\n")
        out.write(f"P {P}\n")
    if rank != P or torsion:
        raise VerificationError(
            "H1 of the cube complex disagrees with the generator count",
            counterexample={"edges": K.one_skeleton().sorted_edges(), "s": args.bound, "rank": rank, "P": P},
        )
    return 0


def cmd_verify(args, out) -> int:
    results = run_all(args.seed, log=sys.stderr if args.verbose else None)
    if args.format == "json":
        out.write(_dumps({"seed": args.seed, "checks": [r.to_json() for r in results]}) + "\n")
    else:
        for r in results:
            out.write(f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.cases} cases)\n")
    failed = [r for r in results if not r.passed]
    if failed:
        raise VerificationError(
            f"{len(failed)} check(s) failed", counterexample={r.name: r.counterexample for r in failed}
        )
    return 0


def cmd_rewrite(args, out) -> int:
    w = parse_word(args.word, args.m)
    if args.method == "f2":
        fw = rewrite_f2(w)
    else:
        fw = express_in_basis(w, args.m, args.bound)
    if not fw.verifies(w):
        raise VerificationError("factor product does not reduce to the input", counterexample=args.word)
    if args.format == "json":
        out.write(_dumps(fw.to_json()) + "\n")
    else:
        for d, sign in fw.factors:
            out.write(json.dumps({"sign": sign, "descriptor": d.to_json()}, sort_keys=True) + "\n")
    return 0


COMMANDS = {
    "analyze": cmd_analyze,
    "enumerate": cmd_enumerate,
    "count": cmd_count,
    "homology": cmd_homology,
    "verify": cmd_verify,
    "rewrite": cmd_rewrite,
}


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="complex JSON: {'m':..,'edges':[..]} or {'m':..,'maximal_faces':[..]}")
    common.add_argument("--bound", type=_positive, default=1, help="exponent bound s (default 1)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"seed for random suites (default {DEFAULT_SEED})")
    common.add_argument("--cell-cap", type=_positive, default=DEFAULT_CELL_CAP)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="raagcomm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    analyze = sub.add_parser("analyze", parents=[common], help="flagness, chordality, component table")
    analyze.add_argument("--table-cap", type=_positive, default=64, help="max subset rows to print")
    enum = sub.add_parser("enumerate", parents=[common], help="list minimal generators with exponents 1..s")
    enum.add_argument("--groups", help="graph-product vertex groups JSON: {'groups':[{'type':'Z'}|{'type':'cyclic','order':n},..]}")
    sub.add_parser("count", parents=[common], help="counting report P, J, W")
    sub.add_parser("homology", parents=[common], help="H1 rank and torsion of the cube complex")
    sub.add_parser("verify", parents=[common], help="run the full oracle suite")
    rw = sub.add_parser("rewrite", parents=[common], help="factor a commutator-subgroup word")
    rw.add_argument("--word", required=True, help="e.g. 1,2,1^-1,2^-1")
    rw.add_argument("--m", type=_positive, required=True, help="alphabet size")
    rw.add_argument("--method", choices=("basis", "f2"), default="basis")
    return parser


def main(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        return COMMANDS[args.command](args, out)
    except VerificationError as exc:
        err.write(f"verification failed: {exc}\n")
        if exc.counterexample is not None:
            err.write(_dumps(exc.counterexample) + "\n")
        return 2
    except ValidationError as exc:
        err.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
