"""Command-line interface.

Thin wrappers over the library: completion, reduction, basis
verification, growth counting, word classification, enumeration,
q-binomials and the partition bijection.  Words use the ``r0 r1 ...``
token syntax ("1" is the identity); partitions are comma-separated
tuples.  Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import presentations
from .affine_basis import g_families, verify_explicit_basis
from .partitions import (
    BasicPartition,
    BoxPartition,
    basic_to_block,
    block_to_basic,
    decompose,
    oplus,
    q_binomial,
)
from .presentations import Presentation, affine_a, finite_a, serialize
from .rewriting import complete, interreduce, normal_form
from .series import TruncatedSeries, count_reduced
from .word_classes import (
    NotReducedError,
    classify,
    enumerate_arranged,
    enumerate_marked,
    r0free_enumerate,
)
from .words import WordSyntaxError


class CliError(Exception):
    """Domain error: reported on stderr with exit code 1."""


def _load_presentation(args):
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            return presentations.parse(fh.read())
    if args.builtin == "affine-a":
        return affine_a(args.n)
    if args.builtin == "finite-a":
        return finite_a(args.n)
    raise CliError("one of --builtin or --file is required")


def _completed(args):
    p = _load_presentation(args)
    rs = complete(p.to_rules(), max_rules=args.max_rules, max_degree=args.max_degree)
    return p, interreduce(rs)


def _add_source_flags(sub, need_n=True):
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--builtin", choices=["affine-a", "finite-a"])
    group.add_argument("--file")
    sub.add_argument("--n", type=int, default=2, help="rank for built-ins")
    sub.add_argument("--max-rules", type=int, default=100000)
    sub.add_argument("--max-degree", type=int, default=64)


def cmd_complete(args, out):
    p, rs = _completed(args)
    basis = Presentation(p.alphabet, [(r.lhs, r.rhs) for r in rs.sorted_by_lhs()])
    if args.format == "json":
        payload = {
            "generators": p.alphabet.names,
            "rules": [
                {"lhs": p.alphabet.text(u), "rhs": p.alphabet.text(v)}
                for u, v in basis.relations
            ],
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write(serialize(basis))
    return 0


def cmd_reduce(args, out):
    p, rs = _completed(args)
    try:
        w = p.alphabet.word(args.word)
    except WordSyntaxError as e:
        raise CliError(str(e)) from None
    out.write(p.alphabet.text(normal_form(w, rs)) + "\n")
    return 0


def cmd_verify(args, out):
    report = verify_explicit_basis(args.n, max_rules=args.max_rules,
                                   max_degree=args.max_degree)
    if report.match:
        out.write(f"MATCH ({len(report.computed)} rules)\n")
        return 0
    out.write(
        f"MISMATCH (computed {len(report.computed)}, expected "
        f"{len(report.expected)}, missing {len(report.missing)}, "
        f"extra {len(report.extra)})\n"
    )
    return 1


def cmd_growth(args, out):
    _, rs = _completed(args)
    series = count_reduced(rs, args.max_len)
    _emit_series(series, args.format, out)
    return 0


def _emit_series(series, fmt, out):
    if fmt == "json":
        payload = [
            {"degree": d, "coefficient": c} for d, c in enumerate(series.coefficients)
        ]
        out.write(json.dumps(payload) + "\n")
    else:
        out.write(series.tsv() + "\n")


def cmd_classify(args, out):
    n = args.n
    alphabet = affine_a(n).alphabet
    try:
        w = alphabet.word(args.word)
    except WordSyntaxError as e:
        raise CliError(str(e)) from None
    try:
        c = classify(w, n)
    except NotReducedError as e:
        raise CliError(
            f"not reduced: factor {alphabet.text(e.rule.lhs)!r} at position {e.position}"
        ) from None
    out.write(f"r0free: {alphabet.text(c.r0free)}\n")
    out.write(f"arranged: {alphabet.text(c.arranged.word())}\n")
    blocks = " ".join(
        f"({b.k},{b.l})^{m}"
        for b, m in zip(c.arranged.skeleton, c.arranged.exponents)
        if m
    )
    chain = " ".join(f"({b.k},{b.l})" for b in c.arranged.chain)
    out.write(f"components: {blocks or '1'}\n")
    out.write(f"chain: {chain or '1'}\n")
    return 0


def cmd_enumerate(args, out):
    n, L = args.n, args.max_len
    alphabet = affine_a(n).alphabet
    if args.kind == "r0free":
        words = r0free_enumerate(n, L)
    elif args.kind == "arranged":
        words = [a.word() for a in enumerate_arranged(n, L)]
    else:
        words = [m.word() for m in enumerate_marked(n, L)]
    if args.format == "json":
        out.write(json.dumps([alphabet.text(w) for w in words]) + "\n")
    else:
        for w in words:
            out.write(alphabet.text(w) + "\n")
    return 0


def cmd_qbinom(args, out):
    coeffs = q_binomial(args.m, args.r)
    _emit_series(TruncatedSeries.from_list(coeffs), args.format, out)
    return 0


def _parse_tuple(text):
    try:
        return tuple(int(t) for t in text.split(",") if t.strip() != "")
    except ValueError:
        raise CliError(f"cannot parse tuple {text!r}") from None


def cmd_bijection(args, out):
    n = args.n
    if args.direction == "decode":
        # box partition -> connected sequence of basic partitions
        parts = _parse_tuple(args.input)
        parts = parts + (0,) * (n - len(parts))
        try:
            seq = decompose(BoxPartition(n, parts))
        except ValueError as e:
            raise CliError(str(e)) from None
        out.write(";".join(",".join(map(str, bp.tuple())) for bp in seq) + "\n")
    else:
        # connected sequence (";"-separated basic partitions) -> box partition
        seq = []
        for chunk in args.input.split(";"):
            t = _parse_tuple(chunk)
            k = t[0] if t else 0
            ones = sum(1 for x in t[1:] if x == 1)
            if t and any(x not in (0, 1) for x in t[1:]):
                raise CliError(f"{chunk!r} is not a basic partition")
            try:
                seq.append(BasicPartition(n, k, ones))
            except ValueError as e:
                raise CliError(str(e)) from None
        try:
            box = oplus(seq)
        except ValueError as e:
            raise CliError(str(e)) from None
        out.write(",".join(map(str, box.parts)) + "\n")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="affinegsb",
        description="Confluent rewriting and reduced-word combinatorics "
        "for the affine symmetric group.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("complete", help="complete a presentation to a confluent basis")
    _add_source_flags(p)
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("reduce", help="normal form of a word")
    _add_source_flags(p)
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="check the explicit basis against completion")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-rules", type=int, default=100000)
    p.add_argument("--max-degree", type=int, default=64)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("growth", help="growth series of reduced words")
    _add_source_flags(p)
    p.add_argument("--max-len", type=int, default=10)
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("classify", help="decompose a reduced word")
    p.add_argument("--word", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", help="enumerate word classes")
    p.add_argument("kind", choices=["r0free", "arranged", "marked"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-len", type=int, default=10)
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("qbinom", help="Gaussian binomial coefficients")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.set_defaults(func=cmd_qbinom)

    p = sub.add_parser("bijection", help="connected sequences <-> box partitions")
    p.add_argument("direction", choices=["encode", "decode"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_bijection)

    return parser


def run(argv, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.func(args, out)
    except CliError as e:
        err.write(f"error: {e}\n")
        return 1
    except (ValueError, OSError) as e:
        err.write(f"error: {e}\n")
        return 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
