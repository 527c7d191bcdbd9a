"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import sys
from dataclasses import dataclass

from . import cdawg as cdawg_mod
from .errors import StructuralError, TextError
from .glpf import expand_glpf, format_array, format_pairs, format_sparse
from .parse import format_parse
from .pipeline import convert, graph_for
from .rlbwt import format_runs
from .text import Text, fibonacci, random_text, read_text, thue_morse, write_body
from .verify import DEFAULT_ORACLE_MAX_N, format_report, verify

TARGETS = ("rlbwt", "plcp", "lpf", "irr-plcp", "lex-parse", "lz-parse")
FAMILIES = ("thue-morse", "fibonacci", "random")


class UsageError(Exception):
    pass


@dataclass
class BenchRecord:
    family: str
    order: int
    n: int
    e_R: int
    nodes: int
    r: int
    z: int
    lex_phrases: int
    visits_prep_upward: int
    visits_prep_downward_lex: int
    visits_prep_downward_pos: int
    visits_count_sink_paths: int
    visits_rec_rbwt: int
    visits_qirr_glpf_lex: int
    visits_qirr_glpf_pos: int


def family_text(family: str, k: int | None = None, length: int | None = None,
                sigma: int | None = None, seed: int | None = None,
                cap: int | None = None) -> Text:
    if family == "thue-morse":
        return thue_morse(_need(k, "--order"), cap)
    if family == "fibonacci":
        return fibonacci(_need(k, "--order"), cap)
    if family == "random":
        return random_text(_need(length, "--len"), sigma if sigma is not None else 2,
                           seed if seed is not None else 0, cap)
    raise UsageError(f"unknown family {family!r}")


def _need(value, flag):
    if value is None:
        raise UsageError(f"{flag} is required for this family")
    return value


def bench_record(family: str, k: int, cap: int | None = None) -> BenchRecord:
    if family == "random":
        raise UsageError("bench supports thue-morse and fibonacci")
    t = family_text(family, k, cap=cap)
    conv = convert(graph_for(t))
    g = conv.graph
    v = conv.visits()
    return BenchRecord(
        family=family, order=k, n=g.n, e_R=g.num_edges, nodes=g.num_nodes,
        r=conv.rlbwt.r, z=len(conv.lz_parse), lex_phrases=len(conv.lex_parse),
        visits_prep_upward=v["prep_upward"],
        visits_prep_downward_lex=v["prep_downward_lex"],
        visits_prep_downward_pos=v["prep_downward_pos"],
        visits_count_sink_paths=v["count_sink_paths"],
        visits_rec_rbwt=v["rec_rbwt"],
        visits_qirr_glpf_lex=v["qirr_glpf_lex"],
        visits_qirr_glpf_pos=v["qirr_glpf_pos"],
    )


def parse_range(value: str) -> range:
    for sep in ("..", ":", "-"):
        if sep in value:
            lo, hi = value.split(sep, 1)
            try:
                a, b = int(lo), int(hi)
            except ValueError:
                break
            if a > b:
                raise UsageError(f"empty order range {value!r}")
            return range(a, b + 1)
    try:
        k = int(value)
    except ValueError:
        raise UsageError(f"bad order range {value!r}; use A..B") from None
    return range(k, k + 1)


def render_target(conv, target: str, sparse: bool = False) -> str:
    if target == "rlbwt":
        return format_runs(conv.rlbwt)
    if target in ("plcp", "lpf"):
        s = conv.glpf_lex if target == "plcp" else conv.glpf_pos
        return format_sparse(s) if sparse else format_array(target, expand_glpf(s))
    if target == "irr-plcp":
        return format_pairs("irr-plcp", conv.irr_plcp)
    if target == "lex-parse":
        return format_parse(conv.lex_parse)
    if target == "lz-parse":
        return format_parse(conv.lz_parse)
    raise UsageError(f"unknown target {target!r}")


def _emit(text: str, out: str | None):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


# -- commands ----------------------------------------------------------------

def cmd_generate(args) -> int:
    t = family_text(args.family, args.order, args.len, args.sigma, args.seed, args.max_n)
    write_body(t, args.out)
    return 0


def _input_graph(args):
    if getattr(args, "graph", None):
        g = cdawg_mod.load(args.graph)
        if args.mode == "text-free" and g.text is not None:
            g = cdawg_mod.strip_text(g)
        elif args.mode == "text" and g.text is None:
            raise UsageError("graph file is text-free; use --mode text-free")
        return g
    if not args.input:
        raise UsageError("an input text file or --graph is required")
    return graph_for(read_text(args.input, args.max_n), args.mode)


def cmd_build(args) -> int:
    cdawg_mod.save(_input_graph(args), args.out)
    return 0


def cmd_convert(args) -> int:
    conv = convert(_input_graph(args))
    _emit(render_target(conv, args.to, args.sparse), args.out)
    return 0


def cmd_verify(args) -> int:
    t = read_text(args.input, args.max_n)
    graph = cdawg_mod.load(args.graph, check=False) if args.graph else None
    checks = verify(t, graph, args.oracle_max_n)
    _emit(format_report(checks), args.out)
    return 0 if all(c.ok for c in checks) else 1


def cmd_bench(args) -> int:
    ks = parse_range(args.order_range)
    fields = [f.name for f in dataclasses.fields(BenchRecord)]
    out = sys.stdout if args.out in (None, "-") else open(args.out, "w", encoding="utf-8", newline="")
    try:
        writer = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for k in ks:
            writer.writerow(dataclasses.asdict(bench_record(args.family, k, args.max_n)))
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cdawg-arrays",
                                description="CDAWG construction and conversion to compressed indexing arrays")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--max-n", type=int, default=None,
                        help="size cap on n (default: $CDAWG_MAX_N or 2^26)")

    g = sub.add_parser("generate", help="write a generated text body")
    g.add_argument("--family", choices=FAMILIES, required=True)
    g.add_argument("--order", type=int)
    g.add_argument("--len", type=int)
    g.add_argument("--sigma", type=int, default=2)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", required=True)
    common(g)
    g.set_defaults(func=cmd_generate)

    for name, func, helptext in (("build", cmd_build, "serialize the CDAWG of a text"),
                                 ("convert", cmd_convert, "convert a text's CDAWG to an indexing structure")):
        c = sub.add_parser(name, help=helptext)
        c.add_argument("input", nargs="?", help="raw text file (sentinel is appended)")
        c.add_argument("--graph", help="serialized graph instead of a text file")
        c.add_argument("--mode", choices=("text", "text-free"), default="text")
        if name == "convert":
            c.add_argument("--to", choices=TARGETS, required=True)
            c.add_argument("--sparse", action="store_true",
                           help="for plcp/lpf: write the sampled (pos, value) form")
            c.add_argument("--out")
        else:
            c.add_argument("--out", required=True)
        common(c)
        c.set_defaults(func=func)

    v = sub.add_parser("verify", help="cross-check every output against brute-force oracles")
    v.add_argument("input")
    v.add_argument("--graph", help="check this serialized graph instead of a fresh build")
    v.add_argument("--oracle-max-n", type=int, default=DEFAULT_ORACLE_MAX_N)
    v.add_argument("--out")
    common(v)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="CSV of size parameters and visit counts per order")
    b.add_argument("--family", choices=("thue-morse", "fibonacci"), required=True)
    b.add_argument("--order-range", required=True, help="e.g. 8..20")
    b.add_argument("--out")
    common(b)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, TextError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except StructuralError as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
