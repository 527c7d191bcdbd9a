"""Shared text corpora and graph-walking helpers for the test suite."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache

from cdawg_arrays import oracle
from cdawg_arrays.cdawg import strip_text
from cdawg_arrays.glpf import expand_glpf
from cdawg_arrays.order import OrderedCdawg
from cdawg_arrays.pipeline import convert, graph_for
from cdawg_arrays.rlbwt import expand_bwt
from cdawg_arrays.text import Text, normalize, random_text

SIGMAS = (2, 3, 4, 16)
CORPUS_SEED = 20240601


def random_corpus(count: int = 1000, max_len: int = 500, seed: int = CORPUS_SEED) -> list[Text]:
    """Texts with body lengths 1..max_len over the alphabet sizes in SIGMAS."""
    rng = random.Random(seed)
    return [random_text(rng.randint(1, max_len), SIGMAS[i % len(SIGMAS)], rng.randrange(1 << 30))
            for i in range(count)]


def exhaustive(max_len: int, alphabet: bytes = b"ab") -> list[Text]:
    """Every body over ``alphabet`` of length 0..max_len."""
    return [normalize(bytes(w)) for k in range(max_len + 1)
            for w in itertools.product(alphabet, repeat=k)]


def small_texts(max_n: int = 64, count: int = 150, seed: int = 7) -> list[Text]:
    """Exhaustive binary/ternary texts at tiny n, random ones up to ``max_n``."""
    out = exhaustive(6, b"ab") + exhaustive(4, b"abc")
    rng = random.Random(seed)
    for i in range(count):
        out.append(random_text(rng.randint(1, max_n - 1), (2, 3)[i % 2], rng.randrange(1 << 30)))
    return out


@dataclass
class Expected:
    arrays: oracle.FullArrays
    runs: list
    irr: list
    lex: list
    lz: list


@lru_cache(maxsize=None)
def expected(t: Text) -> Expected:
    a = oracle.full_arrays(t)
    return Expected(arrays=a, runs=oracle.run_length(a.bwt), irr=oracle.irreducible_plcp(a),
                    lex=oracle.greedy_parse(a.plcp, t.n), lz=oracle.greedy_parse(a.lpf, t.n))


def mismatches(t: Text, mode: str) -> list[str]:
    """Names of outputs that disagree with the oracle for ``t`` in ``mode``."""
    conv = convert(graph_for(t, mode))
    exp = expected(t)
    bad = []
    if expand_bwt(conv.rlbwt) != exp.arrays.bwt or conv.rlbwt.runs != exp.runs:
        bad.append("rlbwt")
    if expand_glpf(conv.glpf_lex) != exp.arrays.plcp:
        bad.append("plcp")
    if expand_glpf(conv.glpf_pos) != exp.arrays.lpf:
        bad.append("lpf")
    if conv.irr_plcp != exp.irr:
        bad.append("irr-plcp")
    if conv.lex_parse.phrases != exp.lex:
        bad.append("lex-parse")
    if conv.lz_parse.phrases != exp.lz:
        bad.append("lz-parse")
    return bad


# -- walking the annotated graph ---------------------------------------------

def primary_minus_path(oc: OrderedCdawg, v: int) -> list[int]:
    """Edges of the all-primary upper path root -> v (i.e. repr_-(v))."""
    g = oc.graph
    in_primary = {g.dst[f]: f for f in range(g.num_edges) if oc.primary_minus[f]}
    path = []
    while v != g.root:
        f = in_primary[v]
        path.append(f)
        v = g.src[f]
    return path[::-1]


def primary_plus_path(oc: OrderedCdawg, v: int, order: str) -> list[int]:
    """Edges of the all-primary lower path v -> sink (i.e. repr_+(v))."""
    g = oc.graph
    out_primary = {g.src[f]: f for f in range(g.num_edges) if oc.primary_plus[order][f]}
    path = []
    while v != g.sink:
        f = out_primary[v]
        path.append(f)
        v = g.dst[f]
    return path


def search_paths_minus(oc: OrderedCdawg) -> list[tuple[int, ...]]:
    """(-)-search paths: primary prefix plus one secondary edge; the trivial one ends at the sink."""
    g = oc.graph
    out = [tuple(primary_minus_path(oc, g.sink))]
    for f in range(g.num_edges):
        if not oc.primary_minus[f]:
            out.append(tuple(primary_minus_path(oc, g.src[f]) + [f]))
    return out


def search_paths_plus(oc: OrderedCdawg, order: str) -> list[tuple[int, ...]]:
    g = oc.graph
    out = [tuple(primary_plus_path(oc, g.root, order))]
    for f in range(g.num_edges):
        if not oc.primary_plus[order][f]:
            out.append(tuple([f] + primary_plus_path(oc, g.dst[f], order)))
    return out


def text_free(t: Text):
    return strip_text(graph_for(t))


# -- acceptance reporting ----------------------------------------------------

ACCEPTANCE_LOG: list[str] = []


def report(criterion: str, ok: bool, detail: str = "") -> bool:
    """Print and record one pass/fail line; the caller asserts on the result."""
    line = f"{'PASS' if ok else 'FAIL'}  {criterion}"
    if detail:
        line += f"  ({detail})"
    print(line)
    ACCEPTANCE_LOG.append(line)
    return ok
