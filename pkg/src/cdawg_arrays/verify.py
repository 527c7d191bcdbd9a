"""Oracle cross-checks behind the ``verify`` command."""

from __future__ import annotations

from dataclasses import dataclass

from . import oracle
from .cdawg import Cdawg, build, strip_text, validate
from .errors import StructuralError
from .glpf import expand_glpf
from .pipeline import convert
from .rlbwt import expand_bwt
from .text import Text

DEFAULT_ORACLE_MAX_N = 4096


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


def verify(t: Text, graph: Cdawg | None = None, oracle_max_n: int = DEFAULT_ORACLE_MAX_N) -> list[Check]:
    """Compare every output against the brute-force oracle.

    ``graph`` defaults to ``build(t)``; when supplied (e.g. loaded from
    disk) it is validated first and must describe ``t``.  Both label modes
    are exercised.
    """
    if t.n > oracle_max_n:
        raise ValueError(f"n = {t.n} exceeds the oracle cap {oracle_max_n}")
    checks: list[Check] = []
    if graph is None:
        graph = build(t)
    else:
        try:
            validate(graph)
        except StructuralError as exc:
            return [Check(f"graph:{exc.invariant}", False, exc.detail)]
        if graph.n != t.n:
            return [Check("graph:text-length", False, f"graph n = {graph.n}, text n = {t.n}")]
        if graph.text is not None and graph.text.data != t.data:
            return [Check("graph:text-content", False, "graph text differs from input")]
    checks.append(Check("graph:invariants", True))

    ref = oracle.naive_cdawg(t)
    if graph.text is None:
        ref = strip_text(ref)
    checks.append(Check("graph:isomorphic-to-oracle", oracle.isomorphic(graph, ref)))

    a = oracle.full_arrays(t)
    expected = {
        "rlbwt": a.bwt,
        "plcp": a.plcp,
        "lpf": a.lpf,
        "irr-plcp": oracle.irreducible_plcp(a),
        "lex-parse": oracle.greedy_parse(a.plcp, t.n),
        "lz-parse": oracle.greedy_parse(a.lpf, t.n),
    }
    modes = [("text", graph), ("text-free", strip_text(graph))] if graph.text is not None \
        else [("text-free", graph)]
    for mode, g in modes:
        try:
            conv = convert(g)
            got = {
                "rlbwt": expand_bwt(conv.rlbwt),
                "plcp": expand_glpf(conv.glpf_lex),
                "lpf": expand_glpf(conv.glpf_pos),
                "irr-plcp": conv.irr_plcp,
                "lex-parse": conv.lex_parse.phrases,
                "lz-parse": conv.lz_parse.phrases,
            }
        except StructuralError as exc:
            checks.append(Check(f"{mode}:{exc.invariant}", False, exc.detail))
            continue
        for name, want in expected.items():
            checks.append(Check(f"{mode}:{name}", got[name] == want))
        e = g.num_edges
        r = conv.rlbwt.r
        checks.append(Check(f"{mode}:r<=e_R", r <= e, f"r={r} e_R={e}"))
        checks.append(Check(f"{mode}:z<=e_R", len(conv.lz_parse) <= e, f"z={len(conv.lz_parse)}"))
        checks.append(Check(f"{mode}:lex<=2r", len(conv.lex_parse) <= 2 * r, f"lex={len(conv.lex_parse)}"))
        checks.append(Check(f"{mode}:glpf-size<=e_R",
                            max(len(conv.glpf_lex), len(conv.glpf_pos)) <= e))
        worst = max(conv.visits().values())
        checks.append(Check(f"{mode}:visits<=2e_R", worst <= 2 * e, f"max visits {worst}"))
    return checks


def format_report(checks: list[Check]) -> str:
    width = max(len(c.name) for c in checks)
    lines = []
    for c in checks:
        status = "PASS" if c.ok else "FAIL"
        line = f"{c.name:<{width}}  {status}"
        if c.detail:
            line += f"  {c.detail}"
        lines.append(line)
    return "\n".join(lines) + "\n"
