"""End-to-end conversion of one CDAWG into every supported output."""

from __future__ import annotations

from dataclasses import dataclass

from .cdawg import Cdawg, build, strip_text
from .glpf import SparseGlpf, irreducible_plcp, qirr_glpf
from .order import OrderedCdawg, annotate
from .parse import Parse, lex_parse, lz_parse
from .rlbwt import RunLengthBwt, rec_rbwt
from .text import Text


@dataclass
class Conversion:
    ordered: OrderedCdawg
    rlbwt: RunLengthBwt
    glpf_lex: SparseGlpf
    glpf_pos: SparseGlpf
    irr_plcp: list[tuple[int, int]]
    lex_parse: Parse
    lz_parse: Parse

    @property
    def graph(self) -> Cdawg:
        return self.ordered.graph

    def visits(self) -> dict[str, int]:
        out = dict(self.ordered.visits)
        out["rec_rbwt"] = self.rlbwt.visits
        out["qirr_glpf_lex"] = self.glpf_lex.visits
        out["qirr_glpf_pos"] = self.glpf_pos.visits
        return out


def convert(g: Cdawg, check: bool = True) -> Conversion:
    oc = annotate(g, check=check)
    r = rec_rbwt(oc)
    s_lex = qirr_glpf(oc, "lex")
    s_pos = qirr_glpf(oc, "pos")
    return Conversion(ordered=oc, rlbwt=r, glpf_lex=s_lex, glpf_pos=s_pos,
                      irr_plcp=irreducible_plcp(s_lex, r),
                      lex_parse=lex_parse(s_lex), lz_parse=lz_parse(s_pos))


def graph_for(t: Text, mode: str = "text") -> Cdawg:
    g = build(t)
    if mode == "text-free":
        return strip_text(g)
    if mode != "text":
        raise ValueError(f"unknown mode {mode!r}")
    return g
