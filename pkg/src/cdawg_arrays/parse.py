"""Greedy lex-parse and LZ-parse from sampled GLPF arrays.

Phrase ``i`` starts at ``p_i`` and has length ``max(GLPF[p_i], 1)``.  With
LPF this is the LZ77 parse in which a phrase's earlier occurrence may
overlap the phrase itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import StructuralError
from .glpf import SparseGlpf

KINDS = {"lex": "lex", "lz": "pos"}


@dataclass
class Parse:
    kind: str
    phrases: list[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.phrases)


def greedy_parse(s: SparseGlpf, kind: str) -> Parse:
    if KINDS.get(kind) != s.lower_order:
        raise ValueError(f"{kind}-parse needs GLPF samples under {KINDS.get(kind)!r}")
    n = s.n
    positions, values = s.positions, s.values
    if not positions or positions[0] != 1:
        raise StructuralError("first-position-sampled", "position 1 is not sampled")
    phrases = []
    j = 0
    p = 1
    while p <= n:
        # sample cursor only moves forward
        while j + 1 < len(positions) and positions[j + 1] <= p:
            j += 1
        val = values[j] - (p - positions[j])
        if val < 0:
            raise StructuralError("interpolation-nonnegative", f"value at {p} would be negative")
        ln = max(val, 1)
        phrases.append((p, ln))
        p += ln
    if p != n + 1:
        raise StructuralError("parse-cover", f"phrases end at {p - 1}, expected {n}")
    return Parse(kind=kind, phrases=phrases)


def lex_parse(s_lex: SparseGlpf) -> Parse:
    return greedy_parse(s_lex, "lex")


def lz_parse(s_pos: SparseGlpf) -> Parse:
    return greedy_parse(s_pos, "lz")


def format_parse(parse: Parse) -> str:
    lines = [f"# {parse.kind}-parse phrases={len(parse)}"]
    lines.extend(f"{p}\t{ln}" for p, ln in parse.phrases)
    return "\n".join(lines) + "\n"
