"""Run-length BWT by forward DFS over the (-)-primary spanning tree."""

from __future__ import annotations

from dataclasses import dataclass, field

from .order import OrderedCdawg, canonical_position, precsym
from .text import SENTINEL


@dataclass
class RunLengthBwt:
    runs: list[tuple[int, int]]
    # (symbol, count, text position of the lex-first suffix of the interval)
    emissions: list[tuple[int, int, int]]
    visits: int = field(default=0, compare=False)

    @property
    def r(self) -> int:
        return len(self.runs)

    @property
    def n(self) -> int:
        return sum(c for _, c in self.runs)


def rec_rbwt(oc: OrderedCdawg, use_text: bool | None = None) -> RunLengthBwt:
    """Emit one BWT interval per (-)-secondary edge, in lexicographic order.

    Out-edges are visited by increasing first symbol.  A (-)-primary edge is
    followed; a (-)-secondary edge ``f`` contributes ``nleaves(dst(f))``
    copies of the symbol preceding its canonical suffix.  Reaching the sink
    contributes the sentinel row of the suffix ``T`` itself.

    ``use_text`` selects how the preceding symbol is found: a text lookup
    (default when the graph carries a text) or the text-free table route.
    """
    g = oc.graph
    n = g.n
    if use_text is None:
        use_text = g.text is not None
    data = g.text.data if use_text else None
    dst = g.dst

    runs: list[tuple[int, int]] = []
    emissions: list[tuple[int, int, int]] = []

    def emit(c: int, count: int, pos: int):
        emissions.append((c, count, pos))
        # merge at the seam only
        if runs and runs[-1][0] == c:
            runs[-1] = (c, runs[-1][1] + count)
        else:
            runs.append((c, count))

    visits = 0
    cursor = [0] * g.num_nodes
    stack = [g.root]
    while stack:
        v = stack[-1]
        if v == g.sink:
            stack.pop()
            emit(SENTINEL, 1, n + 1 - oc.repr_minus[g.sink])
            continue
        edges = oc.out_sorted[v]
        i = cursor[v]
        if i == len(edges):
            stack.pop()
            continue
        cursor[v] = i + 1
        f = edges[i]
        visits += 1
        if oc.primary_minus[f]:
            stack.append(dst[f])
        else:
            p = canonical_position(oc, f, "lex")
            c = data[p - 2] if use_text else precsym(oc, f)
            emit(c, oc.nleaves[dst[f]], p)
    return RunLengthBwt(runs=runs, emissions=emissions, visits=visits)


def expand_bwt(r: RunLengthBwt) -> bytes:
    return b"".join(bytes([c]) * k for c, k in r.runs)


def format_symbol(c: int) -> str:
    """Escaped display of one byte; the sentinel is ``$``."""
    if c == SENTINEL:
        return "$"
    if 0x21 <= c <= 0x7E and c not in (0x24, 0x5C):
        return chr(c)
    return f"\\x{c:02x}"


def format_runs(r: RunLengthBwt) -> str:
    lines = [f"# rlbwt n={r.n} runs={r.r}"]
    lines.extend(f"{format_symbol(c)}\t{k}" for c, k in r.runs)
    return "\n".join(lines) + "\n"
