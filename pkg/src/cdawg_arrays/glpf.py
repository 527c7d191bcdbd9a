"""Quasi-irreducible GLPF arrays by backward DFS from the sink.

``GLPF[p]`` is the longest common prefix of ``T_p`` with any suffix that is
smaller under the lower order; with ``"lex"`` this is PLCP, with ``"pos"``
it is LPF.  Only positions of canonical suffixes are sampled; every other
entry follows from ``A[p] = A[p - 1] - 1``.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field

from .errors import StructuralError
from .order import LOWER_ORDERS, OrderedCdawg
from .rlbwt import RunLengthBwt


@dataclass
class SparseGlpf:
    lower_order: str
    n: int
    positions: list[int]
    values: list[int]
    visits: int = field(default=0, compare=False)

    @property
    def entries(self) -> list[tuple[int, int]]:
        return list(zip(self.positions, self.values))

    def __len__(self) -> int:
        return len(self.positions)


def qirr_glpf(oc: OrderedCdawg, lower_order: str) -> SparseGlpf:
    """Sampled GLPF entries, emitted in increasing text position.

    In-edges are visited by decreasing ``|repr_-(src)| + |label|``.  A
    (+)-primary in-edge is followed upwards; a (+)-secondary in-edge
    ``(w, X, v)`` certifies the suffix ``repr_-(w) X repr_+(v)``, whose GLPF
    value is ``|repr_-(w)|``.  The root contributes the lower-order-smallest
    suffix with value 0.
    """
    if lower_order not in LOWER_ORDERS:
        raise ValueError(f"unknown lower order {lower_order!r}")
    g = oc.graph
    n = g.n
    src, length = g.src, g.length
    repr_minus = oc.repr_minus
    repr_plus = oc.repr_plus[lower_order]
    primary = oc.primary_plus[lower_order]

    positions: list[int] = []
    values: list[int] = []

    def emit(p: int, val: int):
        if positions and p <= positions[-1]:
            raise StructuralError("emission-order",
                                  f"position {p} emitted after {positions[-1]}")
        positions.append(p)
        values.append(val)

    visits = 0
    cursor = [0] * g.num_nodes
    stack = [g.sink]
    while stack:
        v = stack[-1]
        if v == g.root:
            stack.pop()
            emit(n + 1 - repr_plus[g.root], 0)
            continue
        edges = oc.in_sorted[v]
        i = cursor[v]
        if i == len(edges):
            stack.pop()
            continue
        cursor[v] = i + 1
        f = edges[i]
        visits += 1
        w = src[f]
        if primary[f]:
            stack.append(w)
        else:
            emit(n + 1 - repr_minus[w] - length[f] - repr_plus[v], repr_minus[w])
    return SparseGlpf(lower_order=lower_order, n=n, positions=positions,
                      values=values, visits=visits)


def expand_glpf(s: SparseGlpf, n: int | None = None) -> list[int]:
    """Full array (entry ``p - 1`` for position ``p``) by interpolation."""
    n = s.n if n is None else n
    if not s.positions or s.positions[0] != 1:
        raise StructuralError("first-position-sampled", "position 1 is not sampled")
    out = [0] * n
    j = 0
    cur = 0
    for p in range(1, n + 1):
        if j < len(s.positions) and s.positions[j] == p:
            cur = s.values[j]
            j += 1
        else:
            cur -= 1
            if cur < 0:
                raise StructuralError("interpolation-nonnegative", f"value at {p} would be negative")
        out[p - 1] = cur
    if j != len(s.positions):
        raise StructuralError("positions-in-range", f"sampled position beyond n = {n}")
    return out


def glpf_at(s: SparseGlpf, p: int) -> int:
    """Value at position ``p`` from the nearest sample at or before it."""
    j = bisect_right(s.positions, p) - 1
    if j < 0:
        raise StructuralError("first-position-sampled", f"no sample at or before {p}")
    val = s.values[j] - (p - s.positions[j])
    if val < 0:
        raise StructuralError("interpolation-nonnegative", f"value at {p} would be negative")
    return val


def irreducible_plcp(s_lex: SparseGlpf, r: RunLengthBwt) -> list[tuple[int, int]]:
    """``(pos, PLCP[pos])`` for every rank that starts a BWT run, in rank order."""
    if s_lex.lower_order != "lex":
        raise ValueError("irreducible PLCP needs the lex-order GLPF samples")
    out = []
    prev = None
    for c, _, pos in r.emissions:
        if c != prev:
            out.append((pos, glpf_at(s_lex, pos)))
        prev = c
    return out


def format_sparse(s: SparseGlpf) -> str:
    lines = [f"# glpf order={s.lower_order} n={s.n} entries={len(s)}"]
    lines.extend(f"{p}\t{v}" for p, v in zip(s.positions, s.values))
    return "\n".join(lines) + "\n"


def format_array(name: str, values: list[int]) -> str:
    lines = [f"# {name} n={len(values)}"]
    lines.extend(str(v) for v in values)
    return "\n".join(lines) + "\n"


def format_pairs(name: str, pairs: list[tuple[int, int]]) -> str:
    lines = [f"# {name} size={len(pairs)}"]
    lines.extend(f"{p}\t{v}" for p, v in pairs)
    return "\n".join(lines) + "\n"
