"""Preprocessing that turns a CDAWG into an ordered CDAWG.

Tables, per node ``v``:

* ``repr_minus[v]``: length of the longest root-to-``v`` path, and
  ``primary_minus[f]`` marking the in-edge that path ends with;
* ``shortest_minus[v]`` and ``fstsym_shortest[v]``: length and first symbol
  of the shortest root-to-``v`` path;
* ``repr_plus[order][v]``: length of the smallest ``v``-to-sink path under
  the lower order (``"lex"`` or ``"pos"``), with ``primary_plus[order][f]``
  marking the out-edge it starts with;
* ``nleaves[v]``: number of ``v``-to-sink paths.

Out-edges are sorted by first symbol; in-edges by decreasing
``repr_minus[src] + |label|``.  None of this reads the text, so text-free
graphs are annotated identically.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cdawg import Cdawg
from .errors import StructuralError

LOWER_ORDERS = ("lex", "pos")


def _dfs_fold(g: Cdawg, start: int, adjacency: list[list[int]], far: list[int], counter: list[int]):
    """Iterative post-order DFS with a per-node cache flag.

    Yields ``(v, f)`` once the far end of edge ``f`` is finished (so its
    table entries can be folded into ``v``), then ``(v, -1)`` when all of
    ``v``'s edges have been folded.  ``counter[0]`` counts edge inspections;
    an edge is inspected at most twice (before and after descending).
    """
    done = bytearray(g.num_nodes)
    cursor = [0] * g.num_nodes
    stack = [start]
    visits = 0
    while stack:
        v = stack[-1]
        edges = adjacency[v]
        i = cursor[v]
        if i < len(edges):
            f = edges[i]
            w = far[f]
            visits += 1
            if done[w]:
                cursor[v] = i + 1
                yield v, f
            else:
                stack.append(w)
        else:
            done[v] = 1
            stack.pop()
            yield v, -1
    counter[0] += visits


def prep_upward(g: Cdawg):
    """Longest/shortest upper-path tables and (-)-primary flags.

    Returns ``(repr_minus, shortest_minus, fstsym_shortest, primary_minus, visits)``;
    ``fstsym_shortest`` is -1 at the root.
    """
    V = g.num_nodes
    repr_minus = [0] * V
    shortest = [0] * V
    fstsym = [-1] * V
    primary = [False] * g.num_edges
    best_len = [-1] * V
    best_edge = [-1] * V
    short_len = [-1] * V
    counter = [0]
    src, length = g.src, g.length
    for v, f in _dfs_fold(g, g.sink, g.in_edges, src, counter):
        if f >= 0:
            w = src[f]
            cand = repr_minus[w] + length[f]
            if cand > best_len[v]:
                best_len[v] = cand
                best_edge[v] = f
            cand = shortest[w] + length[f]
            if short_len[v] < 0 or cand < short_len[v]:
                short_len[v] = cand
                fstsym[v] = g.first[f] if shortest[w] == 0 else fstsym[w]
        elif best_edge[v] >= 0:
            repr_minus[v] = best_len[v]
            shortest[v] = short_len[v]
            primary[best_edge[v]] = True
    return repr_minus, shortest, fstsym, primary, counter[0]


def prep_downward(g: Cdawg, lower_order: str):
    """Lower representative lengths and (+)-primary flags under ``lower_order``.

    The candidate ``X . repr_plus(w)`` of each out-edge is summarized by its
    first symbol and total length; under ``lex`` the first symbol decides
    (siblings differ in it), under ``pos`` the longer candidate wins.
    Returns ``(repr_plus, primary_plus, visits)``.
    """
    if lower_order not in LOWER_ORDERS:
        raise ValueError(f"unknown lower order {lower_order!r}")
    V = g.num_nodes
    repr_plus = [0] * V
    primary = [False] * g.num_edges
    best_edge = [-1] * V
    best_key = [0] * V
    counter = [0]
    dst, length, first = g.dst, g.length, g.first
    by_lex = lower_order == "lex"
    for v, f in _dfs_fold(g, g.root, g.out_edges, dst, counter):
        if f >= 0:
            total = length[f] + repr_plus[dst[f]]
            if by_lex:
                better = best_edge[v] < 0 or first[f] < best_key[v]
                key = first[f]
            else:
                if total == best_key[v]:
                    raise StructuralError("distinct-lower-lengths", f"tie at node {v}")
                better = total > best_key[v]
                key = total
            if better:
                best_edge[v] = f
                best_key[v] = key
        elif best_edge[v] >= 0:
            e = best_edge[v]
            repr_plus[v] = length[e] + repr_plus[dst[e]]
            primary[e] = True
    return repr_plus, primary, counter[0]


def count_sink_paths(g: Cdawg):
    """``nleaves`` table and visit count."""
    nleaves = [0] * g.num_nodes
    nleaves[g.sink] = 1
    counter = [0]
    dst = g.dst
    for v, f in _dfs_fold(g, g.root, g.out_edges, dst, counter):
        if f >= 0:
            nleaves[v] += nleaves[dst[f]]
            if nleaves[v] > g.n:
                raise StructuralError("path-count", f"node {v} has more than n = {g.n} lower paths")
    return nleaves, counter[0]


def sort_edges(g: Cdawg, repr_minus: list[int]):
    """Out-edges by first symbol, in-edges by decreasing upper length through them."""
    # bucket pass over all edges by first symbol, distributed to the sources
    buckets: dict[int, list[int]] = {}
    for f, c in enumerate(g.first):
        buckets.setdefault(c, []).append(f)
    out_sorted: list[list[int]] = [[] for _ in range(g.num_nodes)]
    for c in sorted(buckets):
        for f in buckets[c]:
            out = out_sorted[g.src[f]]
            if out and g.first[out[-1]] == c:
                raise StructuralError("determinism", f"node {g.src[f]} repeats symbol {c}")
            out.append(f)

    key = [repr_minus[g.src[f]] + g.length[f] for f in range(g.num_edges)]
    in_sorted = []
    for v in range(g.num_nodes):
        edges = sorted(g.in_edges[v], key=key.__getitem__, reverse=True)
        for a, b in zip(edges, edges[1:]):
            if key[a] == key[b]:
                raise StructuralError("distinct-upper-lengths", f"tie among in-edges of node {v}")
        in_sorted.append(edges)
    return out_sorted, in_sorted


@dataclass(eq=False)
class OrderedCdawg:
    graph: Cdawg
    repr_minus: list[int]
    shortest_minus: list[int]
    fstsym_shortest: list[int]
    primary_minus: list[bool]
    repr_plus: dict[str, list[int]]
    primary_plus: dict[str, list[bool]]
    nleaves: list[int]
    out_sorted: list[list[int]]
    in_sorted: list[list[int]]
    in_rank: list[int]  # index of each edge within in_sorted[dst]
    visits: dict[str, int] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.graph.n

    def upper_key(self, f: int) -> int:
        """``|repr_-(src)| + |label|``, the ordering key of in-edges."""
        return self.repr_minus[self.graph.src[f]] + self.graph.length[f]


def annotate(g: Cdawg, check: bool = True) -> OrderedCdawg:
    """Run every preprocessing pass and return the ordered CDAWG.

    With ``check`` set, the upper-length contiguity that the text-free
    preceding-symbol lookup depends on is verified for every node.
    """
    repr_minus, shortest, fstsym, pminus, v_up = prep_upward(g)
    repr_plus, pplus, visits = {}, {}, {"prep_upward": v_up}
    for order in LOWER_ORDERS:
        repr_plus[order], pplus[order], visits[f"prep_downward_{order}"] = prep_downward(g, order)
    nleaves, visits["count_sink_paths"] = count_sink_paths(g)
    out_sorted, in_sorted = sort_edges(g, repr_minus)
    in_rank = [0] * g.num_edges
    for edges in in_sorted:
        for i, f in enumerate(edges):
            in_rank[f] = i
    oc = OrderedCdawg(graph=g, repr_minus=repr_minus, shortest_minus=shortest,
                      fstsym_shortest=fstsym, primary_minus=pminus, repr_plus=repr_plus,
                      primary_plus=pplus, nleaves=nleaves, out_sorted=out_sorted,
                      in_sorted=in_sorted, in_rank=in_rank, visits=visits)
    if check:
        check_contiguity(oc)
    return oc


def check_contiguity(oc: OrderedCdawg) -> None:
    """Upper-path lengths of every node form one interval, tiled by its in-edges.

    In-edge ``f`` contributes the lengths ``shortest(src) + |X| .. repr(src) + |X|``;
    consecutive in-edges (in sorted order) must abut exactly.
    """
    g = oc.graph
    for v in range(g.num_nodes):
        edges = oc.in_sorted[v]
        for a, b in zip(edges, edges[1:]):
            lo_a = oc.shortest_minus[g.src[a]] + g.length[a]
            hi_b = oc.upper_key(b)
            if lo_a != hi_b + 1:
                raise StructuralError("upper-length-contiguity",
                                      f"in-edges {a}, {b} of node {v} leave a gap or overlap")
        if edges:
            if oc.upper_key(edges[0]) != oc.repr_minus[v]:
                raise StructuralError("upper-length-contiguity", f"node {v} maximum mismatch")
            last = edges[-1]
            if oc.shortest_minus[g.src[last]] + g.length[last] != oc.shortest_minus[v]:
                raise StructuralError("upper-length-contiguity", f"node {v} minimum mismatch")


def precsym(oc: OrderedCdawg, f: int) -> int:
    """Symbol preceding the canonical suffix certified by (-)-secondary edge ``f``.

    The suffix one position to the left enters ``dst(f)`` through the in-edge
    ranked just before ``f`` along its shortest upper path; that path's first
    symbol is the answer.  Reads no text.
    """
    g = oc.graph
    if oc.primary_minus[f]:
        raise ValueError(f"edge {f} is (-)-primary")
    w = g.dst[f]
    i = oc.in_rank[f]
    if i == 0:
        raise StructuralError("upper-length-contiguity", f"secondary edge {f} has no predecessor")
    prev = oc.in_sorted[w][i - 1]
    u = g.src[prev]
    if oc.shortest_minus[u] + g.length[prev] != oc.upper_key(f) + 1:
        raise StructuralError("upper-length-contiguity", f"edge {f} and its predecessor do not abut")
    return g.first[prev] if oc.shortest_minus[u] == 0 else oc.fstsym_shortest[u]


def canonical_position(oc: OrderedCdawg, f: int, lower_order: str) -> int:
    """Text position of ``repr_-(src) . label . repr_+(dst)``."""
    g = oc.graph
    return g.n + 1 - oc.upper_key(f) - oc.repr_plus[lower_order][g.dst[f]]
