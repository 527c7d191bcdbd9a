"""CDAWG data model and construction.

The graph is built by compacting the suffix automaton of the text: the
initial state, the sink and every state with at least two outgoing
transitions become nodes, and unary chains between them become labeled
edges.  Edge labels are stored as ``(start, length, first symbol)``; in
text-free mode the start positions (and the text) are dropped.

Node ids follow a topological order, so the root is always ``0`` and the
sink is always ``num_nodes - 1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import StructuralError
from .text import Text

FORMAT_NAME = "cdawg"
FORMAT_VERSION = 1


@dataclass(eq=False)
class Cdawg:
    n: int
    num_nodes: int
    src: list[int]
    dst: list[int]
    length: list[int]
    first: list[int]
    start: list[int] | None = None
    text: Text | None = None
    out_edges: list[list[int]] = field(init=False, repr=False)
    in_edges: list[list[int]] = field(init=False, repr=False)

    def __post_init__(self):
        out_edges = [[] for _ in range(self.num_nodes)]
        in_edges = [[] for _ in range(self.num_nodes)]
        for f, (u, w) in enumerate(zip(self.src, self.dst)):
            out_edges[u].append(f)
            in_edges[w].append(f)
        self.out_edges = out_edges
        self.in_edges = in_edges

    @property
    def root(self) -> int:
        return 0

    @property
    def sink(self) -> int:
        return self.num_nodes - 1

    @property
    def num_edges(self) -> int:
        return len(self.src)

    @property
    def mode(self) -> str:
        return "text" if self.text is not None else "text-free"

    def label(self, f: int) -> bytes:
        """Label content of edge ``f``; needs the text."""
        if self.text is None or self.start is None:
            raise ValueError("label content is unavailable in text-free mode")
        return self.text.factor(self.start[f], self.length[f])

    def out_edge(self, v: int, symbol: int) -> int | None:
        for f in self.out_edges[v]:
            if self.first[f] == symbol:
                return f
        return None


def build(t: Text) -> Cdawg:
    """Build the CDAWG of ``t`` (with-text mode)."""
    data = t.data
    n = len(data)

    # suffix automaton: per-state longest length, suffix link, transitions,
    # and the 0-based end index of the first occurrence
    length = [0]
    link = [-1]
    trans: list[dict[int, int]] = [{}]
    firstpos = [-1]
    last = 0
    for i, c in enumerate(data):
        cur = len(length)
        length.append(length[last] + 1)
        link.append(-1)
        trans.append({})
        firstpos.append(i)
        p = last
        while p != -1 and c not in trans[p]:
            trans[p][c] = cur
            p = link[p]
        if p == -1:
            link[cur] = 0
        else:
            q = trans[p][c]
            if length[p] + 1 == length[q]:
                link[cur] = q
            else:
                clone = len(length)
                length.append(length[p] + 1)
                link.append(link[q])
                trans.append(dict(trans[q]))
                firstpos.append(firstpos[q])
                while p != -1 and trans[p].get(c) == q:
                    trans[p][c] = clone
                    p = link[p]
                link[q] = clone
                link[cur] = clone
        last = cur
    del link

    sink_state = last
    kept = [s for s in range(len(length)) if s == 0 or s == sink_state or len(trans[s]) >= 2]
    # longest-string length is strictly increasing along every edge
    kept.sort(key=length.__getitem__)
    node_of = {s: i for i, s in enumerate(kept)}

    # for unary states: (kept state at the end of the chain, chain length)
    chain_end: dict[int, int] = {}
    chain_len: dict[int, int] = {}

    def resolve(s: int) -> tuple[int, int]:
        if s in node_of:
            return s, 0
        if s in chain_end:
            return chain_end[s], chain_len[s]
        path = []
        while s not in node_of and s not in chain_end:
            path.append(s)
            (s,) = trans[s].values()
        if s in node_of:
            end, dist = s, 0
        else:
            end, dist = chain_end[s], chain_len[s]
        for u in reversed(path):
            dist += 1
            chain_end[u] = end
            chain_len[u] = dist
        return end, dist

    src, dst, lens, first, start = [], [], [], [], []
    for u in kept:
        for c, s in sorted(trans[u].items()):
            end, dist = resolve(s)
            src.append(node_of[u])
            dst.append(node_of[end])
            lens.append(dist + 1)
            first.append(c)
            start.append(firstpos[s] + 1)

    return Cdawg(n=n, num_nodes=len(kept), src=src, dst=dst, length=lens,
                 first=first, start=start, text=t)


def strip_text(g: Cdawg) -> Cdawg:
    """Copy of ``g`` without the text or label start positions."""
    return Cdawg(n=g.n, num_nodes=g.num_nodes, src=list(g.src), dst=list(g.dst),
                 length=list(g.length), first=list(g.first))


def stats(g: Cdawg) -> tuple[int, int, int]:
    """``(n, node count, e_R)``."""
    return g.n, g.num_nodes, g.num_edges


def validate(g: Cdawg) -> None:
    """Check the structural invariants of a CDAWG; raise StructuralError on the first violation.

    This is a consistency check for loaded graphs, not a proof that ``g``
    is the CDAWG of its text (the verify command compares against the
    oracle for that).
    """
    V, E = g.num_nodes, g.num_edges
    if V < 2:
        raise StructuralError("node-count", f"need at least root and sink, got {V}")
    for name, arr in (("dst", g.dst), ("length", g.length), ("first", g.first)):
        if len(arr) != E:
            raise StructuralError("edge-arrays", f"{name} has {len(arr)} entries, expected {E}")
    if g.start is not None and len(g.start) != E:
        raise StructuralError("edge-arrays", "start array length mismatch")
    for f in range(E):
        u, w = g.src[f], g.dst[f]
        if not (0 <= u < V and 0 <= w < V):
            raise StructuralError("edge-endpoints", f"edge {f} points outside the node range")
        if u >= w:
            raise StructuralError("topological-order", f"edge {f} goes from {u} to {w}")
        if g.length[f] < 1:
            raise StructuralError("label-length", f"edge {f} has length {g.length[f]}")
    for v in range(V):
        if v != 0 and not g.in_edges[v]:
            raise StructuralError("unique-root", f"node {v} has no in-edges")
        if v != V - 1 and not g.out_edges[v]:
            raise StructuralError("unique-sink", f"node {v} has no out-edges")
        symbols = [g.first[f] for f in g.out_edges[v]]
        if len(set(symbols)) != len(symbols):
            raise StructuralError("determinism", f"node {v} has repeated first symbols")
    if g.in_edges[0]:
        raise StructuralError("unique-root", "root has in-edges")
    if g.out_edges[V - 1]:
        raise StructuralError("unique-sink", "sink has out-edges")

    # every root-to-sink path spells a suffix: path count n, path lengths 1..n
    paths = [0] * V
    paths[V - 1] = 1
    for v in range(V - 2, -1, -1):
        paths[v] = sum(paths[g.dst[f]] for f in g.out_edges[v])
    if paths[0] != g.n:
        raise StructuralError("path-count", f"{paths[0]} root-to-sink paths for n = {g.n}")
    lo = [0] * V
    hi = [0] * V
    for v in range(V - 2, -1, -1):
        lo[v] = min(g.length[f] + lo[g.dst[f]] for f in g.out_edges[v])
        hi[v] = max(g.length[f] + hi[g.dst[f]] for f in g.out_edges[v])
    if lo[0] != 1 or hi[0] != g.n:
        raise StructuralError("path-lengths", f"path lengths span {lo[0]}..{hi[0]}, expected 1..{g.n}")

    if g.text is not None:
        if g.text.n != g.n:
            raise StructuralError("text-length", f"text has length {g.text.n}, header says {g.n}")
        for f in range(E):
            s = g.start[f]
            if not 1 <= s <= g.n - g.length[f] + 1:
                raise StructuralError("label-bounds", f"edge {f} label leaves the text")
            if g.text.at(s) != g.first[f]:
                raise StructuralError("label-first-symbol", f"edge {f} first symbol disagrees with text")


# -- serialization -----------------------------------------------------------

def to_json(g: Cdawg) -> dict:
    """Versioned JSON document for ``g``.

    Layout::

        {"format": "cdawg", "version": 1, "n": .., "nodes": .., "edges": ..,
         "mode": "text" | "text-free",
         "text": <hex of T without sentinel>,        # text mode only
         "edge_records": [[src, dst, length, first, start?], ...]}
    """
    with_text = g.text is not None
    records = []
    for f in range(g.num_edges):
        rec = [g.src[f], g.dst[f], g.length[f], g.first[f]]
        if with_text:
            rec.append(g.start[f])
        records.append(rec)
    doc = {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "n": g.n,
        "nodes": g.num_nodes,
        "edges": g.num_edges,
        "mode": g.mode,
    }
    if with_text:
        doc["text"] = g.text.body.hex()
    doc["edge_records"] = records
    return doc


def from_json(doc: dict) -> Cdawg:
    try:
        return _from_json(doc)
    except (KeyError, TypeError, IndexError) as exc:
        raise StructuralError("format", f"malformed graph document: {exc!r}") from None


def _from_json(doc: dict) -> Cdawg:
    if doc.get("format") != FORMAT_NAME:
        raise StructuralError("format", f"not a cdawg document: {doc.get('format')!r}")
    if doc.get("version") != FORMAT_VERSION:
        raise StructuralError("format", f"unsupported version {doc.get('version')!r}")
    mode = doc["mode"]
    if mode not in ("text", "text-free"):
        raise StructuralError("format", f"unknown mode {mode!r}")
    records = doc["edge_records"]
    if len(records) != doc["edges"]:
        raise StructuralError("edge-count", f"header says {doc['edges']} edges, found {len(records)}")
    width = 5 if mode == "text" else 4
    for rec in records:
        if len(rec) != width:
            raise StructuralError("format", f"edge record {rec!r} should have {width} fields")
    V = doc["nodes"]
    for rec in records:
        if not (0 <= rec[0] < V and 0 <= rec[1] < V):
            raise StructuralError("edge-endpoints", f"edge record {rec!r} points outside 0..{V - 1}")
    cols = list(zip(*records)) if records else [()] * width
    text = start = None
    if mode == "text":
        text = Text(bytes.fromhex(doc["text"]) + b"\x00")
        start = list(cols[4])
    g = Cdawg(n=doc["n"], num_nodes=doc["nodes"], src=list(cols[0]), dst=list(cols[1]),
              length=list(cols[2]), first=list(cols[3]), start=start, text=text)
    return g


def save(g: Cdawg, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(to_json(g), fh, separators=(",", ":"))
        fh.write("\n")


def load(path, check: bool = True) -> Cdawg:
    with open(path, encoding="utf-8") as fh:
        g = from_json(json.load(fh))
    if check:
        validate(g)
    return g
