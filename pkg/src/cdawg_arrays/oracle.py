"""Brute-force ground truth.

Everything here is deliberately naive (quadratic or worse) and shares no
code with the conversion algorithms: suffixes are compared directly,
lcp values come from symbol-by-symbol scans, and the reference CDAWG is
obtained by minimizing an explicitly built suffix tree.

Arrays indexed by text position are returned as lists where entry
``p - 1`` holds the value for position ``p``; SA stores 1-based positions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cdawg import Cdawg
from .text import Text


def lcp(t: Text, p: int, q: int) -> int:
    """Longest common prefix length of the suffixes at positions ``p`` and ``q``."""
    d = t.data
    n = len(d)
    i, j, k = p - 1, q - 1, 0
    while i + k < n and j + k < n and d[i + k] == d[j + k]:
        k += 1
    return k


def suffix_array(t: Text) -> list[int]:
    d = t.data
    return [i + 1 for i in sorted(range(len(d)), key=lambda i: d[i:])]


def inverse(sa: list[int]) -> list[int]:
    """ISA as a position-indexed list of 1-based ranks."""
    isa = [0] * len(sa)
    for k, p in enumerate(sa, 1):
        isa[p - 1] = k
    return isa


def bwt(t: Text, sa: list[int] | None = None) -> bytes:
    sa = sa or suffix_array(t)
    d = t.data
    return bytes(d[-1] if p == 1 else d[p - 2] for p in sa)


def plcp(t: Text, sa: list[int] | None = None) -> list[int]:
    sa = sa or suffix_array(t)
    out = [0] * t.n
    for k in range(1, len(sa)):
        out[sa[k] - 1] = lcp(t, sa[k], sa[k - 1])
    return out


def lpf(t: Text) -> list[int]:
    out = [0] * t.n
    for p in range(1, t.n + 1):
        best = 0
        for q in range(1, p):
            best = max(best, lcp(t, p, q))
        out[p - 1] = best
    return out


def glpf(t: Text, order: str) -> list[int]:
    """GLPF by its definition: max lcp against every strictly smaller suffix."""
    d = t.data
    n = t.n
    if order == "pos":
        smaller = lambda q, p: q < p  # noqa: E731
    elif order == "lex":
        smaller = lambda q, p: d[q - 1:] < d[p - 1:]  # noqa: E731
    else:
        raise ValueError(order)
    return [max([lcp(t, p, q) for q in range(1, n + 1) if smaller(q, p)] or [0])
            for p in range(1, n + 1)]


@dataclass
class FullArrays:
    sa: list[int]
    isa: list[int]
    bwt: bytes
    plcp: list[int]
    lpf: list[int]


def full_arrays(t: Text) -> FullArrays:
    sa = suffix_array(t)
    return FullArrays(sa=sa, isa=inverse(sa), bwt=bwt(t, sa), plcp=plcp(t, sa), lpf=lpf(t))


def run_length(symbols: bytes) -> list[tuple[int, int]]:
    runs: list[tuple[int, int]] = []
    for c in symbols:
        if runs and runs[-1][0] == c:
            runs[-1] = (c, runs[-1][1] + 1)
        else:
            runs.append((c, 1))
    return runs


def irreducible_plcp(a: FullArrays) -> list[tuple[int, int]]:
    """(position, PLCP) pairs at ranks that start a BWT run, in rank order."""
    out = []
    for k, p in enumerate(a.sa):
        if k == 0 or a.bwt[k] != a.bwt[k - 1]:
            out.append((p, a.plcp[p - 1]))
    return out


def greedy_parse(values: list[int], n: int) -> list[tuple[int, int]]:
    """Greedy left-to-right partition with phrase length max(L[p], 1)."""
    assert len(values) == n
    phrases = []
    p = 1
    while p <= n:
        ln = max(values[p - 1], 1)
        phrases.append((p, ln))
        p += ln
    return phrases


def occurs_before(t: Text, p: int, ln: int) -> bool:
    """Whether ``T[p..p+ln-1]`` has an occurrence starting at some q < p."""
    target = t.factor(p, ln)
    # any hit inside data[: p - 2 + ln] starts at 0-based index <= p - 2
    return t.data.find(target, 0, p - 2 + ln) != -1


# -- reference CDAWG ---------------------------------------------------------

class _StNode:
    __slots__ = ("children",)

    def __init__(self):
        # first symbol -> [start (1-based), length, child]
        self.children: dict[int, list] = {}


def suffix_tree(t: Text) -> _StNode:
    """Compacted suffix tree by inserting suffixes one at a time."""
    d = t.data
    n = len(d)
    root = _StNode()
    for p in range(1, n + 1):
        node, i = root, p - 1
        while True:
            c = d[i]
            edge = node.children.get(c)
            if edge is None:
                node.children[c] = [i + 1, n - i, _StNode()]
                break
            s, ln, child = edge
            k = 0
            while k < ln and d[s - 1 + k] == d[i + k]:
                k += 1
            if k == ln:
                node, i = child, i + ln
                continue
            # split the edge after k symbols; k >= 1 because first symbols match
            mid = _StNode()
            mid.children[d[s - 1 + k]] = [s + k, ln - k, child]
            mid.children[d[i + k]] = [i + k + 1, n - i - k, _StNode()]
            edge[1] = k
            edge[2] = mid
            break
    return root


def naive_cdawg(t: Text) -> Cdawg:
    """Minimize the suffix tree by merging isomorphic subtrees.

    Subtrees are identified by signatures built from label *contents* and
    child class ids; the signature table is a dict keyed by the full
    signature, so equal hashes with different contents never merge.
    """
    d = t.data
    root = suffix_tree(t)

    classes: dict[tuple, int] = {}
    class_edges: list[list[tuple[bytes, int, int]]] = []  # per class: (label, start, child class)
    node_class: dict[int, int] = {}

    # iterative post-order
    stack = [(root, False)]
    while stack:
        node, expanded = stack.pop()
        if not expanded:
            stack.append((node, True))
            for _, _, child in node.children.values():
                stack.append((child, False))
            continue
        edges = []
        for s, ln, child in node.children.values():
            edges.append((d[s - 1 : s - 1 + ln], s, node_class[id(child)]))
        edges.sort()
        sig = tuple((lab, cid) for lab, _, cid in edges)
        cid = classes.get(sig)
        if cid is None:
            cid = classes[sig] = len(class_edges)
            class_edges.append(edges)
        node_class[id(node)] = cid

    root_class = node_class[id(root)]
    # topological numbering (Kahn) starting at the root class
    indeg = [0] * len(class_edges)
    for edges in class_edges:
        for _, _, c in edges:
            indeg[c] += 1
    order = [root_class]
    for u in order:
        for _, _, c in class_edges[u]:
            indeg[c] -= 1
            if indeg[c] == 0:
                order.append(c)
    node_id = {c: i for i, c in enumerate(order)}

    src, dst, length, first, start = [], [], [], [], []
    for u in order:
        for lab, s, c in class_edges[u]:
            src.append(node_id[u])
            dst.append(node_id[c])
            length.append(len(lab))
            first.append(lab[0])
            start.append(s)
    return Cdawg(n=t.n, num_nodes=len(order), src=src, dst=dst, length=length,
                 first=first, start=start, text=t)


def isomorphic(g1: Cdawg, g2: Cdawg) -> bool:
    """Label-respecting isomorphism of two deterministic graphs.

    Labels are compared by content when both graphs carry a text, otherwise
    by (length, first symbol).
    """
    if (g1.n, g1.num_nodes, g1.num_edges) != (g2.n, g2.num_nodes, g2.num_edges):
        return False
    by_content = g1.text is not None and g2.text is not None
    m12 = {g1.root: g2.root}
    m21 = {g2.root: g1.root}
    todo = [g1.root]
    while todo:
        u1 = todo.pop()
        u2 = m12[u1]
        if len(g1.out_edges[u1]) != len(g2.out_edges[u2]):
            return False
        for f1 in g1.out_edges[u1]:
            f2 = g2.out_edge(u2, g1.first[f1])
            if f2 is None or g1.length[f1] != g2.length[f2]:
                return False
            if by_content and g1.label(f1) != g2.label(f2):
                return False
            w1, w2 = g1.dst[f1], g2.dst[f2]
            if w1 in m12 or w2 in m21:
                if m12.get(w1) != w2 or m21.get(w2) != w1:
                    return False
                continue
            m12[w1] = w2
            m21[w2] = w1
            todo.append(w1)
    return len(m12) == g1.num_nodes


# -- path enumeration and canonical suffixes ---------------------------------

def suffix_path(g: Cdawg, t: Text, p: int) -> list[int]:
    """Edges of the root-to-sink path spelling ``T_p`` (matched by content)."""
    d = t.data
    i = p - 1
    v = g.root
    path = []
    while v != g.sink:
        f = g.out_edge(v, d[i])
        assert f is not None, f"suffix {p} falls off the graph"
        lab = g.label(f)
        assert d[i : i + len(lab)] == lab, f"suffix {p} mismatches edge {f}"
        path.append(f)
        i += len(lab)
        v = g.dst[f]
    assert i == len(d), f"suffix {p} reaches the sink early"
    return path


def upper_paths(g: Cdawg, v: int) -> list[list[int]]:
    """All root-to-``v`` paths as edge lists."""
    if v == g.root:
        return [[]]
    out = []
    for f in g.in_edges[v]:
        for path in upper_paths(g, g.src[f]):
            out.append(path + [f])
    return out


def lower_paths(g: Cdawg, v: int) -> list[list[int]]:
    """All ``v``-to-sink paths as edge lists."""
    if v == g.sink:
        return [[]]
    out = []
    for f in g.out_edges[v]:
        for path in lower_paths(g, g.dst[f]):
            out.append([f] + path)
    return out


def spell(g: Cdawg, path: list[int]) -> bytes:
    return b"".join(g.label(f) for f in path)


@dataclass
class BruteClassification:
    """Primary edges found by enumerating every upper/lower path."""
    primary_minus: set[int]
    primary_plus: set[int]
    repr_minus: list[bytes]
    repr_plus: list[bytes]


def classify(g: Cdawg, lower_order: str) -> BruteClassification:
    repr_minus, repr_plus = [], []
    pm, pp = set(), set()
    for v in range(g.num_nodes):
        ups = [(spell(g, path), path) for path in upper_paths(g, v)]
        s, path = max(ups, key=lambda x: len(x[0]))
        repr_minus.append(s)
        if path:
            pm.add(path[-1])
        downs = [(spell(g, path), path) for path in lower_paths(g, v)]
        if lower_order == "lex":
            s, path = min(downs, key=lambda x: x[0])
        elif lower_order == "pos":
            s, path = max(downs, key=lambda x: len(x[0]))
        else:
            raise ValueError(lower_order)
        repr_plus.append(s)
        if path:
            pp.add(path[0])
    return BruteClassification(pm, pp, repr_minus, repr_plus)


@dataclass(frozen=True)
class Canonical:
    pos: int
    side: str           # "-" or "+"
    certificate: int | None  # edge id; None for the trivial suffix
    index: int          # 1-based index of the certificate on the path (0 / len+1 if trivial)


def enumerate_canonical(t: Text, g: Cdawg, upper_order: str = "pos",
                        lower_order: str = "lex") -> set[Canonical]:
    """Canonical suffixes on both sides, by testing every suffix's factoring."""
    if upper_order != "pos":
        raise ValueError("only the text order is supported as upper order")
    cl = classify(g, lower_order)
    out: set[Canonical] = set()
    for p in range(1, t.n + 1):
        path = suffix_path(g, t, p)
        ell = len(path)
        sec_minus = [k for k, f in enumerate(path, 1) if f not in cl.primary_minus]
        sec_plus = [k for k, f in enumerate(path, 1) if f not in cl.primary_plus]
        # (-) side: highest secondary edge, primary-plus below it
        if not sec_minus:
            out.add(Canonical(p, "-", None, ell + 1))
        else:
            k = sec_minus[0]
            if all(f in cl.primary_plus for f in path[k:]):
                out.add(Canonical(p, "-", path[k - 1], k))
        # (+) side: lowest secondary edge, primary-minus above it
        if not sec_plus:
            out.add(Canonical(p, "+", None, 0))
        else:
            k = sec_plus[-1]
            if all(f in cl.primary_minus for f in path[: k - 1]):
                out.add(Canonical(p, "+", path[k - 1], k))
    return out


def left_maximal(t: Text, p: int, ln: int) -> bool:
    """Whether ``T[p..p+ln-1]`` is a prefix of T or is preceded by two distinct symbols."""
    if ln == 0:
        return True
    pat = t.factor(p, ln)
    d = t.data
    before = set()
    i = d.find(pat)
    while i != -1:
        if i == 0:
            return True
        before.add(d[i - 1])
        i = d.find(pat, i + 1)
    return len(before) >= 2
