"""Small simple graphs: bitset adjacency, canonical forms, enumeration, graph6.

Vertices are ``0..n-1`` and ``adj[v]`` is an int bitset of the neighbours of
``v``.  The canonical form of a graph is the relabelling whose upper-triangle
bit string (column order ``x01, x02, x12, x03, ...``) is lexicographically
smallest.  Because that string lists the columns in vertex order, deleting the
last vertex of a canonical graph leaves a canonical graph, which is what makes
orderly generation work.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

MAX_VERTICES = 64
MAX_CANONICAL = 12
MAX_ENUMERATE = 8


class GraphError(ValueError):
    """Raised for malformed graphs or inputs outside the supported size."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
                r ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "Graph":
        return cls.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full ^ row ^ (1 << v) for v, row in enumerate(self.adj)))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabelling is not a permutation")
        adj = [0] * self.n
        for v in range(self.n):
            for u in _bits(self.adj[v]):
                adj[perm[v]] |= 1 << perm[u]
        return Graph(self.n, tuple(adj))

    def bit_key(self) -> int:
        """Upper-triangle bit string as an int, ``x01`` most significant."""
        key = 0
        adj = self.adj
        for j in range(1, self.n):
            for i in range(j):
                key = key << 1 | (adj[i] >> j & 1)
        return key

    def __repr__(self):
        return f"Graph(n={self.n}, g6={write_graph6(self).decode()!r})"


@dataclass(frozen=True)
class CanonicalGraph:
    graph: Graph
    cert: bytes


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _minimal_orders(g: Graph, target: Sequence[int] | None = None):
    """Level-wise search for vertex orders minimising the bit string.

    Every partial order extends to a full one, so the minimal full string
    has the minimal prefix at each level; only partial orders attaining it
    are kept.  With ``target`` (a column list) the search stops as soon as
    some order beats it and returns ``None``.
    """
    n, adj = g.n, g.adj
    # partial: (order, column values for every vertex w.r.t. the order)
    partials = [((), (0,) * n)]
    columns = []
    for k in range(n):
        best = None
        nxt = []
        for order, cols in partials:
            used = set(order)
            for v in range(n):
                if v in used:
                    continue
                c = cols[v]
                if best is None or c < best:
                    best = c
                    nxt = [(order, cols, v)]
                elif c == best:
                    nxt.append((order, cols, v))
        if target is not None:
            if best < target[k]:
                return None
            if best > target[k]:
                raise AssertionError("identity order lost during search")
        columns.append(best)
        partials = []
        for order, cols, v in nxt:
            row = adj[v]
            partials.append((order + (v,), tuple(c << 1 | (row >> u & 1) for u, c in enumerate(cols))))
    return [order for order, _ in partials], columns


def _columns(g: Graph) -> list[int]:
    cols = []
    for j in range(g.n):
        c = 0
        for i in range(j):
            c = c << 1 | (g.adj[i] >> j & 1)
        cols.append(c)
    return cols


def canonical_labeling(g: Graph) -> list[int]:
    """Return ``order`` such that ``order[i]`` is the vertex placed at position ``i``."""
    if g.n > MAX_CANONICAL:
        raise GraphError(f"canonical form limited to {MAX_CANONICAL} vertices, got {g.n}")
    orders, _ = _minimal_orders(g)
    return list(orders[0])


def canonical_form(g: Graph) -> CanonicalGraph:
    order = canonical_labeling(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    h = g.relabel(perm)
    return CanonicalGraph(h, write_graph6(h))


def is_canonical(g: Graph) -> bool:
    """True iff ``g`` already has the minimal bit string among its relabellings."""
    if g.n > MAX_CANONICAL:
        raise GraphError(f"canonical form limited to {MAX_CANONICAL} vertices, got {g.n}")
    return _minimal_orders(g, _columns(g)) is not None


def _cheap_invariant(g: Graph):
    return g.n, sorted(row.bit_count() for row in g.adj)


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n > MAX_CANONICAL or g2.n > MAX_CANONICAL:
        raise GraphError(f"isomorphism test limited to {MAX_CANONICAL} vertices")
    if _cheap_invariant(g1) != _cheap_invariant(g2):
        return False
    return canonical_form(g1).cert == canonical_form(g2).cert


def enumerate_graphs(n: int) -> list[CanonicalGraph]:
    """One canonical representative per isomorphism class, sorted by cert.

    Orderly generation: a canonical graph on ``n`` vertices is a canonical
    graph on ``n - 1`` vertices plus one new last vertex, so only canonical
    extensions of the previous level are kept.
    """
    if not 1 <= n <= MAX_ENUMERATE:
        raise GraphError(f"enumeration supports 1..{MAX_ENUMERATE} vertices, got {n}")
    level = [Graph.empty(1)]
    for m in range(2, n + 1):
        nxt = []
        for h in level:
            for mask in range(1 << (m - 1)):
                adj = [row | ((mask >> v & 1) << (m - 1)) for v, row in enumerate(h.adj)]
                adj.append(mask)
                cand = Graph(m, tuple(adj))
                if is_canonical(cand):
                    nxt.append(cand)
        level = nxt
    out = [CanonicalGraph(h, write_graph6(h)) for h in level]
    out.sort(key=lambda c: c.cert)
    return out


# -- graph6 -------------------------------------------------------------------

def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise GraphError("graph6 size out of range")


def write_graph6(g: Graph) -> bytes:
    out = bytearray(_encode_n(g.n))
    nbits = g.n * (g.n - 1) // 2
    key = g.bit_key()
    pad = (-nbits) % 6
    key <<= pad
    total = nbits + pad
    for shift in range(total - 6, -1, -6):
        out.append((key >> shift & 63) + 63)
    return bytes(out)


def parse_graph6(text: bytes | str) -> Graph:
    if isinstance(text, str):
        text = text.encode("ascii")
    data = text.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise GraphError("empty graph6 string")
    if any(not 63 <= b <= 126 for b in data):
        raise GraphError("graph6 characters must lie in 63..126")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise GraphError("graph6 8-byte size header not supported")
        if len(data) < 4:
            raise GraphError("truncated graph6 size header")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n < 1:
        raise GraphError("graph6 with zero vertices")
    if n > MAX_VERTICES:
        raise GraphError(f"graph6 has {n} vertices, limit is {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise GraphError(f"graph6 bit field has {len(body)} bytes, expected {need}")
    key = 0
    for b in body:
        key = key << 6 | (b - 63)
    pad = need * 6 - nbits
    if key & ((1 << pad) - 1):
        raise GraphError("nonzero graph6 padding bits")
    key >>= pad
    adj = [0] * n
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if key >> pos & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos -= 1
    return Graph(n, tuple(adj))


def read_graph6_lines(lines: Iterable[bytes | str]) -> list[Graph]:
    out = []
    for line in lines:
        if isinstance(line, str):
            line = line.encode("ascii")
        line = line.strip()
        if line:
            out.append(parse_graph6(line))
    return out


# -- substructures ------------------------------------------------------------

def list_edges(g: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u in range(g.n) for v in _bits(g.adj[u] >> (u + 1) << (u + 1))]


def list_triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    adj = g.adj
    for u in range(g.n):
        higher = adj[u] >> (u + 1) << (u + 1)
        for v in _bits(higher):
            for w in _bits(higher & adj[v] >> (v + 1) << (v + 1)):
                out.append((u, v, w))
    return out


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced by ``vertices``; position ``i`` holds ``vertices[i]``."""
    for v in vertices:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    if len(set(vertices)) != len(vertices):
        raise GraphError("repeated vertex in induced subgraph")
    adj = []
    for v in vertices:
        row = g.adj[v]
        adj.append(sum(1 << i for i, u in enumerate(vertices) if row >> u & 1))
    return Graph(len(vertices), tuple(adj))


def subgraph_counts(g: Graph, k: int) -> Counter:
    """Counter of canonical certs over all ``k``-vertex subsets of ``g``."""
    counts: Counter = Counter()
    raw: dict[tuple[int, ...], bytes] = {}
    for sub in combinations(range(g.n), k):
        h = induced_subgraph(g, sub)
        cert = raw.get(h.adj)
        if cert is None:
            cert = raw[h.adj] = canonical_form(h).cert
        counts[cert] += 1
    return counts


def density(f: Graph, g: Graph) -> Fraction:
    """Probability that ``|f|`` random vertices of ``g`` induce a copy of ``f``."""
    if f.n > g.n:
        return Fraction(0)
    target = canonical_form(f).cert
    key = _cheap_invariant(f)[1]
    hits = 0
    for sub in combinations(range(g.n), f.n):
        h = induced_subgraph(g, sub)
        if sorted(row.bit_count() for row in h.adj) == key and canonical_form(h).cert == target:
            hits += 1
    return Fraction(hits, comb(g.n, f.n))
