"""Exact fractional and integer triangle decompositions of small graphs.

A 3-decomposition puts non-negative weight on edges and triangles so that
each edge is covered with total weight exactly one; its cost counts an edge
twice and a triangle three times.  Substituting the edge weights away shows
the minimum cost is ``2e - 3 * nu_f`` where ``nu_f`` is the maximum
fractional triangle packing, and the same identity holds for integer
decompositions with the packing number ``nu``.  Both the packing LP and the
direct covering LP are solved, and they must agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graphs import Graph, GraphError, list_edges, list_triangles
from .simplex import OPTIMAL, linprog_exact

MAX_LP_VERTICES = 16
MAX_PACKING_VERTICES = 10

Edge = tuple[int, int]
Triangle = tuple[int, int, int]


class FormulationMismatch(ArithmeticError):
    """The covering LP and the packing LP disagree on a graph."""


def fmt(q: Fraction | int) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str | int) -> Fraction:
    return Fraction(text)


def triangle_edges(t: Triangle) -> tuple[Edge, Edge, Edge]:
    a, b, c = t
    return (a, b), (a, c), (b, c)


@dataclass
class Decomposition:
    edge_weights: dict[Edge, Fraction]
    triangle_weights: dict[Triangle, Fraction]

    @property
    def total_weight(self) -> Fraction:
        return (2 * sum(self.edge_weights.values(), Fraction(0))
                + 3 * sum(self.triangle_weights.values(), Fraction(0)))

    def coverage(self, g: Graph) -> dict[Edge, Fraction]:
        cover = {e: Fraction(0) for e in list_edges(g)}
        for e, w in self.edge_weights.items():
            cover[e] += w
        for t, w in self.triangle_weights.items():
            for e in triangle_edges(t):
                cover[e] += w
        return cover

    def is_valid(self, g: Graph) -> bool:
        """Exact coverage of every edge by non-negative weights on cliques of ``g``."""
        if any(w < 0 for w in self.edge_weights.values()):
            return False
        if any(w < 0 for w in self.triangle_weights.values()):
            return False
        for u, v in self.edge_weights:
            if not (u < v and g.has_edge(u, v)):
                return False
        for a, b, c in self.triangle_weights:
            if not (a < b < c and g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)):
                return False
        try:
            return all(x == 1 for x in self.coverage(g).values())
        except KeyError:
            return False

    def pruned(self) -> "Decomposition":
        return Decomposition({e: w for e, w in self.edge_weights.items() if w},
                             {t: w for t, w in self.triangle_weights.items() if w})

    def to_json(self, n: int | None = None) -> dict:
        out: dict = {}
        if n is not None:
            out["n"] = n
        out["edges"] = [{"edge": list(e), "weight": fmt(w)}
                        for e, w in sorted(self.edge_weights.items()) if w]
        out["triangles"] = [{"triangle": list(t), "weight": fmt(w)}
                            for t, w in sorted(self.triangle_weights.items()) if w]
        out["total_weight"] = fmt(self.total_weight)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Decomposition":
        return cls({tuple(item["edge"]): Fraction(item["weight"]) for item in data.get("edges", [])},
                   {tuple(item["triangle"]): Fraction(item["weight"])
                    for item in data.get("triangles", [])})


@dataclass
class PackingResult:
    value: Fraction | int
    weights: dict[Triangle, Fraction] = field(default_factory=dict)

    @property
    def support(self) -> list[Triangle]:
        return sorted(t for t, w in self.weights.items() if w)


def _check_size(g: Graph, limit: int) -> None:
    if g.n > limit:
        raise GraphError(f"exact solver limited to {limit} vertices, got {g.n}")


def max_fractional_triangle_packing(g: Graph) -> PackingResult:
    _check_size(g, MAX_LP_VERTICES)
    triangles = list_triangles(g)
    if not triangles:
        return PackingResult(Fraction(0), {})
    edges = sorted({e for t in triangles for e in triangle_edges(t)})
    eidx = {e: i for i, e in enumerate(edges)}
    A = [[0] * len(triangles) for _ in edges]
    for j, t in enumerate(triangles):
        for e in triangle_edges(t):
            A[eidx[e]][j] = 1
    res = linprog_exact([-1] * len(triangles), A_ub=A, b_ub=[1] * len(edges))
    if res.status != OPTIMAL:
        raise ArithmeticError(f"packing LP ended {res.status} on {g!r}")
    weights = {t: w for t, w in zip(triangles, res.x) if w}
    return PackingResult(-res.fun, weights)


def decomposition_lp(g: Graph) -> tuple[Fraction, Decomposition]:
    """Covering LP: a variable per edge and triangle, one equality per edge."""
    _check_size(g, MAX_LP_VERTICES)
    edges = list_edges(g)
    if not edges:
        return Fraction(0), Decomposition({}, {})
    triangles = list_triangles(g)
    eidx = {e: i for i, e in enumerate(edges)}
    nvar = len(edges) + len(triangles)
    A = [[0] * nvar for _ in edges]
    for i in range(len(edges)):
        A[i][i] = 1
    for j, t in enumerate(triangles):
        for e in triangle_edges(t):
            A[eidx[e]][len(edges) + j] = 1
    c = [2] * len(edges) + [3] * len(triangles)
    res = linprog_exact(c, A_eq=A, b_eq=[1] * len(edges))
    if res.status != OPTIMAL:
        raise ArithmeticError(f"covering LP ended {res.status} on {g!r}")
    dec = Decomposition(dict(zip(edges, res.x[:len(edges)])),
                        dict(zip(triangles, res.x[len(edges):])))
    return res.fun, dec.pruned()


def _from_packing(g: Graph, weights: dict[Triangle, Fraction]) -> Decomposition:
    cover = {e: Fraction(0) for e in list_edges(g)}
    for t, w in weights.items():
        for e in triangle_edges(t):
            cover[e] += w
    return Decomposition({e: 1 - c for e, c in cover.items() if c != 1},
                         {t: Fraction(w) for t, w in weights.items() if w})


def pi3f(g: Graph, cross_check: bool = True) -> tuple[Fraction, Decomposition]:
    """Minimum weight of a fractional 3-decomposition, with a witness."""
    packing = max_fractional_triangle_packing(g)
    value = 2 * g.num_edges() - 3 * packing.value
    dec = _from_packing(g, packing.weights)
    if cross_check:
        direct, _ = decomposition_lp(g)
        if direct != value:
            raise FormulationMismatch(
                f"covering LP gives {direct}, packing LP gives {value} on {g!r}")
    return value, dec


def _degree_bound(avail_adj: list[int]) -> int:
    # a triangle uses two edges at each of its vertices
    return sum(row.bit_count() // 2 for row in avail_adj) // 3


def max_integer_triangle_packing(g: Graph) -> PackingResult:
    """Maximum set of pairwise edge-disjoint triangles, by branch and bound.

    Branches on the lexicographically first edge that still lies in an
    available triangle: either one of those triangles is taken, or the edge
    is discarded.  Nodes are pruned with a degree-parity bound; the root is
    also bounded by the fractional optimum, which often closes the search
    as soon as a matching solution is found.
    """
    _check_size(g, MAX_PACKING_VERTICES)
    n = g.n
    if not list_triangles(g):
        return PackingResult(0, {})
    root_bound = int(max_fractional_triangle_packing(g).value)
    best: list[Triangle] = []
    chosen: list[Triangle] = []

    def first_edge(adj):
        for u in range(n):
            higher = adj[u] >> (u + 1)
            v = u + 1
            while higher:
                if higher & 1 and adj[u] & adj[v]:
                    return u, v
                higher >>= 1
                v += 1
        return None

    def search(adj: list[int]) -> bool:
        nonlocal best
        if len(chosen) > len(best):
            best = chosen[:]
            if len(best) >= root_bound:
                return True
        e = first_edge(adj)
        if e is None:
            return False
        if len(chosen) + _degree_bound(adj) <= len(best):
            return False
        u, v = e
        common = adj[u] & adj[v]
        w = 0
        while common:
            if common & 1:
                t = tuple(sorted((u, v, w)))
                nxt = adj[:]
                for a, b in triangle_edges(t):
                    nxt[a] &= ~(1 << b)
                    nxt[b] &= ~(1 << a)
                chosen.append(t)
                if search(nxt):
                    return True
                chosen.pop()
            common >>= 1
            w += 1
        nxt = adj[:]
        nxt[u] &= ~(1 << v)
        nxt[v] &= ~(1 << u)
        return search(nxt)

    search(list(g.adj))
    return PackingResult(len(best), {t: Fraction(1) for t in sorted(best)})


def pi3(g: Graph) -> tuple[int, Decomposition]:
    packing = max_integer_triangle_packing(g)
    covered = {e for t in packing.weights for e in triangle_edges(t)}
    dec = Decomposition({e: Fraction(1) for e in list_edges(g) if e not in covered},
                        dict(packing.weights))
    return 2 * g.num_edges() - 3 * packing.value, dec
