"""Fractional decompositions of larger graphs by averaging over 7-vertex subsets.

Every edge lies in ``C(n-2, 5)`` of the 7-subsets of the vertex set, so
summing optimal decompositions of all induced 7-vertex subgraphs and dividing
by that count covers each edge exactly once.
"""

from __future__ import annotations

import random
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, gcd

from .cliquelp import (
    MAX_PACKING_VERTICES,
    Decomposition,
    fmt,
    max_integer_triangle_packing,
    pi3f,
    triangle_edges,
)
from .graphs import Graph, canonical_labeling, induced_subgraph, list_edges, parse_graph6, write_graph6

SUBSET = 7
DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class AveragingPlan:
    mode: str = "exhaustive"
    sample_count: int = 0
    rng_seed: int = 0
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.mode not in ("exhaustive", "sampled"):
            raise ValueError(f"unknown averaging mode {self.mode!r}")
        if self.mode == "sampled" and self.sample_count <= 0:
            raise ValueError("sampled mode needs a positive sample_count")


@dataclass
class AveragingResult:
    decomposition: Decomposition
    mode: str
    subsets: int
    approximate: bool = False
    subset_value_sum: Fraction = Fraction(0)
    residuals: dict = field(default_factory=dict)

    @property
    def total_weight(self) -> Fraction:
        return self.decomposition.total_weight

    def summary(self, g: Graph) -> dict:
        out = {"n": g.n, "edges": g.num_edges(), "total_weight": fmt(self.total_weight),
               "half_n_squared": fmt(Fraction(g.n * g.n, 2)), "mode": self.mode,
               "subsets": self.subsets, "approximate": self.approximate}
        if self.approximate:
            out["max_abs_residual"] = fmt(max((abs(r) for r in self.residuals.values()),
                                              default=Fraction(0)))
        return out


class _LocalSolver:
    """Optimal local decompositions keyed by raw adjacency, then by iso class."""

    def __init__(self):
        self.raw: dict[tuple[int, ...], tuple] = {}
        self.canon: dict[bytes, tuple] = {}

    @staticmethod
    def _pack(value, dec: Decomposition):
        # integer numerators over one common denominator for fast accumulation
        items = [(e, w) for e, w in dec.edge_weights.items() if w]
        items += [(t, w) for t, w in dec.triangle_weights.items() if w]
        den = 1
        for _, w in items:
            den = den * w.denominator // gcd(den, w.denominator)
        return value, den, tuple((c, int(w * den)) for c, w in items)

    def solve(self, h: Graph):
        hit = self.raw.get(h.adj)
        if hit is not None:
            return hit
        order = canonical_labeling(h)
        pos = [0] * h.n
        for p, v in enumerate(order):
            pos[v] = p
        canon = h.relabel(pos)
        key = write_graph6(canon)
        sol = self.canon.get(key)
        if sol is None:
            value, dec = pi3f(canon, cross_check=False)
            sol = self.canon[key] = self._pack(value, dec)
        value, den, items = sol
        mapped = tuple((tuple(sorted(order[p] for p in c)), w) for c, w in items)
        out = self.raw[h.adj] = (value, den, mapped)
        return out


def _accumulate(g: Graph, subsets, solver: _LocalSolver):
    sums: dict = defaultdict(int)
    value_sum = Fraction(0)
    count = 0
    for w in subsets:
        value, den, items = solver.solve(induced_subgraph(g, w))
        value_sum += value
        count += 1
        for local, num in items:
            sums[tuple(w[i] for i in local), den] += num
    return sums, value_sum, count


def _worker(args):
    g6, firsts = args
    g = parse_graph6(g6)
    rest = lambda f: (((f,) + tail) for tail in combinations(range(f + 1, g.n), SUBSET - 1))  # noqa: E731
    subsets = (w for f in firsts for w in rest(f))
    return _accumulate(g, subsets, _LocalSolver())


def _to_decomposition(sums: dict, scale: Fraction) -> Decomposition:
    merged: dict = defaultdict(Fraction)
    for (clique, den), num in sums.items():
        merged[clique] += Fraction(num, den)
    edges = {c: w * scale for c, w in merged.items() if len(c) == 2 and w}
    tris = {c: w * scale for c, w in merged.items() if len(c) == 3 and w}
    return Decomposition(dict(sorted(edges.items())), dict(sorted(tris.items())))


def averaging_decomposition(g: Graph, plan: AveragingPlan | None = None, jobs: int = 1) -> AveragingResult:
    plan = plan or AveragingPlan()
    n = g.n
    if n < SUBSET:
        _, dec = pi3f(g, cross_check=False)
        return AveragingResult(dec, "direct", 1, subset_value_sum=dec.total_weight)
    per_edge = comb(n - 2, SUBSET - 2)
    if plan.mode == "exhaustive":
        total = comb(n, SUBSET)
        if total > plan.budget:
            raise BudgetExceeded(f"C({n},7) = {total} subsets exceed budget {plan.budget}")
        if jobs > 1:
            g6 = write_graph6(g)
            shares = [list(range(k, n - SUBSET + 1, jobs)) for k in range(jobs)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                parts = list(pool.map(_worker, [(g6, s) for s in shares]))
            sums: dict = defaultdict(int)
            value_sum = Fraction(0)
            count = 0
            for part_sums, part_value, part_count in parts:
                for k, v in part_sums.items():
                    sums[k] += v
                value_sum += part_value
                count += part_count
        else:
            sums, value_sum, count = _accumulate(g, combinations(range(n), SUBSET), _LocalSolver())
        dec = _to_decomposition(sums, Fraction(1, per_edge))
        return AveragingResult(dec, "exhaustive", count, subset_value_sum=value_sum / per_edge)

    rng = random.Random(plan.rng_seed)
    samples = [tuple(sorted(rng.sample(range(n), SUBSET))) for _ in range(plan.sample_count)]
    sums, value_sum, count = _accumulate(g, samples, _LocalSolver())
    scale = Fraction(comb(n, SUBSET), plan.sample_count * per_edge)
    dec = _to_decomposition(sums, scale)
    residuals = {e: 1 - c for e, c in dec.coverage(g).items()}
    return AveragingResult(dec, "sampled", count, approximate=True,
                           subset_value_sum=value_sum * scale, residuals=residuals)


def greedy_decomposition(g: Graph) -> Decomposition:
    """Integer decomposition from repeated triangle removal.

    Each step removes the lexicographically first triangle among those whose
    removal strands the fewest edges (edges left in no triangle).  Leftover
    edges become single-edge parts.
    """
    adj = list(g.adj)
    n = g.n
    chosen = []

    def stranded_by(t):
        tset = set(t)
        count = 0
        for u in t:
            others = [c for c in t if c != u]
            row = adj[u]
            for b in range(n):
                if b in tset or not row >> b & 1:
                    continue
                through = (adj[u] & adj[b]).bit_count()
                lost = sum(adj[b] >> c & 1 for c in others)
                if through and through == lost:
                    count += 1
        return count

    while True:
        tris = []
        for u in range(n):
            higher = adj[u] >> (u + 1) << (u + 1)
            for v in range(u + 1, n):
                if higher >> v & 1:
                    common = adj[u] & adj[v] >> (v + 1) << (v + 1)
                    for w in range(v + 1, n):
                        if common >> w & 1:
                            tris.append((u, v, w))
        if not tris:
            break
        best = min(tris, key=lambda t: (stranded_by(t), t))
        chosen.append(best)
        for a, b in triangle_edges(best):
            adj[a] &= ~(1 << b)
            adj[b] &= ~(1 << a)
    rest = Graph(n, tuple(adj))
    return Decomposition({e: Fraction(1) for e in list_edges(rest)},
                         {t: Fraction(1) for t in sorted(chosen)})


@dataclass
class CorollaryRecord:
    k: Fraction
    packed: int
    bound: Fraction
    exact: bool

    def to_json(self) -> dict:
        return {"k": fmt(self.k), "packed": self.packed, "bound": fmt(self.bound),
                "exact": self.exact, "bound_met": self.packed >= self.bound}


def corollary_check(g: Graph) -> CorollaryRecord:
    """Edge-disjoint triangles against two thirds of the excess over n^2/4.

    Report only: the asymptotic error term has no explicit rate.
    """
    k = g.num_edges() - Fraction(g.n * g.n, 4)
    if g.n <= MAX_PACKING_VERTICES:
        packed, exact = int(max_integer_triangle_packing(g).value), True
    else:
        packed, exact = len(greedy_decomposition(g).triangle_weights), False
    return CorollaryRecord(k, packed, Fraction(2, 3) * k, exact)
