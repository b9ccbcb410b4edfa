"""Single-vertex-type flags on four vertices and the certificate coefficients.

A flag here is a 4-vertex graph whose vertex 0 is the labelled root.  The
seven flags used by the certificate are, in order:

    F1  no edges
    F2  one edge between two unlabelled vertices
    F3  star centred at an unlabelled vertex, root is a leaf
    F4  star centred at the root
    F5  triangle through the root plus a pendant edge at another triangle vertex
    F6  4-cycle through the root
    F7  K4 minus one edge at the root
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from typing import Sequence

from .exactlin import as_matrix, check_symmetric
from .graphs import Graph, GraphError

ROOT = 0

FLAG_EDGES: tuple[tuple[tuple[int, int], ...], ...] = (
    (),
    ((2, 3),),
    ((0, 3), (1, 3), (2, 3)),
    ((0, 1), (0, 2), (0, 3)),
    ((0, 2), (0, 3), (1, 3), (2, 3)),
    ((0, 2), (0, 3), (1, 2), (1, 3)),
    ((0, 2), (0, 3), (1, 2), (1, 3), (2, 3)),
)

KERNEL_VECTOR = (1, 0, 3, 1, 0, 3, 0)

# The matrix below is normalised against pair *counts* over the 7 * 20 rooted
# 3+3 splits of a 7-vertex graph, not against pair probabilities: M[0][0] is
# exactly 21/140.  Positive scaling keeps the matrix PSD, so the coefficient
# multiplies the probability-weighted form by this factor.
PAIR_SCALE = 140

DENOMINATOR = 12 * 10**9
NUMERATORS = (
    (1800000000, 2444365956, 640188285, -1524146769, 1386815580, -732139362, -129387078),
    (2444365956, 4759879134, 1177441152, -1783771230, 2546923788, -1397639394, -143552208),
    (640188285, 1177441152, 484273772, -317303211, 1038156300, -591902130, -6783162),
    (-1524146769, -1783771230, -317303211, 1558870290, -651906630, 305728704, 154602378),
    (1386815580, 2546923788, 1038156300, -651906630, 2285399634, -1283125950, -10755036),
    (-732139362, -1397639394, -591902130, 305728704, -1283125950, 734039016, -1621938),
    (-129387078, -143552208, -6783162, 154602378, -10755036, -1621938, 23860164),
)


@dataclass(frozen=True)
class Flag:
    graph: Graph
    labels: tuple[int, ...] = (ROOT,)

    def __post_init__(self):
        # the single-vertex type has no internal structure to preserve
        if len(self.labels) != 1 or not 0 <= self.labels[0] < self.graph.n:
            raise GraphError("flags of the single-vertex type carry exactly one label")


@dataclass(frozen=True)
class CertificateMatrix:
    denominator: int
    numerators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.denominator <= 0:
            raise ValueError("denominator must be positive")
        if len(self.numerators) != 7 or any(len(r) != 7 for r in self.numerators):
            raise ValueError("certificate matrix must be 7x7")
        check_symmetric(self.numerators)

    @classmethod
    def builtin(cls) -> "CertificateMatrix":
        return cls(DENOMINATOR, NUMERATORS)

    @classmethod
    def from_json(cls, data: dict) -> "CertificateMatrix":
        try:
            den = data["denominator"]
            nums = data["numerators"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"matrix file lacks field {exc}") from None
        if not isinstance(den, int) or not all(isinstance(x, int) for r in nums for x in r):
            raise ValueError("matrix entries must be integers")
        return cls(den, tuple(tuple(r) for r in nums))

    def to_json(self) -> dict:
        return {"denominator": self.denominator, "numerators": [list(r) for r in self.numerators]}

    def entries(self) -> list[list[Fraction]]:
        return as_matrix([[Fraction(x, self.denominator) for x in r] for r in self.numerators])

    def sha256(self) -> str:
        blob = json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()


def seven_flags() -> list[Flag]:
    return [Flag(Graph.from_edges(4, edges)) for edges in FLAG_EDGES]


def _rooted_key(adj: Sequence[int], root: int, others: Sequence[int]) -> int:
    """6-bit code of the labelled 4-vertex subgraph on ``root`` + ``others``."""
    a, b, c = others
    ra = adj[root]
    return ((ra >> a & 1) | (ra >> b & 1) << 1 | (ra >> c & 1) << 2
            | (adj[a] >> b & 1) << 3 | (adj[a] >> c & 1) << 4 | (adj[b] >> c & 1) << 5)


@lru_cache(maxsize=None)
def flag_table() -> tuple[int, ...]:
    """Map each 6-bit rooted code to a flag index 0..6, or -1 for other flags."""
    table = [-1] * 64
    for idx, flag in enumerate(seven_flags()):
        adj = flag.graph.adj
        for perm in permutations((1, 2, 3)):
            code = _rooted_key(adj, ROOT, perm)
            if table[code] not in (-1, idx):
                raise AssertionError("two flags share a rooted code")
            table[code] = idx
    return tuple(table)


def flag_index(g: Graph, root: int, others: Sequence[int]) -> int:
    return flag_table()[_rooted_key(g.adj, root, others)]


def pair_counts(h: Graph) -> list[list[int]]:
    """Counts over (root, ordered 3+3 split) of the flag pair that is induced.

    The 7 * 20 = 140 choices are equally likely, so dividing by 140 gives
    every pair-density expectation at once.
    """
    if h.n != 7:
        raise GraphError(f"pair densities need a 7-vertex graph, got {h.n}")
    table = flag_table()
    adj = h.adj
    counts = [[0] * 7 for _ in range(7)]
    for root in range(7):
        rest = [v for v in range(7) if v != root]
        for s in combinations(rest, 3):
            t = [v for v in rest if v not in s]
            i = table[_rooted_key(adj, root, s)]
            j = table[_rooted_key(adj, root, t)]
            if i >= 0 and j >= 0:
                counts[i][j] += 1
    return counts


def pair_density_expectation(i: int, j: int, h: Graph) -> Fraction:
    """Expected pair density of flags ``i`` and ``j`` (1-based) under a random root."""
    if not (1 <= i <= 7 and 1 <= j <= 7):
        raise IndexError("flag indices run from 1 to 7")
    return Fraction(pair_counts(h)[i - 1][j - 1], 140)


def pair_form_expectation(h: Graph, matrix: CertificateMatrix | None = None) -> Fraction:
    """``sum_ij M_ij E p(F_i, F_j; h)`` with probabilities as weights."""
    matrix = matrix or CertificateMatrix.builtin()
    counts = pair_counts(h)
    num = sum(matrix.numerators[i][j] * counts[i][j] for i in range(7) for j in range(7))
    return Fraction(num, 140 * matrix.denominator)


def coefficient_cu(h: Graph, matrix: CertificateMatrix | None = None) -> Fraction:
    """Correction term paired with ``pi3f(h)`` in the per-graph inequality."""
    return PAIR_SCALE * pair_form_expectation(h, matrix)


def flag_densities(h: Graph, root: int) -> list[Fraction]:
    """Density of each of the seven flags in ``h`` rooted at ``root``."""
    if h.n < 4:
        raise GraphError("flag densities need at least 4 vertices")
    if not 0 <= root < h.n:
        raise GraphError(f"root {root} out of range")
    table = flag_table()
    rest = [v for v in range(h.n) if v != root]
    counts = [0] * 7
    total = 0
    for s in combinations(rest, 3):
        total += 1
        idx = table[_rooted_key(h.adj, root, s)]
        if idx >= 0:
            counts[idx] += 1
    return [Fraction(c, total) for c in counts]


def quadratic_form_value(d: Sequence[Fraction], matrix: CertificateMatrix | None = None) -> Fraction:
    matrix = matrix or CertificateMatrix.builtin()
    nums = matrix.numerators
    num = sum(nums[i][j] * d[i] * d[j] for i in range(7) for j in range(7))
    return Fraction(num) / matrix.denominator


def quadratic_form_density(h: Graph, labeled: int, matrix: CertificateMatrix | None = None) -> Fraction:
    return quadratic_form_value(flag_densities(h, labeled), matrix)
