"""Brute-force reference computations, kept independent of the package code paths."""

from fractions import Fraction
from itertools import combinations, permutations
from math import factorial, gcd

from tridecomp.graphs import Graph


def pairs(n):
    return [(i, j) for j in range(1, n) for i in range(j)]


def key_of(n, edges):
    """Upper-triangle bit string, column order, first pair most significant."""
    key = 0
    for p in pairs(n):
        key = key << 1 | (p in edges)
    return key


def edge_set(g):
    return {(i, j) for (i, j) in pairs(g.n) if g.adj[i] >> j & 1}


def brute_canonical_key(g):
    es = edge_set(g)
    best = None
    for perm in permutations(range(g.n)):
        mapped = {tuple(sorted((perm[i], perm[j]))) for i, j in es}
        k = key_of(g.n, mapped)
        if best is None or k < best:
            best = k
    return best


def brute_isomorphic(g1, g2):
    if g1.n != g2.n:
        return False
    e1, e2 = edge_set(g1), edge_set(g2)
    if len(e1) != len(e2):
        return False
    for perm in permutations(range(g1.n)):
        if {tuple(sorted((perm[i], perm[j]))) for i, j in e1} == e2:
            return True
    return False


def orbit_count(n):
    """Isomorphism classes by sweeping all labelled graphs and marking orbits."""
    ps = pairs(n)
    index = {p: k for k, p in enumerate(ps)}
    m = len(ps)
    perm_maps = []
    for perm in permutations(range(n)):
        perm_maps.append([index[tuple(sorted((perm[i], perm[j])))] for i, j in ps])
    seen = bytearray(1 << m)
    classes = 0
    for mask in range(1 << m):
        if seen[mask]:
            continue
        classes += 1
        bits = [k for k in range(m) if mask >> k & 1]
        for pm in perm_maps:
            seen[sum(1 << pm[k] for k in bits)] = 1
    return classes


def burnside_count(n):
    """Isomorphism classes via Burnside: average of 2^(cycles on vertex pairs)."""
    ps = pairs(n)
    total = 0
    for perm in permutations(range(n)):
        image = {p: tuple(sorted((perm[p[0]], perm[p[1]]))) for p in ps}
        seen, cycles = set(), 0
        for p in ps:
            if p in seen:
                continue
            cycles += 1
            q = p
            while q not in seen:
                seen.add(q)
                q = image[q]
        total += 2 ** cycles
    assert total % factorial(n) == 0
    return total // factorial(n)


def triangles_of(g):
    es = edge_set(g)
    return [t for t in combinations(range(g.n), 3)
            if (t[0], t[1]) in es and (t[0], t[2]) in es and (t[1], t[2]) in es]


def tri_edges(t):
    a, b, c = t
    return {(a, b), (a, c), (b, c)}


def brute_pi3(g):
    """Minimum order-weight over all decompositions into K2 and K3."""
    e = len(edge_set(g))
    tris = triangles_of(g)
    best = 2 * e
    for r in range(1, len(tris) + 1):
        for fam in combinations(tris, r):
            used = set()
            ok = True
            for t in fam:
                te = tri_edges(t)
                if used & te:
                    ok = False
                    break
                used |= te
            if ok:
                best = min(best, 3 * r + 2 * (e - 3 * r))
    return best


def _solve(a, b):
    """Exact Gaussian elimination; None when singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col] / m[col][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] / m[i][i] for i in range(n)]


def vertex_enumeration_max(c, A, b):
    """max c.x s.t. A x <= b, x >= 0 by visiting every basic solution."""
    n = len(c)
    rows = [list(r) for r in A] + [[-int(i == j) for j in range(n)] for i in range(n)]
    rhs = list(b) + [0] * n
    best = None
    for basis in combinations(range(len(rows)), n):
        x = _solve([rows[i] for i in basis], [rhs[i] for i in basis])
        if x is None:
            continue
        if all(sum(Fraction(r[j]) * x[j] for j in range(n)) <= h for r, h in zip(rows, rhs)):
            val = sum(Fraction(cj) * xj for cj, xj in zip(c, x))
            if best is None or val > best:
                best = val
    return best


def packing_lp(g):
    tris = triangles_of(g)
    es = sorted({e for t in tris for e in tri_edges(t)})
    A = [[int(e in tri_edges(t)) for t in tris] for e in es]
    return [1] * len(tris), A, [1] * len(es)


def lcm(a, b):
    return a * b // gcd(a, b)


def random_graph(rng, n, p=0.5):
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_relabel(rng, g):
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)
