"""Independent brute-force oracles the test suite checks the package against.

Nothing here uses the package's canonical labeling or enumeration: classes
come from orbits of labeled graphs under the full symmetric group, girth
from explicit simple-cycle enumeration, distances from Floyd-Warshall, and
isomorphism/automorphisms from raw bijection search.
"""

from __future__ import annotations

from itertools import combinations, permutations

from squco import Graph, make_graph


# --------------------------------------------------------------------------
# labeled-graph masks
# --------------------------------------------------------------------------

def pair_list(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def graph_to_mask(g: Graph) -> int:
    mask = 0
    for k, (u, v) in enumerate(pair_list(g.n)):
        if g.has_edge(u, v):
            mask |= 1 << k
    return mask


def mask_to_graph(n: int, mask: int) -> Graph:
    pairs = pair_list(n)
    return make_graph(n, [pairs[k] for k in range(len(pairs)) if mask >> k & 1])


def _perm_pair_map(n: int, perm: tuple[int, ...]) -> list[int]:
    pairs = pair_list(n)
    idx = {p: i for i, p in enumerate(pairs)}
    out = []
    for a, b in pairs:
        c, d = perm[a], perm[b]
        out.append(idx[(c, d) if c < d else (d, c)])
    return out


def _apply_pair_map(mask: int, pm: list[int]) -> int:
    out = 0
    while mask:
        b = mask & -mask
        out |= 1 << pm[b.bit_length() - 1]
        mask ^= b
    return out


class LabeledClasses:
    """Isomorphism classes of all labeled graphs on ``n`` vertices, found by
    exhausting vertex bijections: orbits of edge masks under the symmetric
    group (traversed through a generating pair of permutations, which reaches
    exactly the same orbits as applying all n! bijections)."""

    def __init__(self, n: int):
        self.n = n
        npairs = n * (n - 1) // 2
        gens = []
        if n >= 2:
            swap = tuple([1, 0] + list(range(2, n)))
            cyc = tuple(list(range(1, n)) + [0])
            gens = [_perm_pair_map(n, swap), _perm_pair_map(n, cyc)]
        total = 1 << npairs
        class_of = [-1] * total
        reps = []
        for mask in range(total):
            if class_of[mask] != -1:
                continue
            orbit = [mask]
            class_of[mask] = mask
            stack = [mask]
            while stack:
                x = stack.pop()
                for pm in gens:
                    y = _apply_pair_map(x, pm)
                    if class_of[y] == -1:
                        class_of[y] = mask
                        orbit.append(y)
                        stack.append(y)
            rep = min(orbit)
            for x in orbit:
                class_of[x] = rep
            reps.append(rep)
        self.reps = reps
        self.class_of = class_of

    def same_class(self, mask_a: int, mask_b: int) -> bool:
        return self.class_of[mask_a] == self.class_of[mask_b]

    def representatives(self) -> list[Graph]:
        return [mask_to_graph(self.n, rep) for rep in self.reps]


def brute_are_isomorphic(g: Graph, h: Graph) -> bool:
    """Plain bijection scan; use only on small graphs."""
    if g.n != h.n:
        return False
    es_g = g.edges()
    es_h = set(h.edges())
    if len(es_g) != len(es_h):
        return False
    for perm in permutations(range(g.n)):
        ok = True
        for u, v in es_g:
            a, b = perm[u], perm[v]
            if (a, b) not in es_h and (b, a) not in es_h:
                ok = False
                break
        if ok:
            return True
    return False


def brute_automorphism_orbits(g: Graph) -> tuple[int, ...]:
    """Vertex orbits from the full automorphism scan, least member first."""
    es = set(g.edges())
    uf = list(range(g.n))

    def find(x):
        while uf[x] != x:
            x = uf[x]
        return x

    for perm in permutations(range(g.n)):
        is_auto = True
        for u, v in es:
            a, b = perm[u], perm[v]
            if ((a, b) not in es) and ((b, a) not in es):
                is_auto = False
                break
        if is_auto:
            for v in range(g.n):
                a, b = find(v), find(perm[v])
                if a != b:
                    uf[max(a, b)] = min(a, b)
    return tuple(find(v) for v in range(g.n))


# --------------------------------------------------------------------------
# metric oracles
# --------------------------------------------------------------------------

def floyd_warshall(g: Graph) -> list[list[float]]:
    inf = float("inf")
    n = g.n
    d = [[0 if i == j else (1 if g.has_edge(i, j) else inf) for j in range(n)]
         for i in range(n)]
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == inf:
                continue
            di = d[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return d


def girth_by_cycle_enumeration(g: Graph) -> float:
    """Shortest simple cycle by exhaustive DFS path extension.

    Paths start at their least vertex, so every cycle is enumerated from a
    canonical anchor; orientation duplicates do not affect the minimum.
    """
    best = float("inf")
    n = g.n
    adj = [g.neighbors(v) for v in range(n)]
    for s in range(n):
        stack = [(s, [s], {s})]
        while stack:
            v, path, onpath = stack.pop()
            if len(path) >= best:
                continue
            for u in adj[v]:
                if u == s and len(path) >= 3:
                    if len(path) < best:
                        best = len(path)
                elif u > s and u not in onpath and len(path) + 1 < best:
                    stack.append((u, path + [u], onpath | {u}))
    return best


def brute_is_squco(g: Graph) -> bool:
    """Square-vs-complement isomorphism by raw bijection search."""
    from squco import complement, square
    return brute_are_isomorphic(square(g), complement(g))
