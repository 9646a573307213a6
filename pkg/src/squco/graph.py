"""Simple undirected graphs stored as adjacency bit rows, plus the metric
and structural primitives everything else is built on.

A graph on ``n`` vertices keeps one integer per vertex; bit ``u`` of row
``v`` is set iff ``{u, v}`` is an edge.  With the order capped at 64 every
row fits a machine word, so neighbourhood intersection, squaring and
complementation are single bitwise operations per row.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

#: Largest supported vertex count.  All searches in this package are
#: desk-scale; single-word rows keep the hot loops branch-free.
MAX_ORDER = 64

#: Girth of an acyclic graph.  A distinct non-integer value, so acyclic
#: graphs can never be confused with large-girth graphs.
INFINITE_GIRTH = math.inf


class GraphError(ValueError):
    """Invalid construction input or out-of-range vertex argument."""


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[int, ...]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[v] >> u & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` pairs with ``u < v``."""
        out = []
        for u in range(self.n):
            m = self.adj[u] >> (u + 1)
            while m:
                b = m & -m
                out.append((u, u + 1 + b.bit_length() - 1))
                m ^= b
        return out

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, edges={self.edges()})"


def _check_order(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise GraphError(f"vertex count must be a nonnegative integer, got {n!r}")
    if n > MAX_ORDER:
        raise GraphError(f"order {n} exceeds the supported maximum {MAX_ORDER}")


def make_graph(n: int, edges) -> Graph:
    """Build a graph from an edge list.  Duplicate edges collapse.

    Raises :class:`GraphError` for out-of-range vertex ids or loops.
    """
    _check_order(n)
    rows = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n) or not (0 <= v < n):
            raise GraphError(f"edge {pair!r} has a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge {pair!r} is not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def from_adjacency_rows(n: int, rows) -> Graph:
    """Wrap precomputed bit rows (internal fast path; rows must be valid)."""
    return Graph(n, tuple(rows))


def complement(g: Graph) -> Graph:
    """Graph with exactly the non-edges of ``g``."""
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((~r & full) & ~(1 << v) for v, r in enumerate(g.adj)))


def square(g: Graph) -> Graph:
    """Graph joining every pair at distance 1 or 2 in ``g``."""
    adj = g.adj
    rows = []
    for v in range(g.n):
        r = adj[v]
        m = adj[v]
        while m:
            b = m & -m
            r |= adj[b.bit_length() - 1]
            m ^= b
        rows.append(r & ~(1 << v))
    return Graph(g.n, tuple(rows))


@dataclass(frozen=True)
class DistanceLayers:
    """Distances and exact-distance layers from one source vertex.

    ``dist[v]`` is the shortest-path distance or ``None`` when ``v`` is
    unreachable.  ``layers[i]`` is the tuple of vertices at distance
    exactly ``i``; ``layers[0] == (source,)``.
    """

    source: int
    dist: tuple[int | None, ...]
    layers: tuple[tuple[int, ...], ...]

    def at_least(self, i: int) -> int:
        """Number of vertices at distance >= ``i`` (unreachable counts)."""
        n = len(self.dist)
        within = sum(len(layer) for layer in self.layers[:i])
        return n - within


def bfs_layers(g: Graph, v: int) -> DistanceLayers:
    """Breadth-first distances from ``v`` with exact-distance layers."""
    if not (0 <= v < g.n):
        raise GraphError(f"vertex {v} out of range for order {g.n}")
    adj = g.adj
    dist: list[int | None] = [None] * g.n
    dist[v] = 0
    layers = [(v,)]
    frontier = 1 << v
    seen = frontier
    d = 0
    while True:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            nxt |= adj[b.bit_length() - 1]
            m ^= b
        nxt &= ~seen
        if not nxt:
            break
        d += 1
        layer = bits(nxt)
        for u in layer:
            dist[u] = d
        layers.append(tuple(layer))
        seen |= nxt
        frontier = nxt
    return DistanceLayers(v, tuple(dist), tuple(layers))


def _reach_mask(adj: tuple[int, ...], start: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            nxt |= adj[b.bit_length() - 1]
            m ^= b
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return _reach_mask(g.adj, 0) == (1 << g.n) - 1


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, or ``INFINITE_GIRTH`` if acyclic.

    One truncated BFS per root: a non-tree edge ``(u, w)`` seen from a
    root closes a cycle of length at most ``dist[u] + dist[w] + 1``, and
    for a root lying on a shortest cycle the bound is attained.
    """
    n = g.n
    adj = g.adj
    best: int | float = INFINITE_GIRTH
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        q = deque([root])
        while q:
            u = q.popleft()
            du = dist[u]
            if 2 * du >= best:
                break
            m = adj[u]
            pu = parent[u]
            while m:
                b = m & -m
                v = b.bit_length() - 1
                m ^= b
                dv = dist[v]
                if dv < 0:
                    dist[v] = du + 1
                    parent[v] = u
                    q.append(v)
                elif v != pu:
                    c = du + dv + 1
                    if c < best:
                        best = c
        if best == 3:
            break
    return best


def eccentricities(g: Graph) -> list[int] | None:
    """Per-vertex eccentricity, or ``None`` if ``g`` is disconnected/empty."""
    if g.n == 0:
        return None
    adj = g.adj
    full = (1 << g.n) - 1
    out = []
    for v in range(g.n):
        seen = 1 << v
        frontier = seen
        ecc = 0
        while True:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                nxt |= adj[b.bit_length() - 1]
                m ^= b
            nxt &= ~seen
            if not nxt:
                break
            ecc += 1
            seen |= nxt
            frontier = nxt
        if seen != full:
            return None
        out.append(ecc)
    return out


def radius_diameter(g: Graph) -> tuple[int, int] | None:
    """(radius, diameter), or ``None`` for a disconnected or empty graph."""
    eccs = eccentricities(g)
    if eccs is None:
        return None
    return min(eccs), max(eccs)


def is_biconnected(g: Graph) -> tuple[bool, frozenset[int]]:
    """Connectivity flag plus the set of articulation points.

    Articulation points are reported per component, so a disconnected
    graph can still have an empty cut set.
    """
    n = g.n
    adj = g.adj
    if n == 0:
        return True, frozenset()
    disc = [-1] * n
    low = [0] * n
    cut = set()
    seen_count = 0
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        # Iterative DFS: stack entries are (vertex, parent, neighbor mask).
        stack = [(root, -1, adj[root])]
        disc[root] = low[root] = timer
        timer += 1
        seen_count += 1
        root_children = 0
        while stack:
            v, parent, m = stack[-1]
            if m:
                b = m & -m
                u = b.bit_length() - 1
                stack[-1] = (v, parent, m ^ b)
                if disc[u] == -1:
                    if v == root:
                        root_children += 1
                    disc[u] = low[u] = timer
                    timer += 1
                    seen_count += 1
                    stack.append((u, v, adj[u]))
                elif u != parent:
                    if disc[u] < low[v]:
                        low[v] = disc[u]
            else:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    if low[v] < low[pv]:
                        low[pv] = low[v]
                    if pv != root and low[v] >= disc[pv]:
                        cut.add(pv)
        if root_children >= 2:
            cut.add(root)
    return seen_count == n and n >= 1, frozenset(cut)


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Vertex degrees in nonincreasing order."""
    return tuple(sorted((r.bit_count() for r in g.adj), reverse=True))


def is_regular(g: Graph) -> bool:
    if g.n == 0:
        return True
    first = g.adj[0].bit_count()
    return all(r.bit_count() == first for r in g.adj)


def is_bipartite(g: Graph) -> bool:
    """Two-colorability, checked by BFS on every component."""
    n = g.n
    adj = g.adj
    color = [-1] * n
    for root in range(n):
        if color[root] != -1:
            continue
        color[root] = 0
        q = deque([root])
        while q:
            v = q.popleft()
            cv = color[v]
            m = adj[v]
            while m:
                b = m & -m
                u = b.bit_length() - 1
                m ^= b
                if color[u] == -1:
                    color[u] = 1 - cv
                    q.append(u)
                elif color[u] == cv:
                    return False
    return True
