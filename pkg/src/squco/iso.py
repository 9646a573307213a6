"""Canonical labeling, certificates, and isomorphism testing.

The canonizer runs equitable-partition refinement (cells repeatedly split
by neighbour counts against splitter cells, new fragments ordered by
count) with backtracking individualization.  The branch cell is the first
smallest non-singleton cell; automorphisms discovered when two discrete
leaves produce identical relabelled adjacency rows prune sibling branches
whose vertex lies in the orbit of an already-explored sibling under the
subgroup fixing the current individualization prefix.  Exploring the full
tree this way yields a generating set for the automorphism group, so the
reported orbit partition is exact.

A certificate is one byte holding the order followed by the packed
upper-triangle bits (row-major) of the canonically relabelled adjacency
matrix, so certificate equality is exactly isomorphism.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, GraphError, MAX_ORDER, bits, from_adjacency_rows

Certificate = bytes


@dataclass(frozen=True)
class OrbitPartition:
    """Automorphism orbits, stored as the least orbit member per vertex."""

    representative: tuple[int, ...]

    def same_orbit(self, u: int, v: int) -> bool:
        return self.representative[u] == self.representative[v]

    def orbit_count(self) -> int:
        return len(set(self.representative))

    def orbits(self) -> list[tuple[int, ...]]:
        groups: dict[int, list[int]] = {}
        for v, r in enumerate(self.representative):
            groups.setdefault(r, []).append(v)
        return [tuple(groups[r]) for r in sorted(groups)]


class CanonicalResult:
    """Everything the canonizer learned about one graph."""

    __slots__ = ("certificate", "labeling", "orbit_rep", "generators")

    def __init__(self, certificate: bytes, labeling: tuple[int, ...],
                 orbit_rep: tuple[int, ...], generators: tuple[tuple[int, ...], ...]):
        self.certificate = certificate
        #: position -> vertex; the vertex at position n-1 is the one the
        #: canonical labeling maps to the highest index.
        self.labeling = labeling
        self.orbit_rep = orbit_rep
        self.generators = generators


def refine_partition(adj: tuple[int, ...], cells: list[list[int]],
                     work: deque[int]) -> None:
    """Refine the ordered partition ``cells`` in place until it is stable
    against every splitter mask in ``work`` (and every fragment created
    along the way).  Fragments are ordered by ascending neighbour count,
    which makes the refined cell order label-invariant.
    """
    while work:
        wmask = work.popleft()
        i = 0
        while i < len(cells):
            cell = cells[i]
            if len(cell) == 1:
                i += 1
                continue
            counts = [(adj[v] & wmask).bit_count() for v in cell]
            c0 = counts[0]
            if min(counts) == max(counts):
                i += 1
                continue
            buckets: dict[int, list[int]] = {}
            for v, c in zip(cell, counts):
                bucket = buckets.get(c)
                if bucket is None:
                    buckets[c] = [v]
                else:
                    bucket.append(v)
            parts = [buckets[c] for c in sorted(buckets)]
            cells[i:i + 1] = parts
            for p in parts:
                m = 0
                for v in p:
                    m |= 1 << v
                work.append(m)
            i += len(parts)


def root_partition(adj: tuple[int, ...], n: int) -> list[list[int]]:
    """Coarsest equitable partition refining the unit partition.

    The first split is by degree ascending, and later splits only subdivide
    cells in place, so the last cell always consists of maximum-degree
    vertices and the canonical labeling maps each cell to a contiguous
    index range in cell order.
    """
    cells = [list(range(n))]
    refine_partition(adj, cells, deque([(1 << n) - 1]))
    return cells


class _Canonizer:
    __slots__ = ("adj", "n", "prefix", "gens", "first_rows", "first_pos",
                 "first_lab", "best_rows", "best_pos", "best_lab", "uf")

    def __init__(self, adj: tuple[int, ...], n: int):
        self.adj = adj
        self.n = n
        self.prefix: list[int] = []
        self.gens: list[tuple[int, ...]] = []
        self.first_rows: tuple[int, ...] | None = None
        self.first_pos: list[int] | None = None
        self.first_lab: list[int] | None = None
        self.best_rows: tuple[int, ...] | None = None
        self.best_pos: list[int] | None = None
        self.best_lab: list[int] | None = None
        self.uf = list(range(n))

    # -- union-find over all discovered generators ------------------------
    def _find(self, x: int) -> int:
        uf = self.uf
        root = x
        while uf[root] != root:
            root = uf[root]
        while uf[x] != root:
            uf[x], x = root, uf[x]
        return root

    def _union(self, a: int, b: int) -> None:
        ra, rb = self._find(a), self._find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.uf[rb] = ra

    def _record_automorphism(self, pos_new: list[int], lab_old: list[int]) -> None:
        # pos_new maps vertices to leaf indices; lab_old maps indices of an
        # earlier identical leaf back to vertices.  Their composite is an
        # automorphism.
        n = self.n
        gamma = tuple(lab_old[pos_new[v]] for v in range(n))
        self.gens.append(gamma)
        for v in range(n):
            if gamma[v] != v:
                self._union(v, gamma[v])

    # -- search ------------------------------------------------------------
    def run(self, cells: list[list[int]]) -> None:
        self._node(cells)

    def _node(self, cells: list[list[int]]) -> None:
        target = -1
        tsize = self.n + 1
        for idx, c in enumerate(cells):
            lc = len(c)
            if 1 < lc < tsize:
                tsize = lc
                target = idx
                if lc == 2:
                    break
        if target < 0:
            self._leaf(cells)
            return
        cell = cells[target]
        branched: list[int] = []
        orbit_cache_size = -1
        applicable: list[tuple[int, ...]] = []
        local_uf: list[int] = []
        for v in cell:
            if branched:
                if orbit_cache_size != len(self.gens):
                    orbit_cache_size = len(self.gens)
                    prefix = self.prefix
                    applicable = [g for g in self.gens
                                  if all(g[p] == p for p in prefix)]
                    local_uf = list(range(self.n))
                    for g in applicable:
                        for a in range(self.n):
                            ga = g[a]
                            if ga != a:
                                _uf_union(local_uf, a, ga)
                if applicable:
                    rv = _uf_find(local_uf, v)
                    if any(_uf_find(local_uf, w) == rv for w in branched):
                        continue
            branched.append(v)
            sub = list(cells)
            rest = [u for u in cell if u != v]
            sub[target:target + 1] = [[v], rest]
            work: deque[int] = deque()
            work.append(1 << v)
            m = 0
            for u in rest:
                m |= 1 << u
            work.append(m)
            refine_partition(self.adj, sub, work)
            self.prefix.append(v)
            self._node(sub)
            self.prefix.pop()

    def _leaf(self, cells: list[list[int]]) -> None:
        n = self.n
        adj = self.adj
        lab = [c[0] for c in cells]
        pos = [0] * n
        for i, v in enumerate(lab):
            pos[v] = i
        rows = []
        for v in lab:
            m = adj[v]
            r = 0
            while m:
                b = m & -m
                r |= 1 << pos[b.bit_length() - 1]
                m ^= b
            rows.append(r)
        rows_t = tuple(rows)
        if self.first_rows is None:
            self.first_rows = rows_t
            self.first_pos = pos
            self.first_lab = lab
            self.best_rows = rows_t
            self.best_pos = pos
            self.best_lab = lab
            return
        if rows_t == self.first_rows:
            self._record_automorphism(pos, self.first_lab)
            return
        if rows_t < self.best_rows:
            self.best_rows = rows_t
            self.best_pos = pos
            self.best_lab = lab
        elif rows_t == self.best_rows:
            self._record_automorphism(pos, self.best_lab)


def _uf_find(uf: list[int], x: int) -> int:
    root = x
    while uf[root] != root:
        root = uf[root]
    while uf[x] != root:
        uf[x], x = root, uf[x]
    return root


def _uf_union(uf: list[int], a: int, b: int) -> None:
    ra, rb = _uf_find(uf, a), _uf_find(uf, b)
    if ra != rb:
        if rb < ra:
            ra, rb = rb, ra
        uf[rb] = ra


def _pack_certificate(n: int, rows: tuple[int, ...]) -> bytes:
    out = bytearray([n])
    acc = 0
    nb = 0
    for i in range(n):
        ri = rows[i]
        for j in range(i + 1, n):
            acc = (acc << 1) | (ri >> j & 1)
            nb += 1
            if nb == 8:
                out.append(acc)
                acc = 0
                nb = 0
    if nb:
        out.append(acc << (8 - nb))
    return bytes(out)


def canonicalize(adj: tuple[int, ...], n: int,
                 cells: list[list[int]] | None = None) -> CanonicalResult:
    """Full canonicalization of raw adjacency rows.

    ``cells`` may carry a precomputed :func:`root_partition` to avoid
    refining twice; it is not modified.
    """
    if n > MAX_ORDER:
        raise GraphError(f"order {n} exceeds the supported maximum {MAX_ORDER}")
    if n == 0:
        return CanonicalResult(b"\x00", (), (), ())
    if cells is None:
        cells = root_partition(adj, n)
    engine = _Canonizer(adj, n)
    engine.run(list(cells))
    # union-by-smaller-root keeps each class root equal to its least
    # member, so roots serve directly as orbit representatives
    orbit_rep = tuple(engine._find(v) for v in range(n))
    cert = _pack_certificate(n, engine.best_rows)
    return CanonicalResult(cert, tuple(engine.best_lab), orbit_rep,
                           tuple(engine.gens))


def canonical_form(g: Graph) -> tuple[Certificate, OrbitPartition]:
    """Certificate plus exact automorphism orbit partition of ``g``."""
    res = canonicalize(g.adj, g.n)
    return res.certificate, OrbitPartition(res.orbit_rep)


def certificate(g: Graph) -> Certificate:
    return canonicalize(g.adj, g.n).certificate


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabelled copy of ``g``."""
    res = canonicalize(g.adj, g.n)
    pos = [0] * g.n
    for i, v in enumerate(res.labeling):
        pos[v] = i
    rows = [0] * g.n
    for v in range(g.n):
        m = g.adj[v]
        r = 0
        while m:
            b = m & -m
            r |= 1 << pos[b.bit_length() - 1]
            m ^= b
        rows[pos[v]] = r
    return from_adjacency_rows(g.n, rows)


def certificate_to_graph(cert: Certificate) -> Graph:
    """Rebuild the canonically labelled graph a certificate encodes."""
    if not cert:
        raise GraphError("empty certificate")
    n = cert[0]
    body = cert[1:]
    expected = (n * (n - 1) // 2 + 7) // 8
    if len(body) != expected:
        raise GraphError(f"certificate payload has {len(body)} bytes, expected {expected}")
    rows = [0] * n
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if body[k >> 3] >> (7 - (k & 7)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return from_adjacency_rows(n, rows)


def _triangle_profile(g: Graph) -> list[int]:
    adj = g.adj
    out = []
    for v in range(g.n):
        t = 0
        m = adj[v]
        while m:
            b = m & -m
            t += (adj[v] & adj[b.bit_length() - 1]).bit_count()
            m ^= b
        out.append(t)
    out.sort()
    return out


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism via certificate equality, after cheap invariant
    prefilters (order, size, degree sequence, triangle profile)."""
    if g.n != h.n:
        return False
    if g.n == 0:
        return True
    if g.edge_count() != h.edge_count():
        return False
    if sorted(r.bit_count() for r in g.adj) != sorted(r.bit_count() for r in h.adj):
        return False
    if _triangle_profile(g) != _triangle_profile(h):
        return False
    return certificate(g) == certificate(h)


def is_vertex_transitive(g: Graph) -> bool:
    """True iff the automorphism group has a single vertex orbit."""
    if g.n <= 1:
        return True
    _, orbits = canonical_form(g)
    return orbits.orbit_count() == 1
