"""Named graph constructors and the graph6 codec."""

from __future__ import annotations

import re

from .graph import Graph, GraphError, make_graph


def circulant(n: int, connection_set) -> Graph:
    """Circulant graph: vertex ``i`` adjacent to ``i +- s (mod n)`` for
    every ``s`` in the connection set.

    Connection values must be distinct integers with ``1 <= s <= n/2``.
    """
    conns = list(connection_set)
    if len(set(conns)) != len(conns):
        raise GraphError(f"connection set {conns!r} has repeated values")
    for s in conns:
        if not isinstance(s, int) or not (1 <= s <= n / 2):
            raise GraphError(f"connection value {s!r} outside 1..{n // 2}")
    edges = []
    for i in range(n):
        for s in conns:
            edges.append((i, (i + s) % n))
    return make_graph(n, edges)


def lcf(halfsteps, repeats: int) -> Graph:
    """Cubic Hamiltonian graph from signed chord steps.

    Builds the cycle ``0..N-1`` (``N = len(halfsteps) * repeats``) plus a
    chord from each ``i`` to ``i + step`` where the step pattern repeats.
    The chord pattern must pair up exactly: the chord leaving the landing
    vertex must be the signed negation of the arriving one, every landing
    must avoid the cycle neighbours, and no vertex may collect two chords.
    """
    steps = list(halfsteps)
    if repeats < 1 or not steps:
        raise GraphError("need a nonempty step list and repeats >= 1")
    n = len(steps) * repeats
    if n < 3:
        raise GraphError(f"resulting order {n} is below 3")
    full = [steps[i % len(steps)] for i in range(n)]
    for i, s in enumerate(full):
        if not isinstance(s, int) or s == 0 or s % n == 0:
            raise GraphError(f"step {s!r} at position {i} is degenerate")
    chords = []
    for i, s in enumerate(full):
        j = (i + s) % n
        if j == (i + 1) % n or j == (i - 1) % n:
            raise GraphError(f"chord from {i} lands on a cycle neighbour {j}")
        if full[j] != -s:
            raise GraphError(
                f"chord collision: vertex {j} would exceed degree 3 "
                f"(step {full[j]} at {j} is not the reverse of step {s} at {i})")
        if i < j:
            chords.append((i, j))
    if len(chords) != n // 2 or len({v for c in chords for v in c}) != n:
        raise GraphError("chord collision: chords do not form a perfect matching")
    edges = [(i, (i + 1) % n) for i in range(n)] + chords
    return make_graph(n, edges)


_franklin_checked = False


def _franklin() -> Graph:
    """The cubic bipartite vertex-transitive squco graph on 12 vertices,
    realized as a Hamiltonian cycle with alternating +-5 chords.  The
    realization is verified once per process; a failure here means the
    chord table was mistranscribed.
    """
    global _franklin_checked
    g = lcf([5, -5], 6)
    if not _franklin_checked:
        from .checks import is_squco
        if not is_squco(g):
            raise RuntimeError("franklin construction failed its square-"
                               "complementarity self-check")
        _franklin_checked = True
    return g


def named(name: str) -> Graph:
    """Look up a named constructor.

    Known names: ``k1``, ``c<n>`` (n >= 3), ``franklin``, ``c41-squco``,
    ``heawood``, ``complete<n>``, ``path<n>``.
    """
    if name == "k1":
        return make_graph(1, [])
    if name == "franklin":
        return _franklin()
    if name == "c41-squco":
        return circulant(41, {4, 5, 8, 10})
    if name == "heawood":
        return lcf([5, -5], 7)
    m = re.fullmatch(r"c(\d+)", name)
    if m:
        n = int(m.group(1))
        if n < 3:
            raise GraphError(f"cycle order must be >= 3, got {n}")
        return make_graph(n, [(i, (i + 1) % n) for i in range(n)])
    m = re.fullmatch(r"complete(\d+)", name)
    if m:
        n = int(m.group(1))
        return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    m = re.fullmatch(r"path(\d+)", name)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise GraphError("path order must be >= 1")
        return make_graph(n, [(i, i + 1) for i in range(n - 1)])
    raise GraphError(f"unknown graph name {name!r}")


NAMED_EXAMPLES = ("k1", "c7", "franklin", "c41-squco", "heawood")


# --------------------------------------------------------------------------
# graph6 codec
# --------------------------------------------------------------------------

class Graph6Error(ValueError):
    """Malformed or unsupported graph6 input; ``offset`` is the byte index."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


_G6_HEADER = ">>graph6<<"


def g6_encode(g: Graph) -> str:
    """Standard graph6 line for ``g`` (short header form, order <= 62)."""
    n = g.n
    if n > 62:
        raise Graph6Error(f"order {n} exceeds graph6 short-form limit 62", 0)
    out = [chr(63 + n)]
    acc = 0
    nb = 0
    # upper-triangle bits in column order: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nb += 1
            if nb == 6:
                out.append(chr(63 + acc))
                acc = 0
                nb = 0
    if nb:
        out.append(chr(63 + (acc << (6 - nb))))
    return "".join(out)


def g6_decode(data) -> Graph:
    """Parse one graph6 line (optionally prefixed with ``>>graph6<<``)."""
    if isinstance(data, bytes):
        try:
            text = data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6Error("non-ASCII byte in graph6 input", exc.start) from None
    else:
        text = data
    text = text.rstrip("\r\n")
    base = 0
    if text.startswith(_G6_HEADER):
        text = text[len(_G6_HEADER):]
        base = len(_G6_HEADER)
    if not text:
        raise Graph6Error("empty graph6 input", base)
    head = ord(text[0])
    if head == 126:
        raise Graph6Error("long-form graph6 orders (> 62) are unsupported", base)
    n = head - 63
    if not (0 <= n <= 62):
        raise Graph6Error(f"invalid header byte {head}", base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(text) - 1 != nbytes:
        # point at the first missing/extra byte
        raise Graph6Error(
            f"expected {nbytes} payload bytes for order {n}, got {len(text) - 1}",
            base + 1 + min(len(text) - 1, nbytes))
    rows = [0] * n
    bit_index = 0
    for k, ch in enumerate(text[1:]):
        val = ord(ch) - 63
        if not (0 <= val < 64):
            raise Graph6Error(f"invalid payload byte {ord(ch)}", base + 1 + k)
        for t in range(5, -1, -1):
            if bit_index >= nbits:
                if val >> t & 1:
                    raise Graph6Error("nonzero padding bits", base + 1 + k)
                continue
            if val >> t & 1:
                # column-order position -> (i, j)
                j = _col_of(bit_index)
                i = bit_index - j * (j - 1) // 2
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit_index += 1
    return Graph(n, tuple(rows))


def _col_of(k: int) -> int:
    # largest j with j*(j-1)/2 <= k
    j = int((2 * k) ** 0.5) + 2
    while j * (j - 1) // 2 > k:
        j -= 1
    return j


def g6_lines(stream) -> list[Graph]:
    """Decode every nonempty line of an iterable of text lines."""
    return [g6_decode(line) for line in stream if line.strip()]
