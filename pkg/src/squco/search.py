"""Isomorph-free exhaustive enumeration with pruning and checkpoints.

Generation is by canonical augmentation: every representative of order m
is extended by one new vertex joined to each admissible neighbour subset,
and a child survives only when the new vertex lies in the automorphism
orbit of its canonical deletion vertex (the vertex the canonical labeling
maps to the highest index).  Monotone conditions prune subsets up front:
a degree cap, and "no cycle shorter than min_girth", which holds for the
child iff the chosen neighbours are pairwise at distance at least
``min_girth - 2`` in the parent.  Everything non-hereditary (connectivity,
radius/diameter, girth upper bound, degree consistency, the squco verdict)
runs only on leaves, i.e. representatives inside the requested order range.

Two soundness shortcuts avoid most full canonicalizations: refinement
orders cells by ascending degree, so the canonical deletion vertex always
has maximum degree (reject children whose new vertex does not), and it
always lies in the last cell of the root equitable partition (reject when
the new vertex does not).

Work splits into independent branches at the first order with enough
representatives; branch results merge associatively, which makes output
identical across worker counts, and completed branches persist to a
line-hashed checkpoint file so interrupted campaigns resume exactly.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from collections import Counter
from dataclasses import dataclass
from typing import Callable, NamedTuple

from ._version import __version__
from .checks import FILTERS, is_squco, report
from .graph import Graph, MAX_ORDER, girth
from .generate import g6_decode, g6_encode
from .iso import canonicalize, certificate_to_graph, root_partition

_SPLIT_MIN_BRANCHES = 16


class SearchError(ValueError):
    """Invalid search configuration."""


class CheckpointError(Exception):
    """Unusable checkpoint file (corruption or config mismatch)."""


class SearchInterrupted(RuntimeError):
    """Raised when a branch hook stops the campaign early."""


@dataclass(frozen=True)
class SearchConfig:
    """Enumeration campaign description.

    ``min_girth`` prunes during generation (hereditary); ``max_girth``,
    the named leaf filters and the squco check apply at leaf orders only.
    """

    n_min: int
    n_max: int
    min_girth: int | None = None
    max_girth: int | None = None
    max_degree: int | None = None
    leaf_filters: tuple[str, ...] = ()
    squco_check: bool = False
    jobs: int = 1
    checkpoint_path: str | None = None
    split_order: int | None = None

    def validate(self) -> None:
        if not (1 <= self.n_min <= self.n_max):
            raise SearchError(f"need 1 <= n_min <= n_max, got {self.n_min}..{self.n_max}")
        if self.n_max > MAX_ORDER:
            raise SearchError(f"n_max {self.n_max} exceeds the order cap {MAX_ORDER}")
        if self.min_girth is not None and self.min_girth < 3:
            raise SearchError(f"min_girth must be >= 3, got {self.min_girth}")
        if self.max_girth is not None and self.max_girth < 3:
            raise SearchError(f"max_girth must be >= 3, got {self.max_girth}")
        if self.max_degree is not None and self.max_degree < 0:
            raise SearchError(f"max_degree must be >= 0, got {self.max_degree}")
        for name in self.leaf_filters:
            if name not in FILTERS:
                raise SearchError(f"unknown leaf filter {name!r}; known: {', '.join(FILTERS)}")
        if self.jobs < 1:
            raise SearchError(f"jobs must be >= 1, got {self.jobs}")
        if self.split_order is not None and not (1 <= self.split_order <= self.n_max):
            raise SearchError(f"split_order {self.split_order} outside 1..{self.n_max}")

    def digest(self) -> str:
        """Hash of the search semantics (worker count excluded, so runs
        with different parallelism share checkpoints)."""
        payload = {
            "n_min": self.n_min,
            "n_max": self.n_max,
            "min_girth": self.min_girth,
            "max_girth": self.max_girth,
            "max_degree": self.max_degree,
            "leaf_filters": list(self.leaf_filters),
            "squco_check": self.squco_check,
            "split_order": self.split_order,
        }
        blob = json.dumps(payload, sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:16]


class AcceptedGraph(NamedTuple):
    g6: str
    certificate: str  # hex
    order: int


@dataclass
class SearchSummary:
    """Merged campaign results: counts per order, per-filter rejection
    tallies, and the accepted classes' certificates."""

    config_digest: str
    accepted: tuple[AcceptedGraph, ...]
    accepted_per_order: dict[int, int]
    visited_per_order: dict[int, int]
    filter_rejections: dict[str, int]
    branch_count: int
    duration_seconds: float

    def deterministic_dict(self) -> dict:
        """Everything except wall-clock timing, for byte-level comparison."""
        return {
            "config_digest": self.config_digest,
            "accepted": [list(a) for a in self.accepted],
            "accepted_per_order": {str(k): v for k, v in sorted(self.accepted_per_order.items())},
            "visited_per_order": {str(k): v for k, v in sorted(self.visited_per_order.items())},
            "filter_rejections": {k: v for k, v in sorted(self.filter_rejections.items())},
            "branch_count": self.branch_count,
        }

    def format_text(self) -> str:
        lines = [f"config: {self.config_digest}"]
        lines.append(f"accepted: {len(self.accepted)}")
        for order in sorted(self.accepted_per_order):
            lines.append(f"accepted[n={order}]: {self.accepted_per_order[order]}")
        for order in sorted(self.visited_per_order):
            lines.append(f"classes[n={order}]: {self.visited_per_order[order]}")
        for name in sorted(self.filter_rejections):
            lines.append(f"rejected[{name}]: {self.filter_rejections[name]}")
        lines.append(f"branches: {self.branch_count}")
        lines.append(f"duration: {self.duration_seconds:.3f}s")
        return "\n".join(lines)


# --------------------------------------------------------------------------
# candidate subsets
# --------------------------------------------------------------------------

def _all_pairs_dist(adj: tuple[int, ...], n: int) -> list[list[int]]:
    """BFS distances; -1 marks unreachable pairs."""
    out = []
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        seen = 1 << s
        frontier = seen
        d = 0
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                nxt |= adj[b.bit_length() - 1]
                m ^= b
            nxt &= ~seen
            d += 1
            m = nxt
            while m:
                b = m & -m
                dist[b.bit_length() - 1] = d
                m ^= b
            seen |= nxt
            frontier = nxt
        out.append(dist)
    return out


def _admissible_masks(adj: tuple[int, ...], n: int, cfg: SearchConfig) -> list[int]:
    """Neighbour subsets for the new vertex honouring the monotone prunes,
    as bitmasks in ascending order."""
    if n == 0:
        return [0]
    cap = cfg.max_degree
    allowed = (1 << n) - 1
    if cap is not None:
        if cap <= 0:
            return [0]
        for v in range(n):
            if adj[v].bit_count() >= cap:
                allowed &= ~(1 << v)
    ming = cfg.min_girth
    if ming is not None and ming >= 4:
        # a new cycle through the added vertex uses two chosen neighbours
        # u, w plus a parent path, so its length is d(u, w) + 2
        dist = _all_pairs_dist(adj, n)
        need = ming - 2
        compat = [0] * n
        for u in range(n):
            du = dist[u]
            for w in range(u + 1, n):
                d = du[w]
                if d < 0 or d >= need:
                    compat[u] |= 1 << w
                    compat[w] |= 1 << u
        out: list[int] = []
        limit = cap if cap is not None else n

        def rec(cur: int, cand: int, size: int) -> None:
            out.append(cur)
            if size == limit:
                return
            m = cand
            while m:
                b = m & -m
                v = b.bit_length() - 1
                m ^= b
                rec(cur | b, m & compat[v], size + 1)

        rec(0, allowed, 0)
        out.sort()
        return out
    if allowed == (1 << n) - 1 and cap is None:
        return list(range(1 << n))
    out = [0]
    sub = allowed
    while sub:
        if cap is None or sub.bit_count() <= cap:
            out.append(sub)
        sub = (sub - 1) & allowed
    out.sort()
    return out


def _orbit_reps(masks: list[int], gens: tuple[tuple[int, ...], ...]) -> list[int]:
    """One subset per orbit of the parent's automorphism group (isomorphic
    subsets build isomorphic children, so the rest are redundant)."""
    seen: set[int] = set()
    reps = []
    for m in masks:
        if m in seen:
            continue
        reps.append(m)
        seen.add(m)
        frontier = [m]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = 0
                t = x
                while t:
                    b = t & -t
                    y |= 1 << g[b.bit_length() - 1]
                    t ^= b
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
    return reps


# --------------------------------------------------------------------------
# exploration
# --------------------------------------------------------------------------

class _Explorer:
    __slots__ = ("cfg", "accepted", "visited", "tallies")

    def __init__(self, cfg: SearchConfig):
        self.cfg = cfg
        self.accepted: list[bytes] = []
        self.visited: Counter = Counter()
        self.tallies: Counter = Counter()

    def visit_rep(self, adj: tuple[int, ...], n: int, cert: bytes) -> None:
        self.visited[n] += 1
        if n < self.cfg.n_min:
            return
        g = Graph(n, adj)
        if self._leaf_accept(g):
            self.accepted.append(cert)

    def _leaf_accept(self, g: Graph) -> bool:
        cfg = self.cfg
        if cfg.max_girth is not None and girth(g) > cfg.max_girth:
            self.tallies["max-girth"] += 1
            return False
        for name in cfg.leaf_filters:
            passed, _ = FILTERS[name](g)
            if not passed:
                self.tallies[name] += 1
                return False
        if cfg.squco_check and not is_squco(g):
            self.tallies["squco"] += 1
            return False
        return True

    def children(self, adj: tuple[int, ...], n: int,
                 gens: tuple[tuple[int, ...], ...]):
        masks = _admissible_masks(adj, n, self.cfg)
        if gens:
            masks = _orbit_reps(masks, gens)
        degs = [r.bit_count() for r in adj]
        newbit = 1 << n
        nn = n + 1
        out = []
        seen_certs: set[bytes] = set()
        for mask in masks:
            size = mask.bit_count()
            # the canonical deletion vertex always has maximum degree
            rejected = False
            for v in range(n):
                if degs[v] + (mask >> v & 1) > size:
                    rejected = True
                    break
            if rejected:
                continue
            rows = list(adj)
            m = mask
            while m:
                b = m & -m
                rows[b.bit_length() - 1] |= newbit
                m ^= b
            rows.append(mask)
            cadj = tuple(rows)
            cells = root_partition(cadj, nn)
            if n not in cells[-1]:
                continue
            res = canonicalize(cadj, nn, cells)
            if res.orbit_rep[n] != res.orbit_rep[res.labeling[nn - 1]]:
                continue
            cert = res.certificate
            if cert in seen_certs:
                continue
            seen_certs.add(cert)
            out.append((cadj, res.generators, cert))
        return out

    def explore_subtree(self, adj: tuple[int, ...], n: int,
                        gens: tuple[tuple[int, ...], ...]) -> None:
        cfg_max = self.cfg.n_max
        for cadj, cgens, cert in self.children(adj, n, gens):
            self.visit_rep(cadj, n + 1, cert)
            if n + 1 < cfg_max:
                self.explore_subtree(cadj, n + 1, cgens)


def _branch_worker(payload):
    adj, gens, cfg = payload
    exp = _Explorer(cfg)
    exp.explore_subtree(adj, len(adj), gens)
    return {
        "accepted": [c.hex() for c in exp.accepted],
        "visited": {str(k): v for k, v in exp.visited.items()},
        "tallies": dict(exp.tallies),
    }


# --------------------------------------------------------------------------
# checkpoints
# --------------------------------------------------------------------------

def _line_hash(payload: str) -> str:
    return hashlib.sha256(payload.encode()).hexdigest()[:12]


def checkpoint_save(path: str, digest: str, branch_results: dict[str, dict]) -> None:
    """Atomically persist completed branch results.

    Line-oriented: a header with the config digest and tool version, one
    line per completed branch with its accepted count, then the merged
    branch payload; every line carries a trailing integrity hash.
    """
    lines = []
    head = f"H v1 {digest} {__version__}"
    lines.append(f"{head} #{_line_hash(head)}")
    for bid in sorted(branch_results):
        b = f"B {bid} {len(branch_results[bid]['accepted'])}"
        lines.append(f"{b} #{_line_hash(b)}")
    body = "S " + json.dumps({"branches": branch_results}, sort_keys=True)
    lines.append(f"{body} #{_line_hash(body)}")
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")
    os.replace(tmp, path)


def checkpoint_load(path: str) -> tuple[str, str, dict[str, dict]] | None:
    """Parse a checkpoint; ``None`` when the file is missing or empty.

    Raises :class:`CheckpointError` on any integrity failure.
    """
    if not os.path.exists(path):
        return None
    with open(path, encoding="ascii") as fh:
        text = fh.read()
    if not text.strip():
        return None
    lines = text.splitlines()
    parsed = []
    for idx, line in enumerate(lines):
        payload, sep, tail = line.rpartition(" #")
        if not sep or _line_hash(payload) != tail:
            raise CheckpointError(f"integrity hash mismatch on line {idx + 1}")
        parsed.append(payload)
    if not parsed[0].startswith("H v1 "):
        raise CheckpointError("missing checkpoint header")
    _, _, digest, version = parsed[0].split(" ")
    counts: dict[str, int] = {}
    for payload in parsed[1:-1]:
        parts = payload.split(" ")
        if len(parts) != 3 or parts[0] != "B":
            raise CheckpointError(f"malformed branch line {payload!r}")
        counts[parts[1]] = int(parts[2])
    if not parsed[-1].startswith("S "):
        raise CheckpointError("missing summary section")
    data = json.loads(parsed[-1][2:])
    branches = data.get("branches", {})
    if set(counts) != set(branches):
        raise CheckpointError("branch lines disagree with the summary section")
    for bid, cnt in counts.items():
        if len(branches[bid]["accepted"]) != cnt:
            raise CheckpointError(f"accepted count mismatch for branch {bid}")
    return digest, version, branches


# --------------------------------------------------------------------------
# driver
# --------------------------------------------------------------------------

VisitFn = Callable[[Graph, "object"], None]
BranchHook = Callable[[int, int], object]


def enumerate_graphs(config: SearchConfig, visit: VisitFn | None = None,
                     branch_hook: BranchHook | None = None) -> SearchSummary:
    """Run a campaign and return the merged summary.

    ``visit(graph, property_report)`` is called once per accepted class
    after the search completes, in certificate order.  ``branch_hook``
    receives (completed, total) after each branch; returning ``False``
    aborts the run (completed branches stay in the checkpoint).
    """
    config.validate()
    start = time.perf_counter()
    digest = config.digest()

    stored: dict[str, dict] = {}
    if config.checkpoint_path:
        loaded = checkpoint_load(config.checkpoint_path)
        if loaded is not None:
            ck_digest, _version, branches = loaded
            if ck_digest != digest:
                raise CheckpointError(
                    f"checkpoint digest {ck_digest} does not match configuration {digest}")
            stored = branches

    # sequential prefix: grow level by level until there are enough
    # representatives to split into independent branches
    exp = _Explorer(config)
    k1_res = canonicalize((0,), 1)
    exp.visit_rep((0,), 1, k1_res.certificate)
    level: list[tuple[tuple[int, ...], tuple, bytes]] = [
        ((0,), k1_res.generators, k1_res.certificate)]
    order = 1
    while order < config.n_max and level:
        if config.split_order is not None:
            if order >= config.split_order:
                break
        elif len(level) >= _SPLIT_MIN_BRANCHES:
            break
        nxt = []
        for adj, gens, _cert in level:
            for cadj, cgens, ccert in exp.children(adj, order, gens):
                exp.visit_rep(cadj, order + 1, ccert)
                nxt.append((cadj, cgens, ccert))
        level = nxt
        order += 1

    branches = level if order < config.n_max else []
    branch_ids = [cert.hex() for _adj, _gens, cert in branches]
    if stored and not set(stored) <= set(branch_ids):
        raise CheckpointError("checkpoint contains unknown branch ids")

    results: dict[str, dict] = dict(stored)
    pending = [(adj, gens, cert.hex()) for (adj, gens, cert) in branches
               if cert.hex() not in stored]
    total = len(branch_ids)
    done = len(stored)

    def finish_branch(bid: str, res: dict) -> None:
        nonlocal done
        results[bid] = res
        done += 1
        if config.checkpoint_path:
            checkpoint_save(config.checkpoint_path, digest, results)
        if branch_hook is not None and branch_hook(done, total) is False:
            raise SearchInterrupted(f"stopped after {done}/{total} branches")

    if pending:
        if config.jobs > 1 and len(pending) > 1:
            import multiprocessing

            payloads = [(adj, gens, config) for adj, gens, _bid in pending]
            ids = [bid for _adj, _gens, bid in pending]
            with multiprocessing.Pool(processes=config.jobs) as pool:
                for bid, res in zip(ids, pool.imap(_branch_worker, payloads, chunksize=1)):
                    finish_branch(bid, res)
        else:
            for adj, gens, bid in pending:
                finish_branch(bid, _branch_worker((adj, gens, config)))

    # merge
    all_certs = list(exp.accepted)
    visited = Counter(exp.visited)
    tallies = Counter(exp.tallies)
    for bid in branch_ids:
        res = results[bid]
        all_certs.extend(bytes.fromhex(c) for c in res["accepted"])
        visited.update({int(k): v for k, v in res["visited"].items()})
        tallies.update(res["tallies"])
    all_certs.sort()
    if len(set(all_certs)) != len(all_certs):
        raise RuntimeError("duplicate certificates emitted; enumeration bug")
    accepted = tuple(
        AcceptedGraph(g6_encode(certificate_to_graph(c)), c.hex(), c[0])
        for c in all_certs)
    summary = SearchSummary(
        config_digest=digest,
        accepted=accepted,
        accepted_per_order=dict(Counter(a.order for a in accepted)),
        visited_per_order=dict(visited),
        filter_rejections=dict(tallies),
        branch_count=total,
        duration_seconds=time.perf_counter() - start,
    )
    if visit is not None:
        for item in accepted:
            g = g6_decode(item.g6)
            visit(g, report(g))
    return summary
