"""Connected-graph generation, seeded sampling and graph6 I/O.

Exhaustive generation grows connected graphs one vertex at a time.  A child
``P + v`` of a connected parent ``P`` is kept only if ``v`` is a non-cut
vertex that is minimal under an isomorphism-invariant key among the non-cut
vertices of the child; since removing such a vertex leaves a connected
graph, every isomorphism class is reached from some parent in the previous
level.  Surviving children are deduplicated by canonical code within each
edge count, and each edge-count class is emitted in sorted canonical order.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Iterator

from .graph import MAX_VERTICES, Graph, GraphInputError, reachable

MAX_EXHAUSTIVE_N = 10

# number of connected graphs on n unlabeled vertices (OEIS A001349)
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117,
                    9: 261080, 10: 11716571}


class Graph6ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


# ---------------------------------------------------------------------------
# canonical form


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition."""
    while True:
        masks = []
        for cell in cells:
            mask = 0
            for v in cell:
                mask |= 1 << v
            masks.append(mask)
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple((rows[v] & mk).bit_count() for mk in masks) for v in cell}
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                groups.setdefault(sig[v], []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                out.extend(groups[k] for k in sorted(groups))
        if len(out) == len(cells):
            return out
        cells = out


def _code(rows: tuple[int, ...], order: list[int]) -> int:
    """Upper-triangle adjacency bits in column order (graph6 bit order)."""
    code = 0
    for j in range(1, len(order)):
        rj = rows[order[j]]
        for i in range(j):
            code = (code << 1) | (rj >> order[i] & 1)
    return code


def canonical_code(rows: tuple[int, ...]) -> int:
    """Maximum code over the leaves of an individualization-refinement tree.

    Vertices that are twins (same neighborhood apart from each other) are
    swapped by an automorphism fixing the current node, so only one of each
    twin class is individualized.
    """
    n = len(rows)
    if n == 1:
        return 0
    best = -1
    stack = [_refine(rows, [list(range(n))])]
    while stack:
        cells = stack.pop()
        k = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if k is None:
            code = _code(rows, [c[0] for c in cells])
            if code > best:
                best = code
            continue
        target = cells[k]
        reps: list[int] = []
        for v in target:
            if any((rows[v] & ~(1 << w)) == (rows[w] & ~(1 << v)) for w in reps):
                continue
            reps.append(v)
            split = cells[:k] + [[v], [w for w in target if w != v]] + cells[k + 1:]
            stack.append(_refine(rows, split))
    return best


def canonical_form(g: Graph) -> Graph:
    """The representative of g's isomorphism class with maximal code."""
    return _from_code(g.n, canonical_code(g.rows))


def _from_code(n: int, code: int) -> Graph:
    rows = [0] * n
    bit = n * (n - 1) // 2 - 1
    for j in range(1, n):
        for i in range(j):
            if code >> bit & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit -= 1
    return Graph._trusted(tuple(rows))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_code(g.rows) == canonical_code(h.rows)


# ---------------------------------------------------------------------------
# exhaustive generation


@dataclass(frozen=True)
class GraphFilter:
    """Inclusive (lo, hi) ranges; None leaves a parameter unconstrained."""

    m: tuple[int, int] | None = None
    max_degree: tuple[int, int] | None = None
    min_degree: tuple[int, int] | None = None

    def accepts(self, g: Graph) -> bool:
        if self.m is not None and not self.m[0] <= g.m <= self.m[1]:
            return False
        if self.max_degree is None and self.min_degree is None:
            return True
        d = g.degrees()
        if self.max_degree is not None and not self.max_degree[0] <= max(d) <= self.max_degree[1]:
            return False
        if self.min_degree is not None and not self.min_degree[0] <= min(d) <= self.min_degree[1]:
            return False
        return True


class GraphStream:
    """Single-pass iterator over graphs, with the parameters that produced it."""

    def __init__(self, n: int, source: Iterator[Graph], filter: GraphFilter | None = None):
        self.n = n
        self.filter = filter
        self._it = iter(source)

    def __iter__(self):
        return self

    def __next__(self) -> Graph:
        return next(self._it)


def _is_cut_vertex(rows: list[int], u: int, full: int) -> bool:
    allowed = full & ~(1 << u)
    start = (allowed & -allowed).bit_length() - 1
    return reachable(rows, start, allowed) != allowed


def _accept_child(rows: list[int], degs: list[int], v: int) -> bool:
    """Is the new vertex v minimal among non-cut vertices under the key?

    key(u) = (degree, sorted neighbor degrees); smaller is preferred.
    """
    dv = degs[v]
    full = (1 << len(rows)) - 1
    key_v = None
    for u in range(len(rows)):
        if u == v or degs[u] > dv:
            continue
        if degs[u] == dv:
            if key_v is None:
                key_v = _nbr_key(rows[v], degs)
            key_u = _nbr_key(rows[u], degs)
            if key_u >= key_v:
                continue
        if degs[u] == 1 or not _is_cut_vertex(rows, u, full):
            return False
    return True


def _nbr_key(row: int, degs: list[int]) -> tuple[int, ...]:
    out = []
    while row:
        low = row & -row
        out.append(degs[low.bit_length() - 1])
        row ^= low
    out.sort()
    return tuple(out)


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[tuple[int, ...], ...]:
    """All connected graphs on n vertices as canonical row tuples."""
    if n == 1:
        return ((0,),)
    out = []
    for m in range(n - 1, comb(n, 2) + 1):
        out.extend(rows for _, rows in _children_with_m(n, m))
    return tuple(out)


def _children_with_m(n: int, m: int) -> list[tuple[int, tuple[int, ...]]]:
    """Canonical (code, rows) for connected n-vertex graphs with m edges, sorted."""
    if n == 1:
        return [(0, (0,))] if m == 0 else []
    v = n - 1
    seen: dict[int, tuple[int, ...]] = {}
    for parent in _level(n - 1):
        pm = sum(r.bit_count() for r in parent) // 2
        k = m - pm
        if not 1 <= k <= n - 1:
            continue
        pdeg = [r.bit_count() for r in parent]
        for nbrs in combinations(range(n - 1), k):
            rows = list(parent)
            degs = pdeg[:]
            mask = 0
            for u in nbrs:
                rows[u] |= 1 << v
                degs[u] += 1
                mask |= 1 << u
            rows.append(mask)
            degs.append(k)
            if not _accept_child(rows, degs, v):
                continue
            code = canonical_code(tuple(rows))
            if code not in seen:
                seen[code] = tuple(rows)
    out = []
    for code in sorted(seen):
        out.append((code, _from_code(n, code).rows))
    return out


def enumerate_connected(n: int, filter: GraphFilter | None = None) -> GraphStream:
    """One canonical representative per isomorphism class of connected graphs.

    Order: by edge count, then by canonical code.  Deterministic.
    """
    if n < 1:
        raise GraphInputError(f"n must be >= 1, got {n}")
    if n > MAX_EXHAUSTIVE_N:
        raise GraphInputError(
            f"exhaustive enumeration is capped at n={MAX_EXHAUSTIVE_N} "
            f"({CONNECTED_COUNTS[MAX_EXHAUSTIVE_N]} graphs already); use sample_connected for n={n}"
        )

    def gen():
        lo, hi = n - 1, comb(n, 2)
        if filter is not None and filter.m is not None:
            lo, hi = max(lo, filter.m[0]), min(hi, filter.m[1])
        for m in range(lo, hi + 1):
            for _, rows in _children_with_m(n, m):
                g = Graph._trusted(rows)
                if filter is None or filter.accepts(g):
                    yield g

    return GraphStream(n, gen(), filter)


# ---------------------------------------------------------------------------
# sampling


@dataclass(frozen=True)
class SamplerConfig:
    """Seeded sampler of connected labeled graphs.

    ``m`` is an edge count, or an inclusive (lo, hi) range cycled through
    sample by sample; ``p`` is an edge probability (G(n, p) conditioned on
    connectivity).  Exactly one of them must be given.
    """

    n: int
    m: int | tuple[int, int] | None = None
    p: float | None = None
    seed: int = 0
    count: int = 1

    def edge_counts(self) -> list[int] | None:
        if self.m is None:
            return None
        if isinstance(self.m, int):
            return [self.m]
        return list(range(self.m[0], self.m[1] + 1))

    def validate(self) -> None:
        if not 2 <= self.n <= MAX_VERTICES:
            raise GraphInputError(f"sampler needs 2 <= n <= {MAX_VERTICES}, got {self.n}")
        if (self.m is None) == (self.p is None):
            raise GraphInputError("give exactly one of m (edge count) or p (edge probability)")
        if self.count < 0:
            raise GraphInputError("count must be nonnegative")
        ms = self.edge_counts()
        if ms is not None:
            if not ms:
                raise GraphInputError(f"empty edge-count range {self.m}")
            for m in ms:
                if not self.n - 1 <= m <= comb(self.n, 2):
                    raise GraphInputError(
                        f"no connected graph on n={self.n} vertices has m={m} edges "
                        f"(need {self.n - 1} <= m <= {comb(self.n, 2)})"
                    )
        elif not 0 < self.p <= 1:
            raise GraphInputError(f"edge probability must be in (0, 1], got {self.p}")


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for v in range(1, n) for u in range(v)]


def _sample_one(rng: random.Random, n: int, m: int | None, p: float | None,
                pairs: list[tuple[int, int]]) -> Graph:
    full = (1 << n) - 1
    if m == n - 1 and n >= 2:
        return _prufer_tree(rng, n)
    while True:
        if m is not None:
            chosen = rng.sample(range(len(pairs)), m)
        else:
            chosen = [i for i in range(len(pairs)) if rng.random() < p]
        rows = [0] * n
        for i in chosen:
            u, v = pairs[i]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        if reachable(rows, 0, full) == full:
            return Graph._trusted(tuple(rows))


def _prufer_tree(rng: random.Random, n: int) -> Graph:
    """Uniform labeled tree (same law as rejection sampling at m = n - 1)."""
    if n == 2:
        return Graph._trusted((0b10, 0b01))
    seq = [rng.randrange(n) for _ in range(n - 2)]
    count = [1] * n
    for x in seq:
        count[x] += 1
    leaves = [v for v in range(n) if count[v] == 1]
    heapq.heapify(leaves)
    rows = [0] * n
    for x in seq:
        leaf = heapq.heappop(leaves)
        rows[leaf] |= 1 << x
        rows[x] |= 1 << leaf
        count[x] -= 1
        if count[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph._trusted(tuple(rows))


def sample_connected(cfg: SamplerConfig) -> GraphStream:
    """Uniform over connected labeled graphs with the given m (rejection; Pruefer codes for trees)."""
    cfg.validate()

    def gen():
        rng = random.Random(cfg.seed)
        pairs = _pairs(cfg.n)
        ms = cfg.edge_counts()
        for i in range(cfg.count):
            m = ms[i % len(ms)] if ms is not None else None
            yield _sample_one(rng, cfg.n, m, cfg.p, pairs)

    return GraphStream(cfg.n, gen())


# ---------------------------------------------------------------------------
# graph6


def write_graph6(g: Graph) -> bytes:
    n = g.n
    if n <= 62:
        out = bytearray([n + 63])
    else:
        out = bytearray([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    acc = nbits = 0
    for j in range(1, n):
        rj = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | (rj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


_HEADER = b">>graph6<<"


def read_graph6(line: bytes | str) -> Graph:
    if isinstance(line, str):
        line = line.encode("ascii", errors="replace")
    data = line.rstrip(b"\r\n")
    base = 0
    if data.startswith(_HEADER):
        data = data[len(_HEADER):]
        base = len(_HEADER)
    if not data:
        raise Graph6ParseError("empty graph6 string", base)
    for i, c in enumerate(data):
        if not 63 <= c <= 126:
            raise Graph6ParseError(f"byte {c!r} outside graph6 range 63..126", base + i)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    else:
        if len(data) < 4:
            raise Graph6ParseError("truncated vertex-count header", base + len(data))
        if data[1] == 126:
            raise Graph6ParseError(f"vertex count above {MAX_VERTICES} not supported", base + 1)
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
        if n <= 62:
            raise Graph6ParseError(f"non-minimal header for n={n}", base)
    if not 1 <= n <= MAX_VERTICES:
        raise Graph6ParseError(f"vertex count {n} outside 1..{MAX_VERTICES}", base)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise Graph6ParseError(f"expected {need} data bytes for n={n}, found {len(body)}",
                               base + pos + min(len(body), need))
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    pad = 6 * need - nbits
    if pad and (body[-1] - 63) & ((1 << pad) - 1):
        raise Graph6ParseError("nonzero padding bits", base + pos + need - 1)
    return Graph._trusted(tuple(rows))


def iter_graph6(lines: Iterable[bytes | str]) -> Iterator[tuple[int, Graph]]:
    """(1-based line number, graph) pairs; blank lines and a bare header are skipped."""
    for lineno, line in enumerate(lines, 1):
        raw = line.encode() if isinstance(line, str) else line
        stripped = raw.strip()
        if not stripped or stripped == _HEADER:
            continue
        try:
            yield lineno, read_graph6(stripped)
        except Graph6ParseError as exc:
            raise Graph6ParseError(f"line {lineno}: {exc.args[0].rsplit(' (byte', 1)[0]}",
                                   exc.offset) from None
