"""Simple undirected graphs on at most 64 vertices.

Neighborhoods are stored as integer bitsets, one per vertex, so degree
queries and set operations are single-word operations at the sizes used
here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class GraphInputError(ValueError):
    """Raised for malformed graphs or out-of-range vertex ids."""


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    delta_min: int
    delta_max: int
    m: int


class Graph:
    """Immutable simple graph with vertex set {0, ..., n-1}."""

    __slots__ = ("n", "rows", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not 1 <= n <= MAX_VERTICES:
            raise GraphInputError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        rows = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphInputError(f"loop at vertex {u}")
            if rows[u] >> v & 1:
                raise GraphInputError(f"repeated edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            m += 1
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "_m", m)

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        """Build from adjacency bitsets; checks symmetry and irreflexivity."""
        n = len(rows)
        if not 1 <= n <= MAX_VERTICES:
            raise GraphInputError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        full = (1 << n) - 1
        for v, r in enumerate(rows):
            if r & ~full or r >> v & 1:
                raise GraphInputError(f"row {v} has loop or out-of-range bits")
            rest = r
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                if not rows[u] >> v & 1:
                    raise GraphInputError(f"asymmetric adjacency between {v} and {u}")
                rest ^= low
        return cls._trusted(tuple(rows))

    @classmethod
    def _trusted(cls, rows: tuple[int, ...]) -> "Graph":
        g = object.__new__(cls)
        object.__setattr__(g, "n", len(rows))
        object.__setattr__(g, "rows", rows)
        object.__setattr__(g, "_m", sum(r.bit_count() for r in rows) // 2)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges())})"

    @property
    def m(self) -> int:
        return self._m

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphInputError(f"vertex {v} out of range for n={self.n}")

    def degree(self, v: int) -> int:
        self._check(v)
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        self._check(v)
        return _bits(self.rows[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.rows[u] >> v & 1)

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def degree_profile(self) -> DegreeProfile:
        d = self.degrees()
        return DegreeProfile(tuple(d), min(d), max(d), self._m)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, r in enumerate(self.rows):
            for v in _bits(r >> (u + 1) << (u + 1)):
                yield u, v

    def is_connected(self) -> bool:
        return is_connected(self)

    def delete_vertex(self, v: int) -> "Graph":
        return delete_vertex(self, v)


def _bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def reachable(rows: Sequence[int], start: int, allowed: int) -> int:
    """Bitset of vertices reachable from `start` inside the `allowed` mask."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= rows[low.bit_length() - 1]
            frontier ^= low
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(g: Graph) -> bool:
    full = (1 << g.n) - 1
    return reachable(g.rows, 0, full) == full


def delete_vertex(g: Graph, v: int) -> Graph:
    """Induced subgraph on V minus {v}; later vertices shift down by one."""
    g._check(v)
    if g.n < 2:
        raise GraphInputError("cannot delete the only vertex")
    low_mask = (1 << v) - 1
    rows = []
    for u, r in enumerate(g.rows):
        if u == v:
            continue
        rows.append((r & low_mask) | ((r >> (v + 1)) << v))
    return Graph._trusted(tuple(rows))


FAMILY_MIN_N = {"complete": 1, "star": 2, "cycle": 3, "path": 1, "star_plus_edge": 3}


def make_family(name: str, n: int) -> Graph:
    """Named graphs. The star and S*_n use vertex 0 as the center."""
    if name not in FAMILY_MIN_N:
        raise GraphInputError(f"unknown family {name!r}; choose from {sorted(FAMILY_MIN_N)}")
    if n < FAMILY_MIN_N[name] or n > MAX_VERTICES:
        raise GraphInputError(f"{name} needs {FAMILY_MIN_N[name]} <= n <= {MAX_VERTICES}, got {n}")
    if name == "complete":
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    elif name == "star":
        edges = [(0, v) for v in range(1, n)]
    elif name == "cycle":
        edges = [(v, (v + 1) % n) for v in range(n)]
    elif name == "path":
        edges = [(v, v + 1) for v in range(n - 1)]
    else:
        edges = [(0, v) for v in range(1, n)] + [(1, 2)]
    return Graph(n, edges)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph._trusted(tuple(full & ~r & ~(1 << v) for v, r in enumerate(g.rows)))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex v renamed to perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise GraphInputError("perm must be a permutation of range(n)")
    rows = [0] * g.n
    for u, v in g.edges():
        rows[perm[u]] |= 1 << perm[v]
        rows[perm[v]] |= 1 << perm[u]
    return Graph._trusted(tuple(rows))
