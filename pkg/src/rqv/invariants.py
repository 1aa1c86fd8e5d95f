"""Randić index, neighbor-degree averages and per-graph reports."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .graph import Graph, GraphInputError, is_connected
from .interval import Interval, isqrt_interval
from .spectral import DEFAULT_TOL, SpectralResult, lambda1, q_radius


def randic_index(g: Graph) -> Interval:
    """Enclosure of the sum over edges of 1/sqrt(d(u) d(v))."""
    degs = g.degrees()
    if min(degs) == 0:
        raise GraphInputError(f"vertex {degs.index(0)} is isolated; Randić index undefined")
    pairs = Counter()
    for u, v in g.edges():
        a, b = degs[u], degs[v]
        pairs[(a, b) if a <= b else (b, a)] += 1
    return randic_from_degree_pairs(pairs)


def randic_from_degree_pairs(pairs) -> Interval:
    """Sum of count / sqrt(a * b) over {(a, b): count}."""
    total = Interval.exact(0)
    for (a, b), count in sorted(pairs.items()):
        total = total + count / isqrt_interval(a * b)
    return total


def avg_neighbor_degree(g: Graph, v: int) -> Fraction:
    d = g.degree(v)
    if d == 0:
        raise GraphInputError(f"vertex {v} is isolated; m(v) undefined")
    degs = g.degrees()
    return Fraction(sum(degs[u] for u in g.neighbors(v)), d)


def t_value(g: Graph, v: int) -> Fraction:
    """d(v) + m(v), exactly."""
    return g.degree(v) + avg_neighbor_degree(g, v)


def max_pendant_neighbors(n: int, m: int, delta_max: int) -> int:
    """Largest possible number of degree-one vertices given (n, m, Δ).

    Fix a vertex of degree Δ.  The m - Δ edges avoiding it lie among the
    other n - 1 vertices.  A leaf next to the hub uses none of them, and
    each of the r = n - 1 - Δ vertices outside the hub's neighborhood can
    be a leaf using one of them; every other such edge joins two of the
    n - 1 - s non-leaves.  So s leaves force
        m - Δ - min(s, r) <= C(n - 1 - s, 2).
    For Δ = n - 1 this is the count behind "at most C(5, 2) = 10 edges".
    """
    if n < 3:
        raise GraphInputError(f"need n >= 3, got {n}")
    if not n - 1 <= m <= comb(n, 2):
        raise GraphInputError(f"m={m} infeasible for a connected graph on {n} vertices")
    if not 2 <= delta_max <= n - 1 or 2 * m > n * delta_max:
        raise GraphInputError(f"max degree {delta_max} infeasible for n={n}, m={m}")
    r = n - 1 - delta_max
    for s in range(n - 1, -1, -1):
        if m - delta_max - min(s, r) <= comb(n - 1 - s, 2):
            return s
    raise GraphInputError(f"no graph with n={n}, m={m}, max degree {delta_max}")


@dataclass(frozen=True)
class InvariantReport:
    n: int
    m: int
    delta_min: int
    delta_max: int
    randic: Interval
    q: SpectralResult
    lambda1: SpectralResult
    ratio_q_over_R: Interval
    bound_values: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "delta_min": self.delta_min,
            "delta_max": self.delta_max,
            "randic": self.randic.to_dict(),
            "q": {"value": self.q.lambda_max, "lo": self.q.lo, "hi": self.q.hi,
                  "residual": self.q.residual},
            "lambda1": {"value": self.lambda1.lambda_max, "lo": self.lambda1.lo,
                        "hi": self.lambda1.hi, "residual": self.lambda1.residual},
            "ratio_q_over_R": self.ratio_q_over_R.to_dict(),
            "bounds": {k: {"side": b.side, **b.value.to_dict()} for k, b in self.bound_values.items()},
        }

    def render(self) -> str:
        lines = [
            f"n = {self.n}   m = {self.m}   min degree = {self.delta_min}   max degree = {self.delta_max}",
            f"R(G)        = {self.randic.mid:.12f}   [{self.randic.lo!r}, {self.randic.hi!r}]",
            f"q(G)        = {self.q.lambda_max:.12f}   [{self.q.lo!r}, {self.q.hi!r}]",
            f"lambda1(G)  = {self.lambda1.lambda_max:.12f}   [{self.lambda1.lo!r}, {self.lambda1.hi!r}]",
            f"q/R         = {self.ratio_q_over_R.mid:.12f}   [{self.ratio_q_over_R.lo!r}, {self.ratio_q_over_R.hi!r}]",
            "bounds:",
        ]
        for name, b in self.bound_values.items():
            lines.append(f"  {name:<10} {b.side:<17} {b.value.mid:.12f}")
        return "\n".join(lines)


def full_report(g: Graph, tol: float = DEFAULT_TOL) -> InvariantReport:
    from .bounds import graph_bounds

    if g.n < 2 or not is_connected(g):
        raise GraphInputError("full_report needs a connected graph with at least 2 vertices")
    prof = g.degree_profile()
    r = randic_index(g)
    q = q_radius(g, tol)
    lam = lambda1(g, tol)
    return InvariantReport(
        n=g.n,
        m=g.m,
        delta_min=prof.delta_min,
        delta_max=prof.delta_max,
        randic=r,
        q=q,
        lambda1=lam,
        ratio_q_over_R=q.bracket / r,
        bound_values=graph_bounds(g, r),
    )
