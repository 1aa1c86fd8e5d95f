"""Classical eigenvalue and Randić bounds as interval-valued functions.

Bounds that depend only on (n, m) take integers so parameter grids can be
swept without building graphs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphInputError
from .interval import Interval, isqrt_interval
from .invariants import t_value

SIDES = {
    "hong": "upper_on_lambda1",
    "feng_yu": "upper_on_q",
    "merris": "upper_on_q",
    "be_lower": "lower_on_R",
    "dfr_lower": "lower_on_R",
    "fms_lower": "lower_on_lambda1",
}


@dataclass(frozen=True)
class BoundValue:
    name: str
    value: Interval

    @property
    def side(self) -> str:
        return SIDES[self.name]


def hong_bound(n: int, m: int) -> Interval:
    """sqrt(2m - n + 1), an upper bound on lambda1 when min degree >= 1."""
    rad = 2 * m - n + 1
    if rad < 0:
        raise GraphInputError(f"2m - n + 1 = {rad} < 0 for n={n}, m={m}")
    return isqrt_interval(rad)


def feng_yu_bound(n: int, m: int) -> Interval:
    if n < 2:
        raise GraphInputError(f"need n >= 2, got {n}")
    return Interval.exact(2 * m) / (n - 1) + (n - 2)


def merris_bound(g: Graph) -> Interval:
    """max over v of d(v) + m(v); the maximum itself is exact."""
    return Interval.exact(max(t_value(g, v) for v in range(g.n)))


def be_lower(n: int) -> Interval:
    if n < 2:
        raise GraphInputError(f"need n >= 2, got {n}")
    return isqrt_interval(n - 1)


def dfr_lower(n: int) -> Interval:
    """sqrt(2(n-1)) + 1/(n-1) - sqrt(2/(n-1)), valid when min degree >= 2."""
    if n < 3:
        raise GraphInputError(f"need n >= 3, got {n}")
    k = n - 1
    return isqrt_interval(2 * k) + Interval.exact(1) / k - (Interval.exact(2) / k).sqrt()


def fms_lower_lambda1(m: int, randic: Interval) -> Interval:
    if randic.lo <= 0:
        raise GraphInputError(f"Randić index enclosure {randic} is not positive")
    return Interval.exact(m) / randic


def graph_bounds(g: Graph, randic: Interval) -> dict[str, BoundValue]:
    """Every bound that applies to g (dfr_lower only when min degree >= 2)."""
    degs = g.degrees()
    out = {
        "hong": hong_bound(g.n, g.m),
        "feng_yu": feng_yu_bound(g.n, g.m),
        "merris": merris_bound(g),
        "be_lower": be_lower(g.n),
    }
    if min(degs) >= 2:
        out["dfr_lower"] = dfr_lower(g.n)
    out["fms_lower"] = fms_lower_lambda1(g.m, randic)
    return {k: BoundValue(k, v) for k, v in out.items()}


# deletion inequalities ------------------------------------------------------


def hv_deletion_margin(g: Graph, v: int) -> Interval:
    """R(g) - R(g - v) - sqrt(δ/Δ)/2 for a minimum-degree vertex v.

    Requires g - v to have no isolated vertex, so both indices are defined.
    """
    from .graph import delete_vertex
    from .invariants import randic_index

    degs = g.degrees()
    if degs[v] != min(degs):
        raise GraphInputError(f"vertex {v} does not have minimum degree")
    h = delete_vertex(g, v)
    return randic_index(g) - randic_index(h) - (Interval.exact(min(degs)) / max(degs)).sqrt() / 2


def pendant_deletion_margins(g: Graph):
    """Margins R(G) - sum_i 1/(2 sqrt(Δ(G_i))) - R(G_s), one per maximal sequence.

    A sequence deletes, one at a time, a vertex of degree one in the current
    graph, as long as the result keeps no isolated vertex.  Yields
    (sequence of deleted original labels, margin).
    """
    from .graph import delete_vertex
    from .invariants import randic_index

    r0 = randic_index(g)

    def walk(h: Graph, labels: list[int], seq: list[int], acc: Interval):
        degs = h.degrees()
        moves = [v for v in range(h.n) if degs[v] == 1 and degs[_only_neighbor(h, v)] >= 2]
        if not moves:
            yield tuple(seq), r0 - acc - randic_index(h)
            return
        step = 1 / (2 * isqrt_interval(max(degs)))
        for v in moves:
            yield from walk(delete_vertex(h, v), labels[:v] + labels[v + 1:], seq + [labels[v]], acc + step)

    yield from walk(g, list(range(g.n)), [], Interval.exact(0))


def _only_neighbor(h: Graph, v: int) -> int:
    return h.rows[v].bit_length() - 1
