"""Machine-checked certificates for the numeric steps of the q/R proof.

Each check walks a finite parameter grid in lexicographic order.  At every
point a *margin* is evaluated that must be positive (strict claims),
nonnegative (non-strict claims) or zero (identities):

* polynomial / rational claims at integer arguments are evaluated exactly
  with Python ints and Fractions;
* claims with square roots are evaluated in outward-rounded interval
  arithmetic; a point the double-precision enclosure cannot decide is
  re-evaluated once at 106-bit precision before being reported undecidable.

The worst margin is the one with the smallest lower end (satisfied identities
rank last); ties keep the first point in grid order, so reports are
deterministic.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterable

from .graph import Graph, GraphInputError, make_family
from .interval import FLOAT, ExtendedBackend, Interval
from .invariants import max_pendant_neighbors, randic_index

SCHEMA_VERSION = 1

CERTIFIED = "certified"
FAILED = "failed"
UNDECIDABLE = "undecidable"

STRICT, NONSTRICT, ZERO = "strict", "nonstrict", "zero"

LEMMA_IDS = (
    "reduce_f", "lemma_1314", "h_identity", "l_identity", "h_monotone",
    "l_concave_endpoints", "dense", "small", "largedegree_t", "min2",
    "lebasic_identity", "unicyclic_star", "base13_k1_randic", "lb131_n13",
    "lb131_n12", "g12_final",
)

_EXTENDED = None


def _extended() -> ExtendedBackend:
    global _EXTENDED
    if _EXTENDED is None:
        _EXTENDED = ExtendedBackend()
    return _EXTENDED


@dataclass
class LemmaCheck:
    lemma_id: str
    grid: dict
    status: str
    worst_margin: Interval
    witness: dict
    evaluated_points: int
    wall_time_ms: float
    notes: dict = field(default_factory=dict)

    @property
    def certified(self) -> bool:
        return self.status == CERTIFIED

    def to_dict(self) -> dict:
        out = {
            "schema_version": SCHEMA_VERSION,
            "lemma_id": self.lemma_id,
            "grid": self.grid,
            "status": self.status,
            "worst_margin": self.worst_margin.to_dict(),
            "witness": self.witness,
            "evaluated_points": self.evaluated_points,
            "wall_time_ms": round(self.wall_time_ms, 3),
        }
        if self.notes:
            out["notes"] = self.notes
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


# A point is (parameters, margin function of a backend, kind).  Margin
# functions may ignore the backend and return an exact int / Fraction.
Point = tuple[dict, Callable, str]


def _decide(value, kind: str) -> bool | None:
    """True / False when settled, None when an enclosure straddles the threshold."""
    if not isinstance(value, Interval):
        if kind == STRICT:
            return value > 0
        if kind == NONSTRICT:
            return value >= 0
        return value == 0
    if kind == ZERO:
        return value.contains(0.0)
    if value.lo > 0 or (kind == NONSTRICT and value.lo >= 0):
        return True
    if value.hi < 0 or (kind == STRICT and value.hi <= 0):
        return False
    return None


def run_check(lemma_id: str, grid: dict, points: Iterable[Point]) -> LemmaCheck:
    t0 = time.perf_counter()
    count = 0
    failed = undecided = False
    worst: Interval | None = None
    worst_key = math.inf
    witness: dict = {}
    for params, fn, kind in points:
        count += 1
        value = fn(FLOAT)
        ok = _decide(value, kind)
        if ok is None:
            ext = _extended()
            value = ext.to_interval(fn(ext))
            ok = _decide(value, kind)
        margin = value if isinstance(value, Interval) else Interval.exact(value)
        if ok is None:
            undecided = True
        elif not ok:
            failed = True
        if kind == ZERO:
            # a satisfied identity never outranks an inequality margin
            key = math.inf if ok else -max(abs(margin.lo), abs(margin.hi))
        else:
            key = margin.lo
        if worst is None or key < worst_key:
            worst, worst_key, witness = margin, key, dict(params)
    if worst is None:
        raise GraphInputError(f"{lemma_id}: empty grid")
    status = FAILED if failed else UNDECIDABLE if undecided else CERTIFIED
    return LemmaCheck(lemma_id, grid, status, worst, witness, count,
                      (time.perf_counter() - t0) * 1000.0)


# ---------------------------------------------------------------------------
# f(n, m) grids


def _f(n: int, m: int, ar, offset=0):
    rad = 2 * m - (n - 1)
    if rad <= 0 or n < 2:
        raise GraphInputError(f"f undefined for n={n}, m={m}: need 2m - (n-1) > 0")
    root = ar.sqrt(ar.num(n - 1))
    val = ar.num(m) / ar.sqrt(ar.num(rad)) - root - ar.num(2 * m - 2 * (n - 1)) / (ar.num(n) * root)
    if offset:
        val = val + ar.num(offset)
    return val


def f_value(n: int, m: int) -> Interval:
    """m/sqrt(2m-(n-1)) - sqrt(n-1) - (2m-2(n-1))/(n sqrt(n-1))."""
    return _f(n, m, FLOAT)


REDUCE_F_GRID = [(n, (n + 8, comb(n, 2))) for n in (15, 16, 17)]
LEMMA_1314_GRID = [(13, (24, 78)), (14, (23, 91))]


def certify_f_grid(ranges, lemma_id: str = "reduce_f", offset: float = 0.0) -> LemmaCheck:
    """f(n, m) > 0 on every integer point of the given (n, (m_lo, m_hi)) ranges.

    ``offset`` is a test hook added to f (a negative control uses -0.01).
    """
    ranges = [(n, tuple(r)) for n, r in ranges]

    def points():
        for n, (lo, hi) in sorted(ranges):
            for m in range(lo, hi + 1):
                yield {"n": n, "m": m}, (lambda ar, n=n, m=m: _f(n, m, ar, offset)), STRICT

    grid = {"ranges": [[n, list(r)] for n, r in ranges]}
    if offset:
        grid["offset"] = offset
    return run_check(lemma_id, grid, points())


# ---------------------------------------------------------------------------
# h and l = dh/dm: exact integer polynomials


def h_value(n: int, m: int) -> int:
    return m * m * n * n * (n - 1) - (2 * m + n * n - 3 * n + 2) ** 2 * (2 * m - (n - 1))


def l_value(n: int, m: int) -> int:
    c = n * n + 2 * m - 3 * n + 2
    return 2 * m * n * n * (n - 1) - 4 * c * (2 * m - n + 1) - 2 * c * c


def l_prime(n: int, m: int) -> int:
    return 2 * n ** 3 - 18 * n ** 2 - 48 * m + 56 * n - 40


def h_at_n_plus_8(n: int) -> int:
    return 45 * n ** 3 - 657 * n ** 2 + 288 * n - 5508


def l_at_n_plus_8(n: int) -> int:
    return 14 * n ** 3 - 154 * n ** 2 + 68 * n - 1872


def l_at_endpoint_expanded(n: int, ar=FLOAT):
    """l(2 n^{3/2}) through its expansion in powers of sqrt(n)."""
    r = ar.sqrt(ar.num(n))
    return (4 * n ** 4 * r - 2 * n ** 4 - 36 * n ** 3 * r - 80 * n ** 3
            + 112 * n ** 2 * r - 42 * n ** 2 - 80 * n * r + 44 * n - 16)


def l_at_real(n: int, m, ar=FLOAT):
    """l evaluated at a (possibly non-integer) enclosure m."""
    c = ar.num(n * n - 3 * n + 2) + 2 * m
    return 2 * m * (n * n * (n - 1)) - 4 * c * (2 * m - (n - 1)) - 2 * c * c


def _endpoint_floor_ceil(n: int) -> tuple[int, int]:
    """floor and ceil of 2 n^{3/2} = sqrt(4 n^3)."""
    x = 4 * n ** 3
    f = math.isqrt(x)
    return f, f if f * f == x else f + 1


def certify_h_identity(n_values: Iterable[int] = range(18, 41)) -> LemmaCheck:
    ns = list(n_values)

    def points():
        for n in ns:
            yield {"n": n}, (lambda ar, n=n: h_value(n, n + 8) - h_at_n_plus_8(n)), ZERO

    return run_check("h_identity", {"n": _span(ns), "claim": "h(n, n+8) = 45n^3-657n^2+288n-5508"},
                     points())


def certify_l_identity(n_values: Iterable[int] = range(18, 41)) -> LemmaCheck:
    """l(n, n+8) cubic, and first differences match l' at every grid m.

    l is quadratic in m with l'' = -48, so l(m+1) - l(m) = l'(m) - 24.
    """
    ns = list(n_values)

    def points():
        for n in ns:
            yield {"n": n, "claim": "cubic"}, (lambda ar, n=n: l_value(n, n + 8) - l_at_n_plus_8(n)), ZERO
            for m in range(n + 8, _endpoint_floor_ceil(n)[0]):
                yield ({"n": n, "m": m, "claim": "slope"},
                       (lambda ar, n=n, m=m: l_value(n, m + 1) - l_value(n, m) - (l_prime(n, m) - 24)), ZERO)

    return run_check("l_identity", {"n": _span(ns), "claims": ["l(n+8) cubic", "l' slope"]}, points())


def certify_h_l_claims(n_max: int = 40) -> LemmaCheck:
    """For 18 <= n <= n_max: h(n+8) > 0, l(n+8) > 0, l > 0 at both integer
    neighbors of 2n^{3/2} and at the real endpoint, and h strictly increasing
    on the integer points of [n+8, 2n^{3/2}].  Also A = m n sqrt(n-1) > 0.
    """
    if n_max < 18:
        raise GraphInputError(f"n_max must be >= 18, got {n_max}")

    def points():
        for n in range(18, n_max + 1):
            lo = n + 8
            fl, ce = _endpoint_floor_ceil(n)
            yield {"n": n, "claim": "h(n+8)>0"}, (lambda ar, n=n: h_value(n, n + 8)), STRICT
            yield {"n": n, "claim": "l(n+8)>0"}, (lambda ar, n=n: l_value(n, n + 8)), STRICT
            yield {"n": n, "m": fl, "claim": "l(floor)>0"}, (lambda ar, n=n, m=fl: l_value(n, m)), STRICT
            yield {"n": n, "m": ce, "claim": "l(ceil)>0"}, (lambda ar, n=n, m=ce: l_value(n, m)), STRICT
            yield {"n": n, "claim": "l(2n^1.5)>0"}, (lambda ar, n=n: l_at_endpoint_expanded(n, ar)), STRICT
            yield ({"n": n, "claim": "expansion matches direct"},
                   (lambda ar, n=n: l_at_endpoint_expanded(n, ar) - l_at_real(n, 2 * n * ar.sqrt(ar.num(n)), ar)),
                   ZERO)
            yield ({"n": n, "m": lo, "claim": "A>0"},
                   (lambda ar, n=n, m=lo: ar.num(m * n) * ar.sqrt(ar.num(n - 1))), STRICT)
            for m in range(lo, fl):
                yield ({"n": n, "m": m, "claim": "h(m+1)>h(m)"},
                       (lambda ar, n=n, m=m: h_value(n, m + 1) - h_value(n, m)), STRICT)

    return run_check("h_monotone", {"n": [18, n_max], "m": "n+8..floor(2n^1.5)"}, points())


def certify_l_concave_endpoints(n_max: int = 40) -> LemmaCheck:
    if n_max < 18:
        raise GraphInputError(f"n_max must be >= 18, got {n_max}")

    def points():
        for n in range(18, n_max + 1):
            fl, _ = _endpoint_floor_ceil(n)
            yield {"n": n, "claim": "l(n+8)>0"}, (lambda ar, n=n: l_value(n, n + 8)), STRICT
            yield {"n": n, "claim": "l(2n^1.5)>0"}, (lambda ar, n=n: l_at_endpoint_expanded(n, ar)), STRICT
            for m in range(n + 8, fl - 1):
                yield ({"n": n, "m": m, "claim": "second difference = -48"},
                       (lambda ar, n=n, m=m: l_value(n, m + 2) - 2 * l_value(n, m + 1) + l_value(n, m) + 48),
                       ZERO)

    return run_check("l_concave_endpoints", {"n": [18, n_max], "m": "n+8..floor(2n^1.5)"}, points())


# ---------------------------------------------------------------------------
# n = 12 final step


def g12_value(m: int, ar=FLOAT):
    """(2m/11 + 10) sqrt(2m - 11) / m."""
    rad = 2 * m - 11
    if rad <= 0:
        raise GraphInputError(f"g12 undefined at m={m}: need 2m - 11 > 0")
    val = (ar.num(Fraction(2 * m, 11)) + 10) * ar.sqrt(ar.num(rad)) / m
    return ar.to_interval(val) if ar is FLOAT else val


def g12_exact(m: int) -> Fraction | None:
    """Exact g12(m) when 2m - 11 is a perfect square, else None."""
    rad = 2 * m - 11
    if rad <= 0:
        raise GraphInputError(f"g12 undefined at m={m}: need 2m - 11 > 0")
    r = math.isqrt(rad)
    if r * r != rad:
        return None
    return (Fraction(2 * m, 11) + 10) * r / m


def certify_g12(m_range: tuple[int, int] = (21, 65), m_equal: int = 66) -> LemmaCheck:
    target = Fraction(11, 3)

    def points():
        for m in range(m_range[0], m_range[1] + 1):
            yield {"m": m, "claim": "g(m)<11/3"}, (lambda ar, m=m: ar.num(target) - g12_value(m, ar)), STRICT
        exact = g12_exact(m_equal)
        if exact is None:
            yield {"m": m_equal, "claim": "g(m)=11/3"}, (lambda ar: ar.num(target) - g12_value(m_equal, ar)), ZERO
        else:
            yield {"m": m_equal, "claim": "g(m)=11/3"}, (lambda ar: target - exact), ZERO
        yield {"claim": "12/sqrt(11)<11/3"}, (lambda ar: ar.num(target) - 12 / ar.sqrt(ar.num(11))), STRICT

    return run_check("g12_final", {"m": list(m_range), "equality_m": m_equal}, points())


# ---------------------------------------------------------------------------
# leaf-deletion bound (lb131) and the k = 1 configurations


def lb131_lhs(n: int, s: int, ar=FLOAT):
    """sum_{i<s} 1/(2 sqrt(n-1-i)) + DFR bound for the (n-s)-vertex remainder."""
    top = n - 1
    rest = top - s
    if s < 0 or rest < 2:
        raise GraphInputError(f"s={s} leaves fewer than 3 vertices for n={n}")
    total = ar.num(0)
    for i in range(s):
        total = total + 1 / (2 * ar.sqrt(ar.num(top - i)))
    return total + ar.sqrt(ar.num(2 * rest)) + ar.num(Fraction(1, rest)) - ar.sqrt(ar.num(Fraction(2, rest)))


def lb131_rhs(n: int, k: int, ar=FLOAT):
    """sqrt(n-1) + 2(k+1)/(n sqrt(n-1))."""
    root = ar.sqrt(ar.num(n - 1))
    return root + ar.num(2 * (k + 1)) / (n * root)


# (max degree -> k range) cases of the leaf-count lemmas
LB131_CASES = {
    13: {12: range(2, 11), 11: range(5, 11), 10: range(8, 11)},
    12: {11: range(1, 9), 10: range(4, 9), 9: range(7, 9)},
}


def default_lb131_pairs(n: int) -> list[tuple[int, int]]:
    """(k, s_max) with s_max the largest leaf count over the lemma's cases."""
    caps: dict[int, int] = {}
    for delta, ks in LB131_CASES[n].items():
        for k in ks:
            s = max_pendant_neighbors(n, n + k, delta)
            caps[k] = max(caps.get(k, 0), s)
    return sorted(caps.items())


def certify_lb131(n: int, k_s_pairs: Iterable[tuple[int, int]] | None = None) -> LemmaCheck:
    if n not in (12, 13):
        raise GraphInputError(f"lb131 is stated for n in {{12, 13}}, got {n}")
    pairs = sorted(default_lb131_pairs(n) if k_s_pairs is None else k_s_pairs)
    for k, s_max in pairs:
        if s_max >= n - 2:
            raise GraphInputError(f"s_max={s_max} >= n-2 leaves no room for the min-degree-2 remainder")

    def points():
        for k, s_max in pairs:
            for s in range(1, s_max + 1):
                yield ({"k": k, "s": s},
                       (lambda ar, k=k, s=s: lb131_lhs(n, s, ar) - lb131_rhs(n, k, ar)), STRICT)

    return run_check(f"lb131_n{n}", {"n": n, "k_s_max": [list(p) for p in pairs]}, points())


def base13_configuration(name: str) -> Graph:
    """Hub 0 joined to 1..12, plus a P3 or two disjoint edges among the leaves."""
    extra = {"p3": [(1, 2), (2, 3)], "two_edges": [(1, 2), (3, 4)]}[name]
    return Graph(13, [(0, v) for v in range(1, 13)] + extra)


def base13_formula(name: str, ar=FLOAT):
    s = ar.sqrt
    if name == "p3":
        return 9 / s(ar.num(12)) + 2 / s(ar.num(24)) + 1 / s(ar.num(36)) + 2 / s(ar.num(6))
    return 8 / s(ar.num(12)) + 4 / s(ar.num(24)) + 2 / s(ar.num(4))


def certify_base13_k1(n: int = 13) -> LemmaCheck:
    if n != 13:
        raise GraphInputError(f"the k = 1 configurations are stated for n = 13, got {n}")

    def points():
        for name in ("p3", "two_edges"):
            yield ({"configuration": name, "claim": "R > sqrt12 + 4/(13 sqrt12)"},
                   (lambda ar, name=name: base13_formula(name, ar) - lb131_rhs(13, 1, ar)), STRICT)
            yield ({"configuration": name, "claim": "formula = randic_index(graph)"},
                   (lambda ar, name=name: ar.to_interval(base13_formula(name, ar))
                    - randic_index(base13_configuration(name))), ZERO)

    return run_check("base13_k1_randic", {"n": 13, "k": 1, "configurations": ["p3", "two_edges"]},
                     points())


# ---------------------------------------------------------------------------
# remaining inequality families


def min2_margin(n: int, k: int, ar=FLOAT):
    """(2n-4)/sqrt(2n-2) + 1/(n-1) - sqrt(n-1) - 2(k+1)/(n sqrt(n-1))."""
    return (ar.num(2 * n - 4) / ar.sqrt(ar.num(2 * n - 2)) + ar.num(Fraction(1, n - 1))
            - lb131_rhs(n, k, ar))


def certify_min2(n_range: Iterable[int] = range(12, 101), k_range: Iterable[int] = range(1, 11)) -> LemmaCheck:
    ns, ks = list(n_range), list(k_range)
    if min(ns) < 9 or not ks or min(ks) < 1 or max(ks) > 10:
        raise GraphInputError("min2 grid needs n >= 9 and 1 <= k <= 10")

    def points():
        for n in ns:
            for k in ks:
                yield {"n": n, "k": k}, (lambda ar, n=n, k=k: min2_margin(n, k, ar)), STRICT

    return run_check("min2", {"n": _span(ns), "k": _span(ks)}, points())


def _t_bound_margin(n: int, k: int, delta: int, bound: int) -> Fraction:
    """bound - max over d in 1..delta of min(d + delta, d + (n+2k+1)/d).

    Every vertex v of degree d in a connected graph with n vertices, n + k
    edges and max degree delta has t(v) = d + m(v) at most that minimum.
    """
    c = n + 2 * k + 1
    best_num, best_den = 0, 1
    for d in range(1, delta + 1):
        if (d + delta) * d <= d * d + c:
            num, den = d + delta, 1
        else:
            num, den = d * d + c, d
        if num * best_den > best_num * den:
            best_num, best_den = num, den
    return bound - Fraction(best_num, best_den)


LARGEDEGREE_CASES_12 = [((6, 8), range(1, 9)), ((9, 9), range(1, 7)), ((10, 10), range(1, 4))]


def _largedegree_cases(n: int):
    if n == 12:
        return LARGEDEGREE_CASES_12
    return [((-(-n // 2), n - 4), range(1, 11)), ((n - 3, n - 3), range(1, 8)), ((n - 2, n - 2), range(1, 5))]


def certify_largedegree(n_range: Iterable[int] = range(13, 101), include_n12: bool = True) -> LemmaCheck:
    ns = list(n_range)
    if min(ns) < 13:
        raise GraphInputError("largedegree chains are stated for n >= 13")
    all_n = ([12] if include_n12 else []) + ns

    def points():
        for n in all_n:
            if n >= 13:
                chains = [
                    ("(n-4)+(n+21)/(n-4)<n", n - (n - 4) - Fraction(n + 21, n - 4), STRICT),
                    ("(n-3)+(n+15)/(n-3)<n", n - (n - 3) - Fraction(n + 15, n - 3), STRICT),
                    ("(n-2)+(n+9)/(n-2)<=n", n - (n - 2) - Fraction(n + 9, n - 2), NONSTRICT),
                    ("3+(n+9)/3<=n", n - 3 - Fraction(n + 9, 3), NONSTRICT),
                    ("4+(n+21)/4<=n", n - 4 - Fraction(n + 21, 4), NONSTRICT),
                    ("(n/2)^2>n+21", Fraction(n * n, 4) - (n + 21), STRICT),
                ]
                for claim, val, kind in chains:
                    yield {"n": n, "claim": claim}, (lambda ar, val=val: val), kind
            for (d_lo, d_hi), ks in _largedegree_cases(n):
                for k in ks:
                    for delta in range(d_lo, d_hi + 1):
                        yield ({"n": n, "k": k, "delta": delta, "claim": "max t(v) <= n"},
                               (lambda ar, n=n, k=k, delta=delta: _t_bound_margin(n, k, delta, n)), NONSTRICT)

    return run_check("largedegree_t", {"n": _span(ns), "n12_analogue": include_n12}, points())


def certify_dense(n_range: Iterable[int] = range(13, 101)) -> LemmaCheck:
    """(n-1)^2 / n^{3/2} < n / sqrt(n-1)."""
    ns = list(n_range)

    def points():
        for n in ns:
            yield ({"n": n},
                   (lambda ar, n=n: n / ar.sqrt(ar.num(n - 1))
                    - ar.num((n - 1) ** 2) / (n * ar.sqrt(ar.num(n)))), STRICT)

    return run_check("dense", {"n": _span(ns)}, points())


def certify_small(n_range: Iterable[int] = range(13, 101)) -> LemmaCheck:
    """Every integer max degree below n/2 satisfies 2 * max degree < n."""
    ns = list(n_range)

    def points():
        for n in ns:
            for delta in range(1, -(-n // 2)):
                yield {"n": n, "delta": delta}, (lambda ar, n=n, d=delta: n - 2 * d), STRICT

    return run_check("small", {"n": _span(ns)}, points())


def certify_lebasic_identity(n_range: Iterable[int] = range(4, 41)) -> LemmaCheck:
    """(sqrt(n-1) + (2m-2n+2)/(n sqrt(n-1))) * n/sqrt(n-1) = 2m/(n-1) + n - 2.

    After multiplying out, sqrt(n-1) only appears squared, so each side is an
    exact rational.
    """
    ns = list(n_range)

    def points():
        for n in ns:
            for m in range(n, comb(n, 2) + 1):
                lhs = n + Fraction(2 * m - 2 * n + 2, n - 1)
                rhs = Fraction(2 * m, n - 1) + n - 2
                yield {"n": n, "m": m}, (lambda ar, v=lhs - rhs: v), ZERO

    return run_check("lebasic_identity", {"n": _span(ns), "m": "n..C(n,2)"}, points())


def star_plus_edge_randic(n: int, ar=FLOAT):
    """(n-3)/sqrt(n-1) + sqrt(2/(n-1)) + 1/2."""
    return (ar.num(n - 3) / ar.sqrt(ar.num(n - 1)) + ar.sqrt(ar.num(Fraction(2, n - 1)))
            + ar.num(Fraction(1, 2)))


def certify_unicyclic_star(n_range: Iterable[int] = range(12, 101), graph_check_max: int = 30) -> LemmaCheck:
    ns = list(n_range)

    def points():
        for n in ns:
            yield ({"n": n, "claim": "R(S*_n) > sqrt(n-1) + 2/(n sqrt(n-1))"},
                   (lambda ar, n=n: star_plus_edge_randic(n, ar) - lb131_rhs(n, 0, ar)), STRICT)
            if n <= graph_check_max:
                yield ({"n": n, "claim": "formula = randic_index(S*_n)"},
                       (lambda ar, n=n: ar.to_interval(star_plus_edge_randic(n, ar))
                        - randic_index(make_family("star_plus_edge", n))), ZERO)

    return run_check("unicyclic_star", {"n": _span(ns), "graph_check_max": graph_check_max}, points())


def _span(values: list[int]) -> list[int] | list[list[int]]:
    """[lo, hi] for a contiguous range, else the explicit list."""
    if values and values == list(range(values[0], values[-1] + 1)):
        return [values[0], values[-1]]
    return list(values)
