"""Verification runs: enumeration / sampling -> invariants -> bound check.

A run checks q(G)/R(G) against the conjectured bound for its order n:

    (4n - 4)/n      for 4 <= n <= 12   (11/3 at n = 12, attained by K_n)
    n / sqrt(n-1)   for n >= 13        (attained by S_n)

using certified enclosures: a graph is a violation when ratio.hi exceeds
bound.hi + tol.  A graph whose ratio interval comes within tol of the bound
is an equality witness only if it is K_n or S_n and its closed-form ratio
equals the bound exactly; otherwise it is listed as a near miss.

Sample runs split each n into fixed-size chunks with seeds derived from
(seed, n, chunk index), so results do not depend on the worker count.
"""

from __future__ import annotations

import hashlib
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from . import certifier as C
from .enumeration import (
    CONNECTED_COUNTS,
    MAX_EXHAUSTIVE_N,
    SamplerConfig,
    canonical_code,
    enumerate_connected,
    sample_connected,
    write_graph6,
)
from .graph import Graph, GraphInputError, is_connected, make_family
from .interval import Interval, isqrt_interval
from .invariants import full_report, randic_index
from .spectral import batch_radii

SCHEMA_VERSION = 1
DEFAULT_TOL = 1e-8
SAMPLE_CHUNK = 4096
TOP_K = 10
MODES = ("exhaustive", "sample", "single", "stream")


def bound_branch(n: int) -> tuple[str, Interval]:
    """(branch label, enclosure of the conjectured bound) for order n."""
    if n < 4:
        raise GraphInputError(f"the ratio bound is stated for n >= 4, got n={n}")
    if n <= 12:
        return "(4n-4)/n", Interval.exact(Fraction(4 * n - 4, n))
    return "n/sqrt(n-1)", n / isqrt_interval(n - 1)


def default_m_range(n: int) -> tuple[int, int]:
    return n - 1, min(comb(n, 2), n + 30)


@dataclass(frozen=True)
class VerifyRunConfig:
    mode: str
    n: int | tuple[int, int] | None = None
    samples: int = 0
    seed: int = 0
    m_range: tuple[int, int] | None = None
    graphs: tuple[Graph, ...] = ()
    complete: bool = False
    tolerance: float = DEFAULT_TOL
    output_path: str | None = None
    threads: int | None = None

    def orders(self) -> list[int]:
        if self.n is None:
            return sorted({g.n for g in self.graphs})
        if isinstance(self.n, int):
            return [self.n]
        return list(range(self.n[0], self.n[1] + 1))

    def validate(self) -> None:
        if self.mode not in MODES:
            raise GraphInputError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.tolerance < 0:
            raise GraphInputError("tolerance must be nonnegative")
        if self.mode in ("single", "stream"):
            if not self.graphs:
                raise GraphInputError(f"{self.mode} mode needs at least one graph")
            for g in self.graphs:
                bound_branch(g.n)
                if not is_connected(g):
                    raise GraphInputError(f"graph {write_graph6(g).decode()} is disconnected")
            if self.complete and len({g.n for g in self.graphs}) != 1:
                raise GraphInputError("a complete stream must have a single order n")
            return
        ns = self.orders()
        if not ns:
            raise GraphInputError("empty n range")
        for n in ns:
            bound_branch(n)
        if self.mode == "exhaustive" and max(ns) > MAX_EXHAUSTIVE_N:
            raise GraphInputError(f"exhaustive mode requires n <= {MAX_EXHAUSTIVE_N}; use --samples")
        if self.mode == "sample":
            if self.samples <= 0:
                raise GraphInputError("sample mode needs a positive sample count")
            for n in ns:
                self.sampler_config(n, 0, 1).validate()

    def edge_range(self, n: int) -> tuple[int, int]:
        if self.m_range is None:
            return default_m_range(n)
        return self.m_range

    def sampler_config(self, n: int, chunk: int, count: int) -> SamplerConfig:
        return SamplerConfig(n=n, m=self.edge_range(n), seed=chunk_seed(self.seed, n, chunk), count=count)


def chunk_seed(seed: int, n: int, chunk: int) -> int:
    digest = hashlib.sha256(f"rqv:{seed}:{n}:{chunk}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


@dataclass
class GraphRecord:
    graph6: str
    n: int
    m: int
    ratio: Interval

    def to_dict(self) -> dict:
        return {"graph6": self.graph6, "n": self.n, "m": self.m, "ratio": self.ratio.to_dict()}


@dataclass
class VerifyRunResult:
    mode: str
    orders: list[int]
    graphs_checked: int = 0
    per_n: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    equality_witnesses: list = field(default_factory=list)
    near_misses: list = field(default_factory=list)
    top: list = field(default_factory=list)
    stream_errors: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations and not self.stream_errors

    @property
    def max_ratio_graph(self) -> GraphRecord | None:
        return self.top[0] if self.top else None

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "verify",
            "mode": self.mode,
            "orders": self.orders,
            "graphs_checked": self.graphs_checked,
            "per_n": {str(k): v for k, v in sorted(self.per_n.items())},
            "passed": self.passed,
            "violations": [r.to_dict() for r in self.violations],
            "equality_witnesses": self.equality_witnesses,
            "near_misses": [r.to_dict() for r in self.near_misses],
            "max_ratio_graph": self.max_ratio_graph.to_dict() if self.top else None,
            "top": [r.to_dict() for r in self.top],
            "stream_errors": self.stream_errors,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


# ---------------------------------------------------------------------------
# per-batch evaluation


def _closed_form_equality(g: Graph) -> bool:
    """True when g is K_n or S_n and its exact ratio equals the branch bound."""
    n, degs = g.n, sorted(g.degrees())
    if degs == [n - 1] * n:
        return n <= 12          # q = 2n-2, R = n/2, ratio (4n-4)/n
    if degs == [1] * (n - 1) + [n - 1]:
        return n >= 13          # q = n, R = sqrt(n-1), ratio n/sqrt(n-1)
    return False


@dataclass
class _Partial:
    checked: int = 0
    per_n: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    witnesses: set = field(default_factory=set)
    near: list = field(default_factory=list)
    top: list = field(default_factory=list)

    def merge(self, other: "_Partial") -> None:
        self.checked += other.checked
        for k, v in other.per_n.items():
            self.per_n[k] = self.per_n.get(k, 0) + v
        self.violations += other.violations
        self.witnesses |= other.witnesses
        self.near += other.near
        self.top = _top(self.top + other.top)


def _rank(r: GraphRecord):
    return (-r.ratio.lo, r.n, r.graph6)


def _top(records: list[GraphRecord]) -> list[GraphRecord]:
    return sorted(records, key=_rank)[:TOP_K]


def check_batch(graphs: list[Graph], tol: float = DEFAULT_TOL, top_k: int = TOP_K) -> _Partial:
    out = _Partial()
    if not graphs:
        return out
    qs = batch_radii(graphs, "q")
    records = []
    for g, q in zip(graphs, qs):
        _, bound = bound_branch(g.n)
        ratio = q.bracket / randic_index(g)
        out.checked += 1
        out.per_n[g.n] = out.per_n.get(g.n, 0) + 1
        near = ratio.hi >= bound.lo - tol
        if ratio.hi > bound.hi + tol:
            out.violations.append(_record(g, ratio))
        elif near:
            if _closed_form_equality(g):
                out.witnesses.add(write_graph6(g).decode())
            else:
                out.near.append(_record(g, ratio))
        records.append((ratio.lo, g, ratio))
    records.sort(key=lambda t: -t[0])
    # encode only the candidates that can reach the top list
    cut = records[min(top_k, len(records)) - 1][0]
    out.top = _top([_record(g, r) for lo, g, r in records if lo >= cut])
    return out


def _record(g: Graph, ratio: Interval) -> GraphRecord:
    return GraphRecord(write_graph6(g).decode(), g.n, g.m, ratio)


def _sample_chunk(args) -> _Partial:
    cfg, tol = args
    return check_batch(list(sample_connected(cfg)), tol)


def worker_count(explicit: int | None = None) -> int:
    if explicit is not None:
        return max(1, explicit)
    env = os.environ.get("RQV_THREADS")
    cap = os.cpu_count() or 1
    if env:
        try:
            return max(1, min(int(env), cap))
        except ValueError:
            raise GraphInputError(f"RQV_THREADS must be an integer, got {env!r}") from None
    return cap


def verify_conjecture(cfg: VerifyRunConfig) -> VerifyRunResult:
    cfg.validate()
    acc = _Partial()
    result = VerifyRunResult(cfg.mode, cfg.orders())
    tol = cfg.tolerance

    if cfg.mode == "exhaustive":
        for n in cfg.orders():
            batch: list[Graph] = []
            for g in enumerate_connected(n):
                batch.append(g)
                if len(batch) == SAMPLE_CHUNK:
                    acc.merge(check_batch(batch, tol))
                    batch = []
            acc.merge(check_batch(batch, tol))
    elif cfg.mode == "sample":
        jobs = []
        for n in cfg.orders():
            for chunk, start in enumerate(range(0, cfg.samples, SAMPLE_CHUNK)):
                count = min(SAMPLE_CHUNK, cfg.samples - start)
                jobs.append((cfg.sampler_config(n, chunk, count), tol))
        workers = worker_count(cfg.threads)
        if workers == 1:
            parts = map(_sample_chunk, jobs)
            for p in parts:
                acc.merge(p)
        else:
            with ProcessPoolExecutor(workers) as ex:
                for p in ex.map(_sample_chunk, jobs):
                    acc.merge(p)
    else:
        acc.merge(check_batch(list(cfg.graphs), tol))
        if cfg.complete:
            result.stream_errors = _complete_stream_errors(cfg.graphs, acc.witnesses)

    result.graphs_checked = acc.checked
    result.per_n = acc.per_n
    result.violations = sorted(acc.violations, key=_rank)
    result.equality_witnesses = sorted(acc.witnesses, key=lambda s: (len(s), s))
    result.near_misses = sorted(acc.near, key=_rank)
    result.top = acc.top
    if cfg.output_path:
        with open(cfg.output_path, "w") as fh:
            fh.write(result.to_json() + "\n")
    return result


def _complete_stream_errors(graphs, witnesses: set) -> list[str]:
    """Consistency checks for a stream claiming to list every connected graph of order n."""
    n = graphs[0].n
    errors = []
    seen: dict[int, int] = {}
    for i, g in enumerate(graphs, 1):
        code = canonical_code(g.rows)
        if code in seen:
            errors.append(f"graph {i} is isomorphic to graph {seen[code]}")
        else:
            seen[code] = i
    expected = CONNECTED_COUNTS.get(n)
    if expected is not None and len(seen) != expected:
        errors.append(f"stream has {len(seen)} isomorphism classes, expected {expected} for n={n}")
    extremal = make_family("complete" if n <= 12 else "star", n)
    want = write_graph6(extremal).decode()
    if want not in witnesses:
        errors.append(f"expected equality witness {want} is missing")
    return errors


# ---------------------------------------------------------------------------
# other entry points


def report_invariants(g: Graph):
    return full_report(g)


def find_extremal(n: int) -> VerifyRunResult:
    """Exhaustive run at n; max_ratio_graph maximizes ratio.lo, top holds the best 10."""
    if n > MAX_EXHAUSTIVE_N:
        raise GraphInputError(f"find_extremal enumerates exhaustively; n={n} exceeds {MAX_EXHAUSTIVE_N}")
    return verify_conjecture(VerifyRunConfig(mode="exhaustive", n=n))


HL_GROUP = ("h_identity", "l_identity", "h_monotone", "l_concave_endpoints")


def certify_all(n_max_overrides: dict | None = None, f_offset: float = 0.0,
                only: list[str] | None = None) -> list[C.LemmaCheck]:
    """The full certificate suite in fixed order.

    ``n_max_overrides`` maps lemma ids (or "h_l" for the h / l group) to an
    upper grid end.  ``f_offset`` perturbs f in the reduce_f / lemma_1314
    checks (test hook for negative controls).
    """
    over = dict(n_max_overrides or {})
    unknown = set(over) - set(C.LEMMA_IDS) - {"h_l"}
    if unknown:
        raise GraphInputError(f"unknown lemma ids in overrides: {sorted(unknown)}")
    if only is not None:
        bad = set(only) - set(C.LEMMA_IDS)
        if bad:
            raise GraphInputError(f"unknown lemma ids: {sorted(bad)}")

    def nmax(lemma: str, default: int) -> int:
        return over.get(lemma, over.get("h_l", default) if lemma in HL_GROUP else default)

    def hl_range(lemma: str):
        return range(18, nmax(lemma, 40) + 1)

    def min2():
        check = C.certify_min2(range(12, nmax("min2", 100) + 1))
        wide = C.certify_min2(range(9, nmax("min2", 100) + 1))
        check.notes = {
            "hypothesis_threshold": "n >= 12",
            "wider_grid": wide.grid,
            "wider_grid_status": wide.status,
            "wider_grid_worst_margin": wide.worst_margin.to_dict(),
            "wider_grid_witness": wide.witness,
        }
        return check

    runners = {
        "reduce_f": lambda: C.certify_f_grid(C.REDUCE_F_GRID, "reduce_f", f_offset),
        "lemma_1314": lambda: C.certify_f_grid(C.LEMMA_1314_GRID, "lemma_1314", f_offset),
        "h_identity": lambda: C.certify_h_identity(hl_range("h_identity")),
        "l_identity": lambda: C.certify_l_identity(hl_range("l_identity")),
        "h_monotone": lambda: C.certify_h_l_claims(nmax("h_monotone", 40)),
        "l_concave_endpoints": lambda: C.certify_l_concave_endpoints(nmax("l_concave_endpoints", 40)),
        "dense": lambda: C.certify_dense(range(13, nmax("dense", 100) + 1)),
        "small": lambda: C.certify_small(range(13, nmax("small", 100) + 1)),
        "largedegree_t": lambda: C.certify_largedegree(range(13, nmax("largedegree_t", 100) + 1)),
        "min2": min2,
        "lebasic_identity": lambda: C.certify_lebasic_identity(range(4, nmax("lebasic_identity", 40) + 1)),
        "unicyclic_star": lambda: C.certify_unicyclic_star(range(12, nmax("unicyclic_star", 100) + 1)),
        "base13_k1_randic": C.certify_base13_k1,
        "lb131_n13": lambda: C.certify_lb131(13),
        "lb131_n12": lambda: C.certify_lb131(12),
        "g12_final": C.certify_g12,
    }
    ids = [i for i in C.LEMMA_IDS if only is None or i in only]
    return [runners[i]() for i in ids]


def suite_exit_code(checks: list[C.LemmaCheck]) -> int:
    statuses = {c.status for c in checks}
    if C.FAILED in statuses:
        return 1
    if C.UNDECIDABLE in statuses:
        return 3
    return 0
