"""Command-line front end.

Exit codes: 0 pass / certified, 1 violation or failed certificate, 2 input
error, 3 undecidable at the available precision.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from contextlib import contextmanager

from . import certifier
from .enumeration import Graph6ParseError, iter_graph6
from .graph import FAMILY_MIN_N, GraphInputError, make_family
from .harness import (
    SCHEMA_VERSION,
    VerifyRunConfig,
    certify_all,
    find_extremal,
    report_invariants,
    suite_exit_code,
    verify_conjecture,
)
from .spectral import SpectralInputError

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_UNDECIDABLE = 0, 1, 2, 3


def _int_range(text: str) -> int | tuple[int, int]:
    """'7' -> 7; '4..9' or '4-9' -> (4, 9)."""
    for sep in ("..", "-", ":"):
        if sep in text:
            lo, hi = text.split(sep, 1)
            try:
                a, b = int(lo), int(hi)
            except ValueError:
                break
            if a > b:
                raise argparse.ArgumentTypeError(f"empty range {text!r}")
            return a, b
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or lo..hi, got {text!r}") from None


def _pair(value):
    return value if isinstance(value, tuple) else (value, value)


@contextmanager
def _json_sink(path: str | None):
    if path is None:
        yield None
    elif path == "-":
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _emit(sink, obj: dict) -> None:
    if sink is not None:
        obj = {"schema_version": SCHEMA_VERSION, **obj}
        sink.write(json.dumps(obj, sort_keys=True) + "\n")


def _read_lines(src: str) -> list[bytes]:
    if src == "-":
        return sys.stdin.buffer.read().splitlines()
    with open(src, "rb") as fh:
        return fh.read().splitlines()


def _say(sink, text: str) -> None:
    # keep stdout machine-readable when JSON goes there
    print(text, file=sys.stderr if sink is sys.stdout else sys.stdout)


# ---------------------------------------------------------------------------


def cmd_verify(args) -> int:
    graphs = ()
    if args.graph6 is not None:
        graphs = tuple(g for _, g in iter_graph6(_read_lines(args.graph6)))
        mode = "single" if len(graphs) == 1 and not args.complete else "stream"
    elif args.exhaustive:
        mode = "exhaustive"
    elif args.samples is not None:
        mode = "sample"
    else:
        mode = "exhaustive"
    if args.complete and args.graph6 is None:
        raise GraphInputError("--complete applies to --graph6 streams")
    if mode in ("exhaustive", "sample") and args.n is None:
        raise GraphInputError("--n is required unless --graph6 is given")
    cfg = VerifyRunConfig(
        mode=mode,
        n=args.n if mode in ("exhaustive", "sample") else None,
        samples=args.samples or 0,
        seed=args.seed,
        m_range=_pair(args.m) if args.m is not None else None,
        graphs=graphs,
        complete=args.complete,
        tolerance=args.tol,
    )
    t0 = time.perf_counter()
    res = verify_conjecture(cfg)
    elapsed = time.perf_counter() - t0
    with _json_sink(args.json) as sink:
        _emit(sink, res.to_dict())
        _say(sink, f"mode={res.mode} orders={res.orders} graphs_checked={res.graphs_checked} "
                   f"time={elapsed:.1f}s")
        for n, count in sorted(res.per_n.items()):
            _say(sink, f"  n={n}: {count} graphs")
        _say(sink, f"violations: {len(res.violations)}")
        for r in res.violations:
            _say(sink, f"  VIOLATION {r.graph6} ratio=[{r.ratio.lo!r}, {r.ratio.hi!r}]")
        _say(sink, f"equality witnesses: {' '.join(res.equality_witnesses) or '-'}")
        if res.near_misses:
            _say(sink, f"near misses (within tolerance, not K_n/S_n): {len(res.near_misses)}")
        for err in res.stream_errors:
            _say(sink, f"  STREAM ERROR {err}")
        best = res.max_ratio_graph
        if best is not None:
            _say(sink, f"max ratio: {best.graph6} n={best.n} m={best.m} ratio~{best.ratio.mid:.12f}")
        _say(sink, "PASS" if res.passed else "FAIL")
    return EXIT_OK if res.passed else EXIT_FAIL


def cmd_invariants(args) -> int:
    if args.family is not None:
        name, n_text = args.family
        if name not in FAMILY_MIN_N:
            raise GraphInputError(f"unknown family {name!r}; choose from {sorted(FAMILY_MIN_N)}")
        try:
            n = int(n_text)
        except ValueError:
            raise GraphInputError(f"family order must be an integer, got {n_text!r}") from None
        items = [(None, make_family(name, n))]
    else:
        items = list(iter_graph6(_read_lines(args.graph6)))
        if not items:
            raise GraphInputError("no graphs in input")
    with _json_sink(args.json) as sink:
        for lineno, g in items:
            try:
                rep = report_invariants(g)
            except GraphInputError as exc:
                where = f"line {lineno}: " if lineno is not None else ""
                raise GraphInputError(f"{where}{exc}") from None
            _emit(sink, {"kind": "invariants", "line": lineno, **rep.to_dict()})
            if lineno is not None and len(items) > 1:
                _say(sink, f"# line {lineno}")
            _say(sink, rep.render())
    return EXIT_OK


def cmd_certify(args) -> int:
    overrides = {}
    if args.n_max is not None:
        key = args.lemma if args.lemma is not None else "h_l"
        overrides[key] = args.n_max
    only = [args.lemma] if args.lemma is not None else None
    checks = certify_all(overrides, f_offset=args.perturb_f, only=only)
    with _json_sink(args.json) as sink:
        for c in checks:
            _emit(sink, {"kind": "certificate", **c.to_dict()})
            m = c.worst_margin
            _say(sink, f"{c.lemma_id:<20} {c.status:<12} points={c.evaluated_points:<6} "
                       f"worst=[{m.lo:.6g}, {m.hi:.6g}] at {json.dumps(c.witness, sort_keys=True)} "
                       f"({c.wall_time_ms:.0f} ms)")
            for k, v in c.notes.items():
                _say(sink, f"    {k}: {json.dumps(v, sort_keys=True)}")
    return suite_exit_code(checks)


def cmd_extremal(args) -> int:
    res = find_extremal(args.n)
    with _json_sink(args.json) as sink:
        _emit(sink, {**res.to_dict(), "kind": "extremal"})
        _say(sink, f"n={args.n}: {res.graphs_checked} connected graphs")
        for i, r in enumerate(res.top, 1):
            _say(sink, f"{i:>3}. {r.graph6:<12} m={r.m:<3} q/R in [{r.ratio.lo!r}, {r.ratio.hi!r}]")
    return EXIT_OK if res.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rqv", description="Verify and certify the q(G)/R(G) ratio bound.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check the ratio bound on enumerated, sampled or given graphs")
    v.add_argument("--n", type=_int_range, help="order or range lo..hi")
    mode = v.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="all connected graphs (n <= 10)")
    mode.add_argument("--samples", type=int, help="seeded connected samples per order")
    mode.add_argument("--graph6", metavar="FILE", help="graph6 file, or - for stdin")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--m", type=_int_range, help="edge count or range for sampling")
    v.add_argument("--complete", action="store_true",
                   help="treat the graph6 input as the full list of connected graphs of its order")
    v.add_argument("--tol", type=float, default=1e-8)
    v.add_argument("--json", metavar="PATH", help="write a JSON report (- for stdout)")
    v.set_defaults(func=cmd_verify)

    i = sub.add_parser("invariants", help="full invariant report for graphs")
    src = i.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6", metavar="FILE")
    src.add_argument("--family", nargs=2, metavar=("NAME", "N"))
    i.add_argument("--json", metavar="PATH")
    i.set_defaults(func=cmd_invariants)

    c = sub.add_parser("certify", help="run the certificate suite")
    c.add_argument("--lemma", choices=certifier.LEMMA_IDS)
    c.add_argument("--n-max", type=int)
    c.add_argument("--json", metavar="PATH")
    c.add_argument("--perturb-f", type=float, default=0.0, help=argparse.SUPPRESS)
    c.set_defaults(func=cmd_certify)

    e = sub.add_parser("extremal", help="graphs maximizing q/R at order n")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--json", metavar="PATH")
    e.set_defaults(func=cmd_extremal)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphInputError, Graph6ParseError, SpectralInputError) as exc:
        print(f"rqv: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"rqv: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
