"""Command-line interface.

Exit codes: 0 success or positive verdict, 1 negative verdict, 2 usage or
parse error, 3 computation budget exceeded, 4 wall-clock timeout.
"""
from __future__ import annotations

import argparse
import json
import os
import signal
import sys
from contextlib import contextmanager

from . import digraph as dg
from .connectivity import lambda_max, lambda_pair, min_dicut
from .constructions import complete, directed_cycle, odd_wheel, random_member
from .dicolouring import colouring_to_text, dichromatic_number, find_dicolouring, is_dicritical
from .errors import BudgetExceeded, DigraphError
from .hypergraph import (
    dicycle_hypergraph,
    hyper_chromatic_number,
    hyper_lambda,
    pairwise_intersection_check,
)
from .hypergraph import to_text as hyper_to_text
from .recognition import ORACLE_LIMIT, is_k_extremal_oracle, recognize_extremal
from .repro import CLAIMS, run_claim

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BUDGET, EXIT_TIMEOUT = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class Timeout(Exception):
    pass


@contextmanager
def time_limit(seconds: float | None):
    if not seconds:
        yield
        return

    def _raise(signum, frame):
        raise Timeout()

    old = signal.signal(signal.SIGALRM, _raise)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


# -- input handling ------------------------------------------------------------


def parse_family(spec: str):
    """Build ``(digraph, certificate or None)`` from ``complete:K``, ``wheel:L``,
    ``dicycle:N`` or ``random:k,joins,seed``."""
    family, sep, rest = spec.partition(":")
    if not sep:
        raise UsageError(f"bad family spec {spec!r}")
    try:
        nums = [int(x) for x in rest.split(",")]
    except ValueError:
        raise UsageError(f"bad family parameters in {spec!r}") from None
    try:
        if family == "complete" and len(nums) == 1:
            return complete(nums[0]), None
        if family == "wheel" and len(nums) == 1:
            return odd_wheel(nums[0]), None
        if family == "dicycle" and len(nums) == 1:
            return directed_cycle(nums[0]), None
        if family == "random" and len(nums) in (3, 4):
            k, joins, seed = nums[:3]
            cap = nums[3] if len(nums) == 4 else None
            return random_member(k, joins, seed, cap)
    except DigraphError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError(f"unknown family spec {spec!r}")


def _digraph_from_json(text: str) -> dg.Digraph:
    try:
        data = json.loads(text)
        return dg.Digraph(int(data["n"]), [tuple(a) for a in data["arcs"]])
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise dg.ParseError(f"bad JSON digraph: {exc}") from None


def load_digraph(source: str) -> dg.Digraph:
    """Read a digraph from a path, ``-`` for stdin, or an inline family spec."""
    if source == "-":
        text = sys.stdin.read()
    elif os.path.exists(source):
        with open(source) as fh:
            text = fh.read()
    elif ":" in source:
        return parse_family(source)[0]
    else:
        raise UsageError(f"no such file: {source}")
    if text.lstrip().startswith("{"):
        return _digraph_from_json(text)
    return dg.from_text(text)


def digraph_json(d: dg.Digraph) -> dict:
    return {"n": d.n, "arcs": [list(a) for a in d.arcs]}


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text.rstrip("\n"))


def _write(path: str, content: str) -> None:
    with open(path, "w") as fh:
        fh.write(content)


# -- verbs ---------------------------------------------------------------------


def cmd_gen(args) -> int:
    d, cert = parse_family(args.spec)
    text = dg.to_text(d)
    cert_path = args.cert
    if cert_path is None and args.out and cert is not None:
        cert_path = args.out + ".cert.json"
    if args.out:
        _write(args.out, text)
    if cert_path and cert is not None:
        _write(cert_path, cert.to_json(indent=1) + "\n")
    payload = {"spec": args.spec, "n": d.n, "m": d.m, "out": args.out, "cert": cert_path}
    if not args.out:
        payload["digraph"] = digraph_json(d)
    if cert is not None and not cert_path:
        payload["certificate"] = cert.to_dict()
    if args.out:
        human = f"wrote {args.out} (n={d.n}, m={d.m})"
        if cert_path and cert is not None:
            human += f" and {cert_path}"
    else:
        human = text
    _emit(args, payload, human)
    return EXIT_OK


def cmd_check(args) -> int:
    if args.k is not None and args.k < 0:
        raise UsageError("--k must be nonnegative")
    d = load_digraph(args.input)
    if d.n > ORACLE_LIMIT:
        raise BudgetExceeded(f"exact checks are limited to {ORACLE_LIMIT} vertices (got {d.n})")
    lam = lambda_max(d) if d.n >= 2 else 0
    k = lam if args.k is None else args.k
    chi = dichromatic_number(d)
    report = {
        "n": d.n,
        "m": d.m,
        "strong": dg.is_strong(d),
        "biconnected": dg.is_biconnected(d),
        "eulerian": dg.is_eulerian(d),
        "lambda": lam,
        "chi": chi,
        "dicritical": chi == k + 1 and is_dicritical(d, k + 1),
        "k": k,
    }
    report["extremal"] = is_k_extremal_oracle(d, k)
    lines = [f"{key}: {report[key]}" for key in
             ("n", "m", "strong", "biconnected", "eulerian", "lambda", "chi", "dicritical")]
    lines.append(f"verdict: {'EXTREMAL' if report['extremal'] else 'NOT-EXTREMAL'} (k={k})")
    _emit(args, report, "\n".join(lines))
    return EXIT_OK if report["extremal"] else EXIT_NEGATIVE


def cmd_recognize(args) -> int:
    if args.k < 3:
        raise UsageError("recognition needs --k >= 3")
    d = load_digraph(args.input)
    cert = recognize_extremal(d, args.k)
    if cert is None:
        _emit(args, {"extremal": False, "k": args.k}, "NOT-EXTREMAL")
        return EXIT_NEGATIVE
    if args.cert:
        _write(args.cert, cert.to_json(indent=1) + "\n")
    _emit(args, {"extremal": True, "k": args.k, "certificate": cert.to_dict()},
          cert.to_json(indent=1))
    return EXIT_OK


def cmd_lambda(args) -> int:
    if (args.source is None) != (args.target is None):
        raise UsageError("give both --source and --target, or neither")
    d = load_digraph(args.input)
    if args.source is None:
        value = lambda_max(d)
        _emit(args, {"lambda": value}, f"lambda: {value}")
        return EXIT_OK
    u, v = args.source, args.target
    for x in (u, v):
        if not 0 <= x < d.n:
            raise UsageError(f"vertex {x} outside 0..{d.n - 1}")
    if u == v:
        raise UsageError("source and target must differ")
    value = lambda_pair(d, u, v)
    cut = min_dicut(d, u, v)
    payload = {"lambda": value, "source_side": sorted(cut.source_side),
               "cut": [list(a) for a in cut.crossing_arcs]}
    _emit(args, payload, f"lambda({u},{v}): {value}\ncut: {sorted(cut.crossing_arcs)}")
    return EXIT_OK


def cmd_chroma(args) -> int:
    if args.k is not None and args.k < 1:
        raise UsageError("--k must be positive")
    d = load_digraph(args.input)
    if args.k is None:
        chi = dichromatic_number(d)
        phi = find_dicolouring(d, chi) if d.n else None
        payload = {"chi": chi, "colouring": phi.as_tuple() if phi else []}
        _emit(args, payload, f"chi: {chi}\n" + (colouring_to_text(phi) if phi else ""))
        return EXIT_OK
    phi = find_dicolouring(d, args.k)
    if phi is None:
        _emit(args, {"k": args.k, "colourable": False}, f"not {args.k}-dicolourable")
        return EXIT_NEGATIVE
    _emit(args, {"k": args.k, "colourable": True, "colouring": phi.as_tuple()},
          colouring_to_text(phi))
    return EXIT_OK


def cmd_hyper(args) -> int:
    d = load_digraph(args.input)
    h = dicycle_hypergraph(d)
    payload = {
        "n": h.n,
        "hyperedges": [sorted(e) for e in h.hyperedges],
        "chromatic_number": hyper_chromatic_number(h),
        "pairwise_intersection_ok": pairwise_intersection_check(h),
    }
    lines = [hyper_to_text(h).rstrip("\n"),
             f"chromatic number: {payload['chromatic_number']}",
             f"dicycles share at most one vertex: {payload['pairwise_intersection_ok']}"]
    if args.pairs:
        diffs = [
            [x, y, lambda_pair(d, x, y), hyper_lambda(h, x, y)]
            for x in range(d.n) for y in range(d.n) if x != y
        ]
        payload["lambda_pairs"] = diffs
        lines += [f"{x}->{y}: lambda={a} hyper={b}" for x, y, a, b in diffs]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_convert(args) -> int:
    d = load_digraph(args.input)
    if args.to == "dot":
        out = dg.to_dot(d)
    elif args.to == "json":
        out = json.dumps(digraph_json(d)) + "\n"
    else:
        out = dg.to_text(d)
    if args.out:
        _write(args.out, out)
    else:
        sys.stdout.write(out)
    return EXIT_OK


def cmd_repro(args) -> int:
    claims = list(CLAIMS) if args.claim == "all" else [args.claim]
    if args.claim != "all" and args.claim not in CLAIMS:
        raise UsageError(f"unknown claim {args.claim!r}; choose from {', '.join(CLAIMS)}")
    results = [run_claim(c) for c in claims]
    lines = []
    for r in results:
        lines.append(f"{r.claim}: {'PASS' if r.passed else 'FAIL'} ({r.description})")
        for c in r.checks:
            lines.append(f"  {c.name}: expected {c.expected}, computed {c.computed}")
    _emit(args, {"results": [r.to_dict() for r in results]}, "\n".join(lines))
    return EXIT_OK if all(r.passed for r in results) else EXIT_NEGATIVE


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--timeout", type=float, default=None, help="wall-clock limit in seconds")

    p = argparse.ArgumentParser(prog="kextremal", description="k-extremal digraph toolkit")
    sub = p.add_subparsers(dest="verb", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate a digraph")
    g.add_argument("spec", help="complete:K | wheel:L | dicycle:N | random:k,joins,seed[,maxn]")
    g.add_argument("--out")
    g.add_argument("--cert")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", parents=[common], help="exact property report")
    c.add_argument("input")
    c.add_argument("--k", type=int)
    c.set_defaults(func=cmd_check)

    r = sub.add_parser("recognize", parents=[common], help="structural recognition")
    r.add_argument("input")
    r.add_argument("--k", type=int, required=True)
    r.add_argument("--cert", help="also write the certificate here")
    r.set_defaults(func=cmd_recognize)

    lam = sub.add_parser("lambda", parents=[common], help="local arc-connectivity")
    lam.add_argument("input")
    lam.add_argument("--source", type=int)
    lam.add_argument("--target", type=int)
    lam.set_defaults(func=cmd_lambda)

    ch = sub.add_parser("chroma", parents=[common], help="dichromatic number or a k-dicolouring")
    ch.add_argument("input")
    ch.add_argument("--k", type=int)
    ch.set_defaults(func=cmd_chroma)

    h = sub.add_parser("hyper", parents=[common], help="hypergraph of induced dicycles")
    h.add_argument("input")
    h.add_argument("--pairs", action="store_true", help="compare lambda with hyper lambda")
    h.set_defaults(func=cmd_hyper)

    cv = sub.add_parser("convert", parents=[common], help="change file format")
    cv.add_argument("input")
    cv.add_argument("--to", choices=("text", "dot", "json"), default="text")
    cv.add_argument("--out")
    cv.set_defaults(func=cmd_convert)

    rp = sub.add_parser("repro", parents=[common], help="recompute a registered reference instance")
    rp.add_argument("claim", help=f"one of {', '.join(CLAIMS)} or all")
    rp.set_defaults(func=cmd_repro)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        with time_limit(args.timeout):
            return args.func(args)
    except Timeout:
        print("TIMEOUT", file=sys.stdout)
        return EXIT_TIMEOUT
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, DigraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
