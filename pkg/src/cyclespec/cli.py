"""``cyclespec`` command line: one subcommand per operation, JSON on stdout.

Exit codes: 0 success, 1 domain error (a JSON ``{"error": ...}`` object is
printed), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .census import (CensusRecord, bounds_report, census_exhaustive, census_stream,
                     faudree)
from .config import LimitExceeded, Limits, RunConfig, default_jobs
from .containers import (ContainerFamily, InfeasibleError, classify, cover_check,
                         encoding_spectrum, family_prime, phi_encode, psi_encode,
                         psi_soundness_check, weight_sum)
from .cycles import pair_cycle, pair_kind, spectrum
from .fingerprint import CollisionError, fingerprint
from .graphs import (Chord, GraphError, classify_pair, parse_ham_many, read_graph6,
                     read_ham)

DOMAIN_ERRORS = (GraphError, ValueError, LimitExceeded, InfeasibleError, CollisionError,
                 OSError, KeyError, AssertionError)


def _pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(s) for s in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'a,b', got {text!r}") from None
    return a, b


def _int_list(text: str) -> list[int]:
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _limits(text: str) -> Limits:
    try:
        return Limits.parse(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _chords(cs) -> list[list[int]]:
    return [[c.a, c.b] for c in cs]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--K", type=int, default=1, help="independence threshold constant")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=None,
                        help="worker processes (default: $CYCLESPEC_JOBS or 1)")
    common.add_argument("--limits", type=_limits, default=Limits(),
                        help="overrides such as max_n_general=18,max_chords=30")

    parser = argparse.ArgumentParser(prog="cyclespec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="exact cycle set of a graph")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="labelled Hamiltonian graph file")
    src.add_argument("--graph6", help="graph6 file, one graph per line")

    p = sub.add_parser("pair-cycle", parents=[common], help="the cycle C(e, f) of two chords")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--e", type=_pair, required=True)
    p.add_argument("--f", type=_pair, required=True)

    p = sub.add_parser("fingerprint", parents=[common], help="fingerprint greedy on all chords")
    p.add_argument("--input", required=True)

    p = sub.add_parser("encode", parents=[common], help="classify and encode a graph")
    p.add_argument("--input", required=True)
    p.add_argument("--p", type=int, required=True)

    p = sub.add_parser("family-prime", parents=[common], help="materialise a small container family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)

    p = sub.add_parser("cover-check", parents=[common], help="check graphs against a family")
    p.add_argument("--family", required=True, help="JSON family file")
    p.add_argument("--graphs", required=True, help="graphs in the ham format, blank-line separated")

    p = sub.add_parser("census", parents=[common], help="distinct cycle sets over many graphs")
    p.add_argument("--n", type=int)
    p.add_argument("--graph6", help="canonical graph list; omit for exhaustive labelled mode")
    p.add_argument("--checkpoint", help="directory for per-shard checkpoints (stream mode)")

    p = sub.add_parser("faudree", parents=[common], help="Faudree lower-bound graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--A", type=_int_list, required=True)

    p = sub.add_parser("report", parents=[common], help="bounds report for a census file")
    p.add_argument("--census", required=True)

    sub.add_parser("selftest", parents=[common], help="run the embedded oracle checks")
    return parser


def _run(args, cfg: RunConfig):
    lim = cfg.limits
    cmd = args.command
    if cmd == "spectrum":
        if args.input:
            g = read_ham(args.input)
            return {"n": g.n, "cycle_set": spectrum(g, lim).sorted()}
        return {"graphs": [{"n": g.n, "cycle_set": spectrum(g, lim).sorted()}
                           for g in read_graph6(args.graph6)]}
    if cmd == "pair-cycle":
        for pair in (args.e, args.f):
            kind = classify_pair(args.n, *pair)
            if kind != "chord":
                raise GraphError(f"{pair} is not a chord for n={args.n} ({kind})")
        e, f = Chord(*sorted(args.e)), Chord(*sorted(args.f))
        c = pair_cycle(args.n, e, f)
        return {"n": args.n, "e": [e.a, e.b], "f": [f.a, f.b], "kind": pair_kind(e, f),
                "cycle": list(c.vertices), "length": len(c)}
    if cmd == "fingerprint":
        g = read_ham(args.input)
        return {"n": g.n, "R": _chords(g.chords), **fingerprint(g.n, g.chords, lim).to_dict()}
    if cmd == "encode":
        return _encode(read_ham(args.input), args.p, cfg)
    if cmd == "family-prime":
        fam = family_prime(args.n, args.p, lim)
        w = weight_sum(fam)
        return {"n": args.n, "p": args.p, "size": len(fam.members),
                "weight_sum": f"{w.numerator}/{w.denominator}", **fam.to_dict()}
    if cmd == "cover-check":
        with open(args.family) as fh:
            fam = ContainerFamily.from_dict(json.load(fh))
        with open(args.graphs) as fh:
            graphs = parse_ham_many(fh.read())
        ok, failures = cover_check(fam, graphs, lim)
        return {"ok": ok, "graphs": len(graphs), "failures": failures}
    if cmd == "census":
        if args.graph6:
            rec = census_stream(args.graph6, args.n, cfg.jobs, args.checkpoint)
        else:
            if args.n is None:
                raise ValueError("exhaustive census needs --n")
            rec = census_exhaustive(args.n, cfg.jobs, lim)
        if args.format == "csv":
            return rec.to_csv()
        return {**rec.to_dict(), "bounds": bounds_report(rec)}
    if cmd == "faudree":
        g = faudree(args.n, args.A)
        s = spectrum(g, lim)
        return {"n": args.n, "A": sorted(set(args.A)), "cycle_set": s.sorted(),
                "upper_half": s.restrict(args.n // 2 + 1, args.n).sorted()}
    if cmd == "report":
        with open(args.census) as fh:
            rec = CensusRecord.from_dict(json.load(fh))
        return bounds_report(rec)
    if cmd == "selftest":
        from .selftest import run_selftest

        return run_selftest()
    raise AssertionError(cmd)


def _encode(g, p: int, cfg: RunConfig) -> dict:
    cls = classify(g, p, cfg.K)
    out = {"n": g.n, "p": p, "K": cfg.K, "class": cls.kind, "threshold": cls.threshold,
           "independent": _chords(cls.independent)}
    if cls.kind == "H1":
        a = psi_encode(g, cls.independent, p)
        out["encoding"] = a.to_dict()
        out["encoding_spectrum"] = encoding_spectrum(a, g.n).sorted()
        out["sound"] = psi_soundness_check(g, cls.independent, a, cfg.limits)
        return out
    try:
        out["phi"] = phi_encode(g, p, cfg.K, cfg.limits).to_dict()
    except (InfeasibleError, CollisionError) as exc:
        out["phi"] = {"infeasible": str(exc)}
    return out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format == "csv" and args.command != "census":
        parser.error("--format csv is only available for census")
    try:
        cfg = RunConfig(K=args.K, limits=args.limits, seed=args.seed,
                        jobs=args.jobs if args.jobs is not None else default_jobs())
    except ValueError as exc:
        parser.error(str(exc))
    try:
        result = _run(args, cfg)
    except DOMAIN_ERRORS as exc:
        print(json.dumps({"error": {"type": type(exc).__name__, "message": str(exc)}}))
        return 1
    if isinstance(result, str):
        sys.stdout.write(result)
    else:
        print(json.dumps(result))
    if args.command == "selftest" and not result["passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
