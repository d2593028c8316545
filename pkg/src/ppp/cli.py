"""``ppp`` command-line front end.

Exit codes: 0 success, 2 usage or input errors, 3 internal invariant
violations (including failed self-checks).
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from . import core, dyck, periodicity, plane, series, skeleton
from .selfcheck import Suite, fixture_table

EXIT_USAGE = 2
EXIT_INTERNAL = 3


class InvariantViolation(RuntimeError):
    pass


def _emit_json(obj) -> None:
    json.dump(obj, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")


def _emit_csv(header: Sequence[str], rows) -> None:
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)


def _output_mode(args) -> str:
    return "json" if getattr(args, "json", False) else "csv" if getattr(args, "csv", False) else "text"


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_enumerate(args) -> int:
    ppps = list(core.enumerate_ppps(args.sp, args.max_thickness, jobs=args.jobs))
    mode = _output_mode(args)
    if mode == "json":
        _emit_json([p.to_dict() for p in ppps])
    elif mode == "csv":
        _emit_csv(["upper", "lower", "g", "width", "height", "area", "thickness"],
                  [(p.upper, p.lower, p.g, p.width, p.height, p.area, core.thickness(p))
                   for p in ppps])
    else:
        for p in ppps:
            print(f"{p.upper} {p.lower} g={p.g} area={p.area} thickness={core.thickness(p)}")
            if args.ascii:
                print(core.render_ascii(p))
                print()
        print(f"{len(ppps)} PPPs")
    return 0


def cmd_count(args) -> int:
    n = args.sp
    if args.primitive:
        what, value = "primitive", sum(1 for _ in periodicity.enumerate_primitive(n))
    elif args.marked_primitive:
        what, value = "marked-primitive", periodicity.marked_primitive_count(n)
    elif args.strips:
        what, value = "strips", periodicity.strip_census(n)
    elif args.thin:
        what, value = "thin", periodicity.thin_count(n)
    else:
        k = args.thickness
        what = f"thickness-{k}"
        value = sum(1 for p in core.enumerate_ppps(n, k, jobs=args.jobs)
                    if core.thickness(p) == k)
    mode = _output_mode(args)
    if mode == "json":
        _emit_json({"sp": n, "kind": what, "count": value})
    elif mode == "csv":
        _emit_csv(["n", "kind", "count"], [(n, what, value)])
    else:
        print(value)
    return 0


def cmd_period(args) -> int:
    try:
        s = periodicity.area_series(args.sp, args.kind, args.cap, jobs=args.jobs)
        rep = periodicity.detect_period(s)
    except periodicity.CapTooSmall as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    mode = _output_mode(args)
    if mode == "json":
        _emit_json({"coeffs": list(s.coeffs), "preperiod": rep.preperiod,
                    "period": rep.period, "lcmBound": rep.lcm_bound})
    elif mode == "csv":
        _emit_csv(["area", "count"], enumerate(s.coeffs))
    else:
        print(f"sp={s.n} kind={s.kind} cap={s.cap}")
        print(f"preperiod {rep.preperiod}, period {rep.period} (divides {rep.lcm_bound})")
        print("coefficients:", " ".join(map(str, s.coeffs)))
    return 0


SERIES = {"A": series.tree_gf, "pPPP": series.primitive_gf, "B": series.strip_gf,
          "T": series.tuple_gf}


def cmd_series(args) -> int:
    s = SERIES[args.name](args.order)
    coeffs = s.integers()
    mode = _output_mode(args)
    if mode == "json":
        _emit_json({"name": args.name, "order": args.order, "coeffs": coeffs})
    elif mode == "csv":
        _emit_csv(["n", "coeff"], enumerate(coeffs))
    else:
        print(" ".join(map(str, coeffs)))
    return 0


def cmd_asymptotics(args) -> int:
    rows = series.asymptotic_table(args.max_n)
    mode = _output_mode(args)
    if mode == "json":
        _emit_json([{"n": r.n, "b_n": str(r.b_n), "ratio": r.ratio} for r in rows])
    elif mode == "csv":
        _emit_csv(["n", "b_n", "ratio"], [(r.n, r.b_n, repr(r.ratio)) for r in rows])
    else:
        for r in rows:
            print(f"{r.n:4d}  ratio={r.ratio:.6f}  root={r.root:.6f}")
    return 0


def _parse_triple(text: str) -> plane.DepthTriple:
    """``WORD:S:I`` with a parenthesis word, a preorder index and a slot."""
    try:
        word, s, i = text.split(":")
        return plane.DepthTriple(plane.from_word(word), int(s), int(i))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad triple {text!r}: {exc}") from None


def cmd_dyck(args) -> int:
    mode = _output_mode(args)
    if args.trace is not None:
        tr = args.trace
        m = dyck.phi_cap_forward(tr)
        if mode == "json":
            _emit_json({"steps": dyck.phi_cap_trace(tr), "map": m.to_dict()})
        else:
            for line in dyck.phi_cap_trace(tr):
                print(line)
            print(json.dumps(m.to_dict()))
        return 0
    if args.n is None:
        print("error: --n is required unless --trace is given", file=sys.stderr)
        return EXIT_USAGE
    if args.check:
        rep = dyck.check(args.n)
        if not (rep["surjective"] and rep["inverse_after_forward"]
                and rep["forward_after_inverse"] and rep["A"] == rep["B"]):
            raise InvariantViolation(f"bijection check failed: {rep}")
        if mode == "json":
            _emit_json(rep)
        else:
            for k, v in rep.items():
                print(f"{k}: {v}")
        return 0
    pairs = list(dyck.iter_pairs(args.n))
    if mode == "json":
        _emit_json([{"triple": {"tree": plane.to_word(t.tree), "s": t.s, "i": t.i},
                     "map": m.to_dict()} for t, m in pairs])
    else:
        for t, m in pairs:
            print(f"{plane.to_word(t.tree)}:{t.s}:{t.i} -> {json.dumps(m.to_dict())}")
    return 0


def _read_ppp(args) -> core.Ppp:
    return core.validate_ppp(args.upper, args.lower, args.g)


def cmd_show(args) -> int:
    p = _read_ppp(args)
    im = skeleton.psi_forward(p)
    info = {
        "ppp": p.to_dict(),
        "stats": core.stats(p)._asdict(),
        "thickness": core.thickness(p),
        "trunk_width": im.trunk_width,
        "primitive": periodicity.is_primitive(p),
        "thin": periodicity.is_thin(p),
        "path_words": list(core.path_words(p)),
        "psi": im.to_dict(),
    }
    if _output_mode(args) == "json":
        _emit_json(info)
    else:
        print(core.render_ascii(p))
        for k, v in info.items():
            if k != "ppp":
                print(f"{k}: {v}")
    return 0


def cmd_selfcheck(args) -> int:
    try:
        suite = Suite(args.max_n, seed=args.seed, jobs=args.jobs, corrupt=args.corrupt)
    except KeyError:
        print(f"error: no fixture named {args.corrupt!r}", file=sys.stderr)
        return EXIT_USAGE
    results = suite.run()
    if _output_mode(args) == "json":
        _emit_json([r.__dict__ for r in results])
    else:
        width = max(len(r.name) for r in results)
        for r in results:
            status = ("PASS" if r.ok else "FAIL") + ("" if r.counted else " (info)")
            print(f"{r.name:<{width}}  {status:<11} {r.detail}")
        for name, fx in suite.fixtures.items():
            print(f"fixture {name} [{fx.provenance}] {fx.note}")
    failed = [r for r in results if r.counted and not r.ok]
    if failed:
        print(f"first failing check: {failed[0].name}", file=sys.stderr)
        return EXIT_INTERNAL
    return 0


def cmd_fixtures(args) -> int:
    table = fixture_table(args.max_n)
    _emit_json({name: {"provenance": fx.provenance, "note": fx.note,
                       "values": {str(n): v for n, v in fx.values.items()}}
                for name, fx in table.items()})
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _sp(text: str) -> int:
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError("semi-perimeter must be at least 2")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ppp", description=(
        "Periodic parallelogram polyominoes: enumeration, bijections and series."))
    common = argparse.ArgumentParser(add_help=False)
    out = common.add_mutually_exclusive_group()
    out.add_argument("--json", action="store_true", help="machine-readable JSON")
    out.add_argument("--csv", action="store_true", help="CSV table")
    common.add_argument("--jobs", type=_positive, default=1, help="worker processes")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list PPPs")
    p.add_argument("--sp", type=_sp, required=True)
    p.add_argument("--max-thickness", type=_positive, default=1)
    p.add_argument("--ascii", action="store_true", help="draw each PPP")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", parents=[common], help="count PPPs of a kind")
    p.add_argument("--sp", type=_sp, required=True)
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--thickness", type=_positive, default=1)
    kind.add_argument("--primitive", action="store_true")
    kind.add_argument("--marked-primitive", action="store_true")
    kind.add_argument("--strips", action="store_true")
    kind.add_argument("--thin", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("period", parents=[common], help="area series and its period")
    p.add_argument("--sp", type=_sp, required=True)
    p.add_argument("--kind", choices=periodicity.KINDS, default="ppp")
    p.add_argument("--cap", type=_positive, default=None)
    p.set_defaults(func=cmd_period)

    p = sub.add_parser("series", parents=[common], help="coefficients of a named series")
    p.add_argument("--name", choices=sorted(SERIES), required=True)
    p.add_argument("--order", type=_sp, required=True)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("asymptotics", parents=[common], help="b_n 2n / 4^n table")
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_asymptotics)

    p = sub.add_parser("dyck-bijection", parents=[common],
                       help="the triples <-> unicyclic maps bijection")
    p.add_argument("--n", "--sp", dest="n", type=_sp, default=None)
    p.add_argument("--check", action="store_true", help="verify bijectivity at size n")
    p.add_argument("--trace", type=_parse_triple, default=None, metavar="WORD:S:I",
                   help="explain the construction for one triple")
    p.set_defaults(func=cmd_dyck)

    p = sub.add_parser("show", parents=[common], help="describe one PPP")
    p.add_argument("--upper", required=True, help="upper path word over N/E")
    p.add_argument("--lower", required=True, help="lower path word over N/E")
    p.add_argument("--g", type=int, required=True, help="gluing size")
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("selfcheck", parents=[common], help="run the check suite")
    p.add_argument("--max-n", type=_sp, default=4)
    p.add_argument("--corrupt", default=None, help="perturb a fixture (fault injection)")
    p.set_defaults(func=cmd_selfcheck)

    p = sub.add_parser("fixtures", parents=[common], help="print the fixture table")
    p.add_argument("--max-n", type=_sp, default=9)
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "asymptotics" and args.max_n < 10:
        print("error: --max-n must be at least 10", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (core.PppError, skeleton.MalformedMarking, skeleton.EmptyTupleList) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AssertionError, InvariantViolation, periodicity.NotPeriodicWithinCap,
            series.NonIntegerCoefficient) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
