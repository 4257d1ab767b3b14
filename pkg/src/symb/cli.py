"""``symb`` command line interface.

Exit codes: 0 success, 2 invalid usage or input, 3 numerical failure
(loop guard hit, no sign change in a crossover bracket).
"""
from __future__ import annotations

import argparse
import sys

from . import capacities, lagrangian, packing, sweep
from .domain import Ellipsoid, Polydisc, TargetFamily, Family
from .errors import NonTermination, NoSignChange, SymbError

EXIT_USAGE = 2
EXIT_NUMERIC = 3


def _floats(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _num(x: float) -> str:
    return f"{x:.12g}"


def _parse_shape(text: str):
    kind, _, rest = text.partition(":")
    vals = _floats(rest)
    if kind.upper() == "E":
        return Ellipsoid(tuple(vals))
    if kind.upper() == "P":
        return Polydisc(tuple(vals))
    raise argparse.ArgumentTypeError(f"shape must look like E:1,2 or P:1,2, got {text!r}")


def cmd_bounds(args, out) -> int:
    rows = sweep.sweep(args.problem, args.a_from, args.a_to, args.step,
                       acc=args.acc, n=args.n, threads=args.threads)
    out.write(sweep.to_csv(rows) if args.format == "csv" else sweep.to_json(rows))
    return 0


def cmd_capacities(args, out) -> int:
    if args.ellipsoid is not None:
        e = Ellipsoid(tuple(args.ellipsoid))
        vals = capacities.spectrum_prefix(e, args.count).values
    else:
        p = Polydisc(tuple(args.polydisc))
        vals = tuple(capacities.eh_capacity(p, k) for k in range(1, args.count + 1))
    out.write(",".join(_num(v) for v in vals) + "\n")
    return 0


def rigidity_verdict(source, family: Family, cap: float) -> str:
    target = TargetFamily(family, source.n)
    if (family is Family.BALL and isinstance(source, Ellipsoid)
            and capacities.rigidity_excludes(source, cap)):
        return "EXCLUDED (rigidity: a_n <= 2 a_1)"
    lb = capacities.best_lower_bound(source, target)
    if lb.value > cap:
        how = "Ekeland-Hofer" if lb.method.value == "EkelandHofer" else "volume"
        return f"EXCLUDED ({how}: needs {_num(lb.value)})"
    if _linearly_inside(source, family, cap):
        return "LINEARLY-EMBEDS"
    return "NOT-EXCLUDED"


def _linearly_inside(source, family: Family, cap: float) -> bool:
    if isinstance(source, Ellipsoid):
        if family is Family.BALL:
            return capacities.linear_embeds(source, Ellipsoid.ball(cap, source.n))
        return source.radii[-1] <= cap
    if family is Family.BALL:
        return sum(source.areas) <= cap
    return source.areas[-1] <= cap


def cmd_rigidity(args, out) -> int:
    kind, _, val = args.target.partition(":")
    fam = {"B": Family.BALL, "C": Family.CUBE}.get(kind.upper())
    if fam is None:
        raise argparse.ArgumentTypeError("target must be B:A or C:A")
    out.write(rigidity_verdict(args.source, fam, float(val)) + "\n")
    return 0


def cmd_lagrangian(args, out) -> int:
    ks, a = args.ks, args.a
    if args.mode == "i-e":
        value = lagrangian.ball_bound_m(ks, _single(a)).value
    elif args.mode == "i-p":
        value = lagrangian.cube_bound_m(ks, _single(a)).value
    elif args.mode == "ii-e":
        value = lagrangian.ball_bound_n(ks, a).value
    else:
        sides = lagrangian.polydisc_bound_n(ks, a)
        out.write(f"A = {','.join(_num(s) for s in sides)} (max {_num(max(sides))})\n")
        return 0
    out.write(f"A = {_num(value)}\n")
    return 0


def _single(a: list[float]) -> float:
    if len(a) != 1:
        raise SymbError(f"this mode takes a single --a value, got {len(a)}")
    return a[0]


def cmd_crossover(args, out) -> int:
    root = sweep.crossover(args.left, args.right, args.lo, args.hi, args.tol)
    out.write(f"{root:.9f}\n")
    return 0


def cmd_packing(args, out) -> int:
    if args.what == "ruled":
        value = packing.ruled_surface_packing(args.genus, args.a, args.b, args.twisted)
    elif args.what == "jiang":
        value = packing.jiang_lower_bound(args.a)
    else:
        value = packing.asymptotic_ratio(args.problem, args.a, args.acc)
    out.write(f"{value:.9f}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symb", description=(
        "Lower and upper bounds for symplectic embeddings of ellipsoids and "
        "polydiscs into balls and cubes (all values in units of pi)."))
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bounds", help="sweep a parameter range")
    b.add_argument("--problem", required=True, choices=sweep.PROBLEMS)
    b.add_argument("--a-from", type=float, required=True)
    b.add_argument("--a-to", type=float, required=True)
    b.add_argument("--step", type=float, required=True)
    b.add_argument("--acc", type=float, default=1e-9)
    b.add_argument("--n", type=int, default=3, help="half-dimension for PC2n")
    b.add_argument("--format", choices=("csv", "json"), default="csv")
    b.add_argument("--threads", type=int, default=None)
    b.set_defaults(func=cmd_bounds)

    c = sub.add_parser("capacities", help="Ekeland-Hofer capacities")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--ellipsoid", type=_floats)
    g.add_argument("--polydisc", type=_floats)
    c.add_argument("--count", type=int, required=True)
    c.set_defaults(func=cmd_capacities)

    r = sub.add_parser("rigidity", help="can the source embed into the target?")
    r.add_argument("--source", type=_parse_shape, required=True)
    r.add_argument("--target", required=True)
    r.set_defaults(func=cmd_rigidity)

    lg = sub.add_parser("lagrangian", help="Lagrangian folding bounds")
    lg.add_argument("mode", choices=("i-e", "i-p", "ii-e", "ii-p"))
    lg.add_argument("--ks", type=_ints, required=True)
    lg.add_argument("--a", type=_floats, required=True)
    lg.set_defaults(func=cmd_lagrangian)

    x = sub.add_parser("crossover", help="where two bound curves cross")
    x.add_argument("--left", required=True)
    x.add_argument("--right", required=True)
    x.add_argument("--lo", type=float, required=True)
    x.add_argument("--hi", type=float, required=True)
    x.add_argument("--tol", type=float, default=1e-6)
    x.set_defaults(func=cmd_crossover)

    p = sub.add_parser("packing", help="packing numbers")
    p.add_argument("what", choices=("ruled", "jiang", "ratio"))
    p.add_argument("--genus", type=int, default=0)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float)
    p.add_argument("--twisted", action="store_true")
    p.add_argument("--problem", choices=packing.PROBLEMS)
    p.add_argument("--acc", type=float, default=1e-9)
    p.set_defaults(func=cmd_packing)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "packing":
        if args.what == "ruled" and args.b is None:
            parser.error("packing ruled needs --b")
        if args.what == "ratio" and args.problem is None:
            parser.error("packing ratio needs --problem")
    if args.command == "capacities" and args.count < 1:
        parser.error("--count must be >= 1")
    try:
        return args.func(args, out)
    except (NonTermination, NoSignChange) as exc:
        print(f"symb: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (SymbError, ValueError, argparse.ArgumentTypeError) as exc:
        print(f"symb: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
