"""Command-line front end.

``hkfsig compute a_1 .. a_n b_1 .. b_n`` prints the Hilbert-Kunz multiplicity
and the F-signature; ``hkfsig inequalities ...`` prints the regions instead.
Exit status: 0 success, 1 internal error, 2 usage error, 3 Monte-Carlo
disagreement.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from fractions import Fraction

from .emit import ExportOptions, to_json, to_wolfram
from .errors import HKError, InputError
from .fan import parse_exponents
from .oracle import fsig_box, hk_box, mc_volume
from .regions import fsig_region, hk_region
from .volume import region_volume

LABELS = {"hk": "Hilbert-Kunz Multiplicity", "fsig": "F-Signature"}
EXIT_INTERNAL, EXIT_USAGE, EXIT_ORACLE = 1, 2, 3


def _box_item(text: str) -> tuple[str, Fraction]:
    name, sep, value = text.partition("=")
    try:
        bound = Fraction(value)
    except (ValueError, ZeroDivisionError):
        bound = None
    if not sep or not name or bound is None or bound <= 0:
        raise argparse.ArgumentTypeError(f"expected VAR=BOUND with a positive bound, got {text!r}")
    return name, bound


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hkfsig",
        description="Hilbert-Kunz multiplicity and F-signature of the intersection "
        "algebra of (x^a) and (x^b), as exact fractions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("values", nargs="+", metavar="EXP", help="a_1 .. a_n b_1 .. b_n")
    common.add_argument("--only", choices=("hk", "fsig", "both"), default="both")
    common.add_argument("--box", type=_box_item, action="append", default=[], metavar="VAR=BOUND")

    compute = sub.add_parser("compute", parents=[common], help="compute both invariants")
    compute.add_argument("--mc-check", type=int, metavar="N", default=0,
                         help="cross-check with an N-sample Monte-Carlo estimate")
    compute.add_argument("--seed", type=int, default=0)

    ineq = sub.add_parser("inequalities", parents=[common], help="print the regions")
    ineq.add_argument("--format", choices=("wolfram", "json"), default="wolfram")
    ineq.add_argument("--paper-names", action="store_true",
                      help="name variables x, y, z, w (n <= 2 only)")
    return parser


def _selected(only: str) -> list[str]:
    return ["hk", "fsig"] if only == "both" else [only]


def _regions(data):
    return {"hk": hk_region(data), "fsig": fsig_region(data)}


def _apply_box(box, names, overrides):
    box = list(box)
    for name, bound in overrides:
        if name not in names:
            raise InputError(f"unknown variable {name!r} in --box (variables: {', '.join(names)})")
        box[names.index(name)] = bound
    return tuple(box)


def run_compute(args, out, err) -> int:
    data = parse_exponents(_ints(args.values))
    regions = _regions(data)
    status = 0
    lines = []
    checks = []
    for key in _selected(args.only):
        value = region_volume(regions[key])
        lines.append(f"{LABELS[key]} = {value}")
        if args.mc_check:
            default = hk_box(data) if key == "hk" else fsig_box(data)
            box = _apply_box(default, regions[key].vars, args.box)
            res = mc_volume(regions[key], box, args.mc_check, args.seed)
            ok = res.agrees(value)
            checks.append(
                f"mc-check {key}: estimate={float(res.estimate):.6g} "
                f"stderr={float(res.stderr):.3g} exact={float(value):.6g} "
                f"samples={res.samples} seed={args.seed} {'ok' if ok else 'DISAGREE'}"
            )
            if not ok:
                status = EXIT_ORACLE
    out.write("".join(line + "\n" for line in lines))
    err.write("".join(line + "\n" for line in checks))
    return status


def run_inequalities(args, out, err) -> int:
    data = parse_exponents(_ints(args.values))
    regions = _regions(data)
    names = "short" if args.paper_names else "indexed"
    blocks = []
    for key in _selected(args.only):
        region = regions[key]
        if args.format == "json":
            if args.box:
                box = _apply_box(region.box_hints, region.vars, args.box)
                region = type(region)(region.vars, region.base, region.clauses, box, region.kind)
            blocks.append(to_json(region))
        else:
            opts = ExportOptions("wolfram", names, dict(args.box) or None)
            try:
                blocks.append(to_wolfram(region, opts))
            except ValueError as exc:
                raise InputError(str(exc)) from exc
    out.write("".join(b + "\n" for b in blocks))
    return 0


def _ints(values) -> list[int]:
    try:
        return [int(v) for v in values]
    except ValueError:
        raise InputError(f"exponents must be integers, got {' '.join(values)}") from None


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "compute":
            return run_compute(args, out, err)
        return run_inequalities(args, out, err)
    except InputError as exc:
        err.write(f"hkfsig: error: {exc}\n")
        return EXIT_USAGE
    except HKError as exc:
        err.write(f"hkfsig: internal error: {exc}\n")
        return EXIT_INTERNAL


def entry() -> None:
    sys.exit(main())
