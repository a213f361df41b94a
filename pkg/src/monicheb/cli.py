"""Command-line front end: enumeration, construction, certification, search.

All output is line-oriented key=value (plus canonical "poly ..." lines)
so results can be consumed by scripts.  Exit codes: 0 success/certified,
1 refuted/not-found, 2 inconclusive/limit, 3 usage error.
"""
from __future__ import annotations

import argparse
import os
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from . import certify as certify_mod
from . import constants as constants_mod
from .construct import (
    CongruenceError,
    DegreeSearchError,
    multipoint_monic,
    pair_polynomial,
    triple_polynomial,
)
from .farey import FareyPair, farey_intervals, farey_sequence, is_consecutive_pair
from .lattice import search_witness
from .numpoly import (
    IntPoly,
    Interval,
    format_poly,
    format_rational,
    parse_poly,
    parse_rational,
)

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: A003 - argparse API
        raise _UsageError(f"{message}\n{self.format_usage()}")


@dataclass
class RunReport:
    command: str
    lines: list[str] = field(default_factory=list)
    exit_code: int = EXIT_OK

    def emit(self, line: str) -> None:
        self.lines.append(line)


@dataclass(frozen=True)
class TableEntry:
    pair: FareyPair
    poly: IntPoly


def bundled_table_path() -> Path:
    """Location of the packaged witness-table fixture."""
    return Path(resources.files("monicheb").joinpath("data/farey_table.txt"))


def parse_table_file(path) -> list[TableEntry]:
    """Parse fixture records: an `interval <lo> <hi>` line followed by a
    `poly <c0> ... <cn>` line; `#` comments and blank lines are ignored.
    """
    entries: list[TableEntry] = []
    pending: tuple[int, FareyPair] | None = None
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            try:
                if fields[0] == "interval":
                    if pending is not None:
                        raise ValueError("interval record missing its poly line")
                    if len(fields) != 3:
                        raise ValueError("interval line needs two endpoints")
                    lo = parse_rational(fields[1])
                    hi = parse_rational(fields[2])
                    pending = (lineno, FareyPair.from_endpoints(lo, hi))
                elif fields[0] == "poly":
                    if pending is None:
                        raise ValueError("poly line without a preceding interval")
                    poly = parse_poly(line)
                    if not isinstance(poly, IntPoly):
                        raise ValueError("table polynomials must have integer coefficients")
                    if not poly:
                        raise ValueError("table polynomial must be nonzero")
                    entries.append(TableEntry(pending[1], poly))
                    pending = None
                else:
                    raise ValueError(f"unrecognized record {fields[0]!r}")
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from exc
    if pending is not None:
        raise ValueError(f"{path}:{pending[0]}: interval record missing its poly line")
    return entries


def _prefilter_depth() -> int:
    raw = os.environ.get("MIC_MAX_DEPTH")
    if raw is None:
        return certify_mod.DEFAULT_PREFILTER_DEPTH
    try:
        return int(raw)
    except ValueError as exc:
        raise _UsageError(f"MIC_MAX_DEPTH must be an integer, got {raw!r}") from exc


def _build_parser() -> _Parser:
    parser = _Parser(prog="monicheb")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_farey = sub.add_parser("farey", help="list a Farey sequence or its pairs")
    p_farey.add_argument("--order", type=int, required=True)
    p_farey.add_argument("--pairs", action="store_true")

    p_con = sub.add_parser("construct", help="build monic integer polynomials")
    con_sub = p_con.add_subparsers(dest="mode", required=True)

    p_pair = con_sub.add_parser("pair")
    p_pair.add_argument("lo")
    p_pair.add_argument("hi")
    p_pair.add_argument("--degree", type=int, required=True)
    p_pair.add_argument("--targets", default="1,1", help="A1,A2 (upper,lower numerators)")

    p_triple = con_sub.add_parser("triple")
    p_triple.add_argument("lo")
    p_triple.add_argument("hi")
    p_triple.add_argument("--degree", type=int, required=True)
    p_triple.add_argument("--targets", default="1,1,1", help="A1,A2,A3 (upper,lower,mediant)")
    p_triple.add_argument("--split", type=int, default=1)

    p_multi = con_sub.add_parser("multi")
    p_multi.add_argument("points", help="comma-separated rationals")
    p_multi.add_argument("--max-degree", type=int, required=True)

    p_cert = sub.add_parser("certify", help="decide a sup-norm bound rigorously")
    p_cert.add_argument("--poly", required=True, help="file with a 'poly c0 ... cn' line")
    p_cert.add_argument("--interval", nargs=2, required=True, metavar=("LO", "HI"))
    group = p_cert.add_mutually_exclusive_group(required=True)
    group.add_argument("--bound")
    group.add_argument("--conjecture", action="store_true")

    p_search = sub.add_parser("search", help="LLL witness search on a Farey interval")
    p_search.add_argument("--interval", nargs=2, required=True, metavar=("LO", "HI"))
    p_search.add_argument("--degree", type=int, required=True)
    p_search.add_argument("--delta", default="3/4")
    p_search.add_argument("--radius", type=int, default=1)
    p_search.add_argument("--strategy", choices=("cvp", "full"), default="cvp")

    p_const = sub.add_parser("constant", help="catalog constants")
    cgroup = p_const.add_mutually_exclusive_group(required=True)
    cgroup.add_argument("--interval", nargs=2, metavar=("LO", "HI"))
    cgroup.add_argument("--point")
    cgroup.add_argument("--set", dest="point_set")

    p_table = sub.add_parser("verify-table", help="certify every fixture entry")
    p_table.add_argument("file", nargs="?", default=None)

    # Endpoint values such as -1/2 or -1/sqrt(2) start with a dash; widen
    # the negative-token heuristic so they parse as values, not options.
    anything_negative = re.compile(r"^-.+$")
    for p in (p_cert, p_search, p_const, p_pair, p_triple):
        p._negative_number_matcher = anything_negative

    return parser


def _load_poly(path: str) -> IntPoly:
    with open(path, "r", encoding="utf-8") as handle:
        for raw in handle:
            line = raw.split("#", 1)[0].strip()
            if line:
                poly = parse_poly(line)
                if not isinstance(poly, IntPoly):
                    raise ValueError("expected integer coefficients")
                return poly
    raise ValueError(f"no polynomial found in {path}")


def _cmd_farey(args, report: RunReport) -> None:
    if args.pairs:
        for pair in farey_intervals(args.order):
            report.emit(
                f"pair={format_rational(pair.lo)},{format_rational(pair.hi)}"
            )
    else:
        fractions = farey_sequence(args.order)
        for q in fractions:
            report.emit(f"fraction={format_rational(q)}")
        report.emit(f"count={len(fractions)}")


def _cmd_construct(args, report: RunReport) -> None:
    if args.mode == "pair":
        pair = FareyPair.from_endpoints(parse_rational(args.lo), parse_rational(args.hi))
        targets = [int(t) for t in args.targets.split(",")]
        if len(targets) != 2:
            raise _UsageError("--targets needs exactly two integers A1,A2")
        poly = pair_polynomial(pair, args.degree, targets[0], targets[1])
        report.emit(format_poly(poly))
        report.emit(f"value@{format_rational(pair.hi)}={format_rational(poly(pair.hi))}")
        report.emit(f"value@{format_rational(pair.lo)}={format_rational(poly(pair.lo))}")
    elif args.mode == "triple":
        pair = FareyPair.from_endpoints(parse_rational(args.lo), parse_rational(args.hi))
        targets = [int(t) for t in args.targets.split(",")]
        if len(targets) != 3:
            raise _UsageError("--targets needs exactly three integers A1,A2,A3")
        poly = triple_polynomial(
            pair, args.degree, targets[0], targets[1], targets[2], args.split
        )
        med = Fraction(pair.a1 + pair.a2, pair.b1 + pair.b2)
        report.emit(format_poly(poly))
        for point in (pair.hi, pair.lo, med):
            report.emit(f"value@{format_rational(point)}={format_rational(poly(point))}")
    else:
        points = [parse_rational(tok) for tok in args.points.split(",")]
        degree, poly = multipoint_monic(points, args.max_degree)
        report.emit(f"degree={degree}")
        report.emit(format_poly(poly))
        for p in points:
            report.emit(f"value@{format_rational(p)}={format_rational(poly(p))}")


def _cmd_certify(args, report: RunReport) -> None:
    poly = _load_poly(args.poly)
    lo = parse_rational(args.interval[0])
    hi = parse_rational(args.interval[1])
    depth = _prefilter_depth()
    if args.conjecture:
        if not is_consecutive_pair(lo, hi):
            raise _UsageError(
                f"[{lo}, {hi}] is not a consecutive Farey pair; --conjecture needs one"
            )
        pair = FareyPair.from_endpoints(lo, hi)
        if poly.coeffs[-1] == -1:
            poly = -poly  # sup norm is sign-invariant; witnesses are monic
        record = certify_mod.verify_witness(pair, poly, depth)
        for line in record.render():
            report.emit(line)
        verdict = record.certificate.verdict
    else:
        bound = parse_rational(args.bound)
        cert = certify_mod.certify_sup_bound(poly, Interval(lo, hi), bound, depth)
        for line in cert.render():
            report.emit(line)
        verdict = cert.verdict
    report.exit_code = {
        certify_mod.Verdict.CERTIFIED_AT_MOST: EXIT_OK,
        certify_mod.Verdict.REFUTED: EXIT_REFUTED,
        certify_mod.Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE,
    }[verdict]


def _cmd_search(args, report: RunReport) -> None:
    lo = parse_rational(args.interval[0])
    hi = parse_rational(args.interval[1])
    pair = FareyPair.from_endpoints(lo, hi)
    delta = parse_rational(args.delta)
    found = search_witness(
        pair,
        args.degree,
        delta=delta,
        radius=args.radius,
        strategy=args.strategy,
        prefilter_depth=_prefilter_depth(),
    )
    if found is None:
        report.emit("status=not-found")
        report.exit_code = EXIT_REFUTED
        return
    record = certify_mod.verify_witness(pair, found, _prefilter_depth())
    report.emit(format_poly(found))
    for line in record.render():
        report.emit(line)


def _cmd_constant(args, report: RunReport) -> None:
    if args.interval is not None:
        result = constants_mod.interval_constant(args.interval[0], args.interval[1])
        if result is None:
            report.emit("value=unknown")
            report.exit_code = EXIT_INCONCLUSIVE
            return
        value, provenance = result
        report.emit(f"value={value}")
        report.emit(f"provenance={provenance}")
    elif args.point is not None:
        value = constants_mod.point_constant(parse_rational(args.point))
        report.emit(f"value={value}")
        report.emit("provenance=single rational point")
    else:
        points = [parse_rational(tok) for tok in args.point_set.split(",")]
        import warnings

        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            value = constants_mod.finite_set_constant(points)
        report.emit(f"value={value}")
        report.emit("provenance=finite rational set")


def _cmd_verify_table(args, report: RunReport) -> None:
    path = args.file if args.file is not None else bundled_table_path()
    entries = parse_table_file(path)
    depth = _prefilter_depth()
    all_ok = True
    for entry in entries:
        poly = entry.poly
        if poly.coeffs[-1] == -1:
            poly = -poly
        record = certify_mod.verify_witness(entry.pair, poly, depth)
        status = record.certificate.verdict.value
        if record.certificate.verdict is not certify_mod.Verdict.CERTIFIED_AT_MOST:
            all_ok = False
        report.emit(
            "entry={lo}..{hi} degree={deg} status={status}".format(
                lo=format_rational(entry.pair.lo),
                hi=format_rational(entry.pair.hi),
                deg=record.degree,
                status=status,
            )
        )
    report.emit(f"total={len(entries)}")
    report.exit_code = EXIT_OK if all_ok else EXIT_REFUTED


def run(argv: list[str]) -> RunReport:
    """Dispatch a command line; returns the full report without printing."""
    report = RunReport(command=" ".join(argv))
    try:
        args = _build_parser().parse_args(argv)
        if args.cmd == "farey":
            _cmd_farey(args, report)
        elif args.cmd == "construct":
            _cmd_construct(args, report)
        elif args.cmd == "certify":
            _cmd_certify(args, report)
        elif args.cmd == "search":
            _cmd_search(args, report)
        elif args.cmd == "constant":
            _cmd_constant(args, report)
        elif args.cmd == "verify-table":
            _cmd_verify_table(args, report)
    except _UsageError as exc:
        report.emit(f"error={exc}")
        report.exit_code = EXIT_USAGE
    except DegreeSearchError as exc:
        report.emit(f"error={exc}")
        report.emit(f"minimal_degree={exc.minimal}")
        report.exit_code = EXIT_INCONCLUSIVE
    except CongruenceError as exc:
        report.emit(f"error={exc}")
        report.exit_code = EXIT_USAGE
    except (ValueError, ZeroDivisionError, OSError) as exc:
        report.emit(f"error={exc}")
        report.exit_code = EXIT_USAGE
    return report


def main(argv: list[str] | None = None) -> int:
    report = run(sys.argv[1:] if argv is None else argv)
    print(f"command={report.command}")
    for line in report.lines:
        print(line)
    return report.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
