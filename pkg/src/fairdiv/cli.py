"""Command-line front end.

Problems are CSV files with the header ``name,divisible,a,b``; blank lines
and lines starting with ``#`` are ignored.  Exit status is 0 on success
(including "no fair division exists"), 2 for unreadable or invalid input
and 3 when the input exceeds a size guard.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
import tempfile
from fractions import Fraction
from typing import Optional

from .engine import MODES, FairnessReport, Outcome, solve
from .existence import ExistenceFlags, existence_flags
from .geometry import adjusted_winner, envelope, pareto_line, shifted_lines
from .model import Division, FairDivisionError, GainPair, GuardViolation, Problem, Signature, gains, make_problem
from .oracle import indivisible_table, oracle_report, system_table
from .pareto_indivisible import undominated_points

log = logging.getLogger("fairdiv")

HEADER = ["name", "divisible", "a", "b"]
EXIT_OK, EXIT_INPUT, EXIT_GUARD = 0, 2, 3


class ParseError(FairDivisionError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_problem_file(text: str) -> Problem:
    rows = []
    header_seen = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = [f.strip() for f in next(csv.reader([raw]))]
        if not header_seen:
            if fields != HEADER:
                raise ParseError(lineno, f"expected header {','.join(HEADER)!r}, got {stripped!r}")
            header_seen = True
            continue
        if len(fields) != 4:
            raise ParseError(lineno, f"expected 4 fields, got {len(fields)}")
        name, flag, a, b = fields
        if flag not in ("0", "1"):
            raise ParseError(lineno, f"field 'divisible' must be 0 or 1, got {flag!r}")
        values = []
        for label, v in (("a", a), ("b", b)):
            try:
                values.append(int(v))
            except ValueError:
                raise ParseError(lineno, f"field {label!r} is not an integer: {v!r}") from None
        rows.append((name, int(flag), values[0], values[1]))
    if not header_seen:
        raise ParseError(1, f"missing header {','.join(HEADER)!r}")
    try:
        return make_problem(rows)
    except FairDivisionError as exc:
        raise type(exc)(f"invalid problem: {exc}") from exc


def read_problem(path: str) -> Problem:
    with open(path, encoding="utf-8") as fh:
        return parse_problem_file(fh.read())


def fmt(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _division_json(p: Problem, out: Optional[Outcome]):
    if out is None:
        return None
    to_a, to_b, split = [], [], None
    for it, x in zip(p.items, out.division.item_shares(p)):
        if x == 1:
            to_a.append(it.name)
        elif x == 0:
            to_b.append(it.name)
        else:
            if split is not None:
                raise ValueError("a report division may split at most one item")
            split = {"item": it.name, "share_to_A": fmt(x)}
    return {"gains": [fmt(out.gains.ga), fmt(out.gains.gb)], "to_A": to_a, "to_B": to_b, "split": split}


def report_dict(p: Problem, r: FairnessReport) -> dict:
    L, M, H = r.signature
    return {
        "signature": {"L": L, "M": M, "H": H},
        "exists": {"proportional": r.exists.proportional, "equitable": r.exists.equitable},
        "equitably_fair": _division_json(p, r.equitably_fair),
        "profitably_fair": _division_json(p, r.profitably_fair),
        "uniformly_fair": _division_json(p, r.uniformly_fair),
        "fair": _division_json(p, r.fair),
        "mode": r.mode,
    }


def format_report_json(p: Problem, r: FairnessReport) -> str:
    return json.dumps(report_dict(p, r), separators=(",", ":"))


def _parse_division(p: Problem, entry) -> Optional[Outcome]:
    if entry is None:
        return None
    to_a, to_b = set(entry["to_A"]), set(entry["to_B"])
    split = entry["split"]
    shares = []
    for it in p.items:
        if it.name in to_a:
            shares.append(1)
        elif it.name in to_b:
            shares.append(0)
        elif split is not None and split["item"] == it.name:
            shares.append(Fraction(split["share_to_A"]))
        else:
            raise ValueError(f"item {it.name!r} missing from division")
    d = Division.from_item_shares(p, shares)
    g = GainPair(Fraction(entry["gains"][0]), Fraction(entry["gains"][1]))
    if gains(p, d) != g:
        raise ValueError(f"serialized gains {g} do not match the division")
    return Outcome(g, d)


def parse_report_json(text: str, p: Problem) -> FairnessReport:
    data = json.loads(text)
    sig = data["signature"]
    return FairnessReport(
        Signature(sig["L"], sig["M"], sig["H"]),
        ExistenceFlags(data["exists"]["proportional"], data["exists"]["equitable"]),
        _parse_division(p, data["equitably_fair"]),
        _parse_division(p, data["profitably_fair"]),
        _parse_division(p, data["uniformly_fair"]),
        _parse_division(p, data["fair"]),
        data["mode"],
    )


def _describe(p: Problem, label: str, out: Optional[Outcome]) -> list[str]:
    if out is None:
        return [f"{label}: none"]
    d = _division_json(p, out)
    lines = [f"{label}: gains ({fmt(out.gains.ga)}, {fmt(out.gains.gb)})",
             f"  to A: {', '.join(d['to_A']) or '-'}",
             f"  to B: {', '.join(d['to_B']) or '-'}"]
    if d["split"]:
        lines.append(f"  split: {d['split']['item']} with {d['split']['share_to_A']} to A")
    return lines


def format_report_text(p: Problem, r: FairnessReport) -> str:
    L, M, H = r.signature
    yes = {True: "yes", False: "no"}
    lines = [f"signature: L={L} M={M} H={H}  (mode {r.mode})",
             f"proportional division exists: {yes[r.exists.proportional]}",
             f"equitable division exists: {yes[r.exists.equitable]}"]
    for label, out in (("fair", r.fair), ("equitably fair", r.equitably_fair),
                       ("profitably fair", r.profitably_fair), ("uniformly fair", r.uniformly_fair)):
        lines.extend(_describe(p, label, out))
    return "\n".join(lines)


def _write_csv(path: str, header: list[str], rows) -> None:
    """Write a CSV atomically: temp file in the same directory, then rename."""
    folder = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=folder, prefix=".tmp-", suffix=".csv")
    try:
        with os.fdopen(fd, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(header)
            w.writerows(rows)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def export_geometry(p: Problem, out_dir: str) -> list[str]:
    os.makedirs(out_dir, exist_ok=True)
    points = undominated_points(p)
    line = pareto_line(p)
    env = envelope(shifted_lines(p, points))
    paths = [os.path.join(out_dir, n) for n in ("aw_pareto.csv", "ad_pareto.csv", "frontier.csv")]
    _write_csv(paths[0], ["x", "y", "sigma"],
               [(pt.x, pt.y, "".join(map(str, pt.witness))) for pt in points])
    _write_csv(paths[1], ["k", "x", "y"], [(k, fmt(v.x), fmt(v.y)) for k, v in enumerate(line.vertices)])
    _write_csv(paths[2], ["seg", "x1", "y1", "closed1", "x2", "y2", "closed2"],
               [(k, fmt(pc.p1.x), fmt(pc.p1.y), int(pc.closed1), fmt(pc.p2.x), fmt(pc.p2.y), int(pc.closed2))
                for k, pc in enumerate(env)])
    return paths


def _cmd_solve(args) -> int:
    p = read_problem(args.file)
    r = solve(p, args.mode)
    print(format_report_json(p, r) if args.json else format_report_text(p, r))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    p = read_problem(args.file)
    r = oracle_report(p)
    if args.json:
        print(format_report_json(p, r))
        return EXIT_OK
    print(format_report_text(p, r))
    if args.tables:
        print("\nindivisible distributions: sigma gA gB min |diff|")
        for row in indivisible_table(p):
            print("  " + "".join(map(str, row.sigma)), row.ga, row.gb, row.min, row.diff)
        print("\nexistence systems: sigma V1 V2 V3 first second window")
        for row in system_table(p):
            print("  " + "".join(map(str, row.sigma)), row.v1, row.v2, row.v3,
                  int(row.first), int(row.second), int(row.window))
    return EXIT_OK


def _cmd_aw(args) -> int:
    p = read_problem(args.file)
    fixed = [it.name for it in p.items if not it.divisible]
    if fixed:
        log.warning("treating indivisible items as divisible: %s", ", ".join(fixed))
    res = adjusted_winner([(it.a, it.b) for it in p.items])
    if args.json:
        print(json.dumps({
            "r": res.r,
            "gains": [fmt(res.gains.ga), fmt(res.gains.gb)],
            "shares_to_A": {it.name: fmt(x) for it, x in zip(p.items, res.shares)},
            "split": None if res.split is None else
            {"item": p.items[res.split].name, "share_to_A": fmt(res.shares[res.split])},
        }, separators=(",", ":")))
        return EXIT_OK
    print(f"r = {res.r}")
    for it, x in zip(p.items, res.shares):
        print(f"  {it.name}: {fmt(x)} to A")
    print(f"gains: ({fmt(res.gains.ga)}, {fmt(res.gains.gb)})")
    return EXIT_OK


def _cmd_exists(args) -> int:
    p = read_problem(args.file)
    flags = existence_flags(p)
    if args.json:
        print(json.dumps({"proportional": flags.proportional, "equitable": flags.equitable}, separators=(",", ":")))
    else:
        print(f"proportional: {'yes' if flags.proportional else 'no'}")
        print(f"equitable: {'yes' if flags.equitable else 'no'}")
    return EXIT_OK


def _cmd_geometry(args) -> int:
    p = read_problem(args.file)
    for path in export_geometry(p, args.out):
        print(path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fairdiv", description="Exact two-participant fair division.")
    ap.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="find equitably, profitably and uniformly fair divisions")
    sp.add_argument("file")
    sp.add_argument("--mode", choices=MODES, default="exact")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_solve)

    sp = sub.add_parser("aw", help="adjusted winner, treating every item as divisible")
    sp.add_argument("file")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_aw)

    sp = sub.add_parser("exists", help="test whether proportional and equitable divisions exist")
    sp.add_argument("file")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_exists)

    sp = sub.add_parser("geometry", help="write the gain-space frontier as CSV files")
    sp.add_argument("file")
    sp.add_argument("--out", required=True, help="output directory")
    sp.set_defaults(func=_cmd_geometry)

    sp = sub.add_parser("oracle", help="brute-force reference report for small problems")
    sp.add_argument("file")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--tables", action="store_true", help="also print the enumeration tables")
    sp.set_defaults(func=_cmd_oracle)
    return ap


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except GuardViolation as exc:
        print(f"fairdiv: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (OSError, FairDivisionError, UnicodeDecodeError) as exc:
        print(f"fairdiv: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
