"""
Command-line interface.

Three subcommands:

* ``invariants`` — one report for one braid word (pretty text or JSON),
* ``family``    — a sweep over one of the built-in knot families, printed
  as a tab-separated verdict table or JSON,
* ``verify --paper`` — the full cross-check sweep; exits nonzero on any
  mismatch.

Exit codes: 0 success, 1 verification mismatch, 2 usage error.  With
``--figures DIR`` the report paths also render overview figures into DIR.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .alexander import formal_semigroup
from .braid import FAMILY_NAMES, BraidSyntaxError, family_word, parse_braid
from .report import FamilyVerdict, InvariantReport, invariant_report, verify_family
from .verify import run_all

__all__ = ["main", "entry"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidinv",
        description="Exact knot invariants of braid closures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="invariants of one braid closure")
    p_inv.add_argument("--braid", required=True, help='braid word, e.g. "[3,2,2,1,3,2,2,3,2]"')
    p_inv.add_argument("--strands", type=int, default=None, help="strand count (default: inferred)")
    p_inv.add_argument("--homfly", action="store_true", help="also compute HOMFLY-PT and MFW bounds")
    style = p_inv.add_mutually_exclusive_group()
    style.add_argument("--json", action="store_true", help="machine-readable JSON report")
    style.add_argument("--pretty", action="store_true", help="human-readable report (default)")
    p_inv.add_argument("--figures", metavar="DIR", default=None, help="write figures into DIR")
    p_inv.set_defaults(func=_cmd_invariants)

    p_fam = sub.add_parser("family", help="verification sweep over a knot family")
    p_fam.add_argument("--name", required=True, choices=FAMILY_NAMES, help="family name")
    p_fam.add_argument("--from", dest="n_from", type=int, required=True, metavar="N")
    p_fam.add_argument("--to", dest="n_to", type=int, required=True, metavar="M")
    p_fam.add_argument("--homfly", action="store_true", help="also compute MFW lower bounds")
    p_fam.add_argument("--json", action="store_true", help="machine-readable JSON verdicts")
    p_fam.add_argument("--figures", metavar="DIR", default=None, help="write figures into DIR")
    p_fam.set_defaults(func=_cmd_family)

    p_ver = sub.add_parser("verify", help="re-run the published computations and cross-checks")
    p_ver.add_argument("--paper", action="store_true", help="run the full verification sweep")
    p_ver.set_defaults(func=_cmd_verify)

    return parser


def _semigroup_text(report: InvariantReport) -> str:
    sg = report.formal_semigroup
    finite = "{" + ",".join(str(s) for s in sg.finite_part) + "}"
    return f"{finite} + all s >= {sg.threshold}"


def _print_pretty(report: InvariantReport) -> None:
    rows: list[tuple[str, str]] = [
        ("braid", report.braid),
        ("strands", str(report.strands)),
        ("writhe", str(report.writhe)),
        ("components", str(report.components)),
    ]
    if report.genus is not None:
        rows.append(("genus", str(report.genus)))
    if report.alexander is not None:
        rows.append(("alexander", str(report.alexander)))
    if report.formal_semigroup is not None:
        rows.append(("semigroup", _semigroup_text(report)))
    if report.semigroup_closed is not None:
        if report.semigroup_closed:
            rows.append(("closed", "yes"))
        else:
            a, b = report.semigroup_witness
            rows.append(("closed", f"no ({a} + {b} = {a + b} is missing)"))
    if report.homfly is not None:
        rows.append(("homfly", str(report.homfly)))
    if report.mfw is not None:
        m = report.mfw
        rows.append(("mfw", f"d+ = {m.d_plus}, d- = {m.d_minus}; "
                            f"{m.lower_bound} <= braid index <= {m.upper_bound}"))
    for field, reason in sorted(report.skipped.items()):
        rows.append((field, f"skipped ({reason})"))
    width = max(len(field) for field, _ in rows)
    for field, value in rows:
        print(f"{field.ljust(width)}  {value}")


def _invariant_figures(report: InvariantReport, out_dir: str) -> None:
    from . import plots

    directory = Path(out_dir)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    if report.alexander is not None:
        written.append(
            plots.alexander_figure(
                report.alexander, f"Alexander coefficients of {report.braid}",
                directory / "alexander.png",
            )
        )
    if report.formal_semigroup is not None:
        written.append(
            plots.semigroup_figure(
                report.formal_semigroup, f"Formal semigroup of {report.braid}",
                directory / "semigroup.png",
            )
        )
    for path in written:
        print(f"wrote {path}", file=sys.stderr)


def _cmd_invariants(args: argparse.Namespace) -> int:
    word = parse_braid(args.braid, strands=args.strands)
    report = invariant_report(word, include_homfly=args.homfly)
    if args.json:
        print(report.to_json(indent=2))
    else:
        _print_pretty(report)
    if args.figures:
        _invariant_figures(report, args.figures)
    return 0


_TABLE_COLUMNS = (
    "family", "n", "genus", "route_agreement", "semigroup_agreement",
    "semigroup_closed", "genus_ok", "mfw_lower",
)


def _verdict_row(verdict: FamilyVerdict) -> str:
    data = verdict.to_dict()
    cells = []
    for column in _TABLE_COLUMNS:
        value = data[column]
        if isinstance(value, bool):
            cells.append("yes" if value else "NO")
        elif value is None:
            cells.append("-")
        else:
            cells.append(str(value))
    return "\t".join(cells)


def _family_figures(args: argparse.Namespace, verdicts: list[FamilyVerdict]) -> None:
    from .alexander import alexander_poly
    from . import plots

    directory = Path(args.figures)
    directory.mkdir(parents=True, exist_ok=True)
    rows = []
    for verdict in verdicts:
        word = family_word(args.name, verdict.n)
        semigroup = formal_semigroup(alexander_poly(word))
        rows.append((verdict.n, semigroup, verdict.genus, verdict.mfw_lower))
    path = plots.family_figure(
        rows,
        f"family {args.name}, n = {args.n_from}..{args.n_to}",
        directory / f"family_{args.name}_{args.n_from}_{args.n_to}.png",
    )
    print(f"wrote {path}", file=sys.stderr)


def _cmd_family(args: argparse.Namespace) -> int:
    verdicts = verify_family(args.name, args.n_from, args.n_to, include_homfly=args.homfly)
    if args.json:
        print(json.dumps([v.to_dict() for v in verdicts], indent=2))
    else:
        print("\t".join(_TABLE_COLUMNS))
        for verdict in verdicts:
            print(_verdict_row(verdict))
    if args.figures:
        _family_figures(args, verdicts)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if not args.paper:
        print("nothing to verify: pass --paper to run the full sweep", file=sys.stderr)
        return 2
    failed = 0
    for number, result in run_all():
        status = "PASS" if result.passed else "FAIL"
        print(f"{status}  {number} {result.name}: {result.detail}")
        failed += not result.passed
    if failed:
        print(f"{failed} check(s) failed", file=sys.stderr)
        return 1
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BraidSyntaxError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
