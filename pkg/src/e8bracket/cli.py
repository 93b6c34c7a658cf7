"""Command-line interface: ``e8bracket {bracket,verify,export,info}``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
Standard output is deterministic for fixed arguments; timing and progress
go to standard error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import analysis as an
from . import serialize as ser
from .e8 import cartan_involution, tau
from .f4 import f4_tau

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
CHECKS = ("jacobi", "invariance", "automorphisms", "simplicity")
EXPORTS = ("structure-constants", "killing", "roots", "basis")


class CliError(Exception):
    """Input or I/O problem; reported with exit code 2."""


def _algebra(name: str) -> str:
    try:
        return an.normalize_name(name)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def _load_json(arg: str):
    """Inline JSON if ``arg`` looks like it, otherwise a file path."""
    text = arg
    if not arg.lstrip().startswith(("[", "{")):
        try:
            text = Path(arg).read_text()
        except OSError as exc:
            raise CliError(f"cannot read {arg}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"malformed JSON in {arg[:40]!r}: {exc.msg}") from exc


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text)
    except OSError as exc:
        raise CliError(f"cannot write {out}: {exc.strerror}") from exc


def _table(args) -> an.StructureTable:
    if getattr(args, "table", None) is None:
        return an.build_structure_table(args.algebra)
    data = _load_json(args.table)
    try:
        return an.table_from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError(f"invalid structure-constant table {args.table}: {exc}") from exc


# ---------------------------------------------------------------------------
# bracket


def cmd_bracket(args) -> int:
    model = an.algebra_model(args.algebra)
    raw = [_load_json(a) for a in (args.x, args.y)]
    try:
        x, y = (ser.element_from_json(args.algebra, d) for d in raw)
    except (ser.InputError, ValueError) as exc:
        raise CliError(str(exc)) from exc
    z = model.bracket(x, y)
    if isinstance(raw[0], list):
        out = ser.coords_to_json(model.coords(z))
    else:
        out = ser.element_to_json(args.algebra, z)
    _write(ser.dumps(out), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _progress(total: int):
    seen = [0]

    def tick(_):
        seen[0] += 1
        if seen[0] % 16 and seen[0] != total:
            return
        print(f"\rjacobi sweep {seen[0]}/{total}", end="", file=sys.stderr, flush=True)
        if seen[0] == total:
            print(file=sys.stderr)

    return tick


def _automorphism_reports(table: an.StructureTable) -> list[an.VerificationReport]:
    alg = table.algebra
    if alg == "e8":
        maps = [("tau", tau), ("theta", cartan_involution)]
    elif alg == "e8_split":
        maps = [("theta", cartan_involution)]
    elif alg == "f4":
        maps = [("tau", f4_tau)]
    else:
        return [an.so16_embedding_check(table)]
    return [an.verify_automorphism(table, an.map_matrix(alg, fn), name) for name, fn in maps]


def run_check(check: str, table: an.StructureTable, args) -> list[an.VerificationReport]:
    if check == "jacobi":
        mode = "exhaustive" if args.mode == "exhaustive" else "sampled"
        progress = _progress(table.dim if args.jobs <= 1 else args.jobs) if args.mode == "exhaustive" and not args.quiet else None
        return [an.verify_jacobi(table, mode, args.samples, args.seed, args.jobs, progress)]
    if check == "invariance":
        # the explicit scalar product on compact e8, the Killing form elsewhere
        gram = an.gram_matrix("e8") if table.algebra == "e8" else an.killing_form(table)
        report = an.verify_ad_invariance(table, gram)
        report.check = "ad-invariance:" + ("scalar-product" if table.algebra == "e8" else "killing")
        return [report]
    if check == "automorphisms":
        return _automorphism_reports(table)
    return [an.simplicity_certificate(table)]


def cmd_verify(args) -> int:
    table = _table(args)
    checks = CHECKS if "all" in args.check else tuple(dict.fromkeys(args.check))
    reports = []
    for check in checks:
        for report in run_check(check, table, args):
            reports.append(report)
            print(report.summary(timing=False))
            print(f"  {report.check}: {report.elapsed:.2f}s", file=sys.stderr)
            if report.details:
                print("  details: " + json.dumps(report.details, sort_keys=True))
            if not report.passed:
                print("  first counterexample: " + json.dumps(report.failures[0], sort_keys=True))
    if args.json:
        _write(ser.dumps([r.to_dict(timing=False) for r in reports]), args.json)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


# ---------------------------------------------------------------------------
# export and info


def cmd_export(args) -> int:
    fmt = args.format
    if args.what == "structure-constants":
        table = an.build_structure_table(args.algebra)
        text = ser.dumps(an.table_to_json(table)) if fmt == "json" else ser.table_to_csv(table)
    elif args.what == "killing":
        b = an.killing_form(an.build_structure_table(args.algebra))
        if fmt == "json":
            text = ser.dumps({"algebra": args.algebra, "dim": len(b), "killing": [[ser.rational_to_str(x) for x in r] for r in b]})
        else:
            text = ser.matrix_to_csv(b)
    elif args.what == "roots":
        if args.algebra != "e8":
            raise CliError("root export is available for the compact e8 only")
        datum = an.cartan_and_roots(an.build_structure_table("e8"), seed=args.seed)
        if fmt == "json":
            data = datum.to_json()
            # float residuals vary in the last bits across BLAS builds; keep output stable
            data["max_rounding_residual"] = f"{data['max_rounding_residual']:.1e}"
            data["max_eigen_residual"] = f"{data['max_eigen_residual']:.1e}"
            text = ser.dumps(data)
        else:
            text = ser.roots_to_csv(datum.roots)
    else:
        labels = an.basis_labels(args.algebra)
        text = ser.dumps(ser.basis_to_json(args.algebra, labels)) if fmt == "json" else ser.basis_to_csv(labels)
    _write(text, args.out)
    return EXIT_OK


def basis_layout(algebra: str) -> list[tuple[str, int, int]]:
    """(block, first index, last index) runs of the canonical basis."""
    runs: list[tuple[str, int, int]] = []
    for n, label in enumerate(an.basis_labels(algebra)):
        block = label.split(":")[0]
        if runs and runs[-1][0] == block:
            runs[-1] = (block, runs[-1][1], n)
        else:
            runs.append((block, n, n))
    return runs


def cmd_info(args) -> int:
    table = an.build_structure_table(args.algebra)
    sig = an.signature(an.killing_form(table))
    lines = [
        f"{args.algebra}: dim {table.dim}, signature ({sig[0]},{sig[1]},{sig[2]})",
        "basis: " + ", ".join(f"{b} {lo}-{hi}" for b, lo, hi in basis_layout(args.algebra)),
        f"nonzero structure constants (i<j): {len(table.entries)}",
        "distinct |c|: " + ", ".join(str(c) for c in table.distinct_abs_values()),
    ]
    _write("\n".join(lines) + "\n", None)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="e8bracket", description="Exact e8, f4 and so(16) brackets over octonions.")
    sub = p.add_subparsers(dest="command", required=True)

    def algebra_opt(sp, default="e8"):
        sp.add_argument("--algebra", type=_algebra, default=default, help="f4, e8, e8-split or so16 (default %(default)s)")

    b = sub.add_parser("bracket", help="bracket of two elements (JSON file or inline JSON)")
    algebra_opt(b)
    b.add_argument("x")
    b.add_argument("y")
    b.add_argument("--out")
    b.set_defaults(func=cmd_bracket)

    v = sub.add_parser("verify", help="run exact verification checks")
    algebra_opt(v)
    v.add_argument("--check", action="append", choices=CHECKS + ("all",), help="repeatable; default jacobi")
    v.add_argument("--mode", choices=("exhaustive", "sample"), default="exhaustive")
    v.add_argument("--samples", type=_positive, default=1000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=_positive, default=1)
    v.add_argument("--table", help="verify a structure-constant table from a JSON file instead")
    v.add_argument("--json", help="also write the reports as JSON to this path")
    v.add_argument("--quiet", action="store_true", help="no progress on standard error")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("export", help="write tables, forms, roots or basis labels")
    e.add_argument("what", choices=EXPORTS)
    algebra_opt(e)
    e.add_argument("--format", choices=("json", "csv"), default="json")
    e.add_argument("--out")
    e.add_argument("--seed", type=int, default=0)
    e.set_defaults(func=cmd_export)

    i = sub.add_parser("info", help="dimension, basis layout and Killing signature")
    algebra_opt(i)
    i.set_defaults(func=cmd_info)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "check", ...) is None:
        args.check = ["jacobi"]
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
