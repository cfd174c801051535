"""Command-line front end.

Exit codes: 0 success, 2 bad arguments, 3 enumeration budget exceeded,
4 a check or oracle comparison failed.
"""
import argparse
import csv
import io
import json
import sys
from contextlib import contextmanager

from . import verify
from .ballots import (
    DEFAULT_BUDGET,
    count_multivote,
    count_singlevote,
    enumerate_ssyt,
    enumerate_syt,
)
from .counting import dagger, formula_F, formula_Fstar, hcf_count, hlf_count
from .errors import BudgetExceeded
from .exact import as_integer
from .shapes import format_shape, is_weakly_decreasing, parse_counts, parse_shape, partitions

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_MISMATCH = 4


def _shape(text):
    try:
        return parse_shape(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad shape {text!r}: {exc}")


def _counts(text):
    try:
        return parse_counts(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad count list {text!r}: {exc}")


def _nonneg(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _positive(text):
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _shape_list(text):
    text = text.strip()
    if not text:
        return []
    return [_shape(tok) for tok in text.split(";")]


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET,
                        help="maximum search states for brute-force enumeration")
    common.add_argument("--out", metavar="FILE", help="write output here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="hookcontent",
        description="Exact tableau and ballot counts, with brute-force cross-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="print an exact count")
    count_sub = count.add_subparsers(dest="kind", required=True)
    ssyt = count_sub.add_parser("ssyt", parents=[common])
    ssyt.add_argument("--shape", type=_shape, required=True)
    ssyt.add_argument("--letters", type=_nonneg, required=True)
    ssyt.add_argument("--oracle", action="store_true")
    syt = count_sub.add_parser("syt", parents=[common])
    syt.add_argument("--shape", type=_shape, required=True)
    syt.add_argument("--oracle", action="store_true")
    ballots = count_sub.add_parser("ballots", parents=[common])
    mode = ballots.add_mutually_exclusive_group(required=True)
    mode.add_argument("--multi", action="store_true")
    mode.add_argument("--single", action="store_true")
    ballots.add_argument("--n", type=_counts, required=True, help="target tally, e.g. 3,2,1")
    ballots.add_argument("--steps", type=_nonneg, required=True, help="number of ballots N")
    ballots.add_argument("--oracle", action="store_true")

    ver = sub.add_parser("verify", help="run a family of checks")
    ver_sub = ver.add_subparsers(dest="kind", required=True)
    t1 = ver_sub.add_parser("theorem1", parents=[common])
    t1.add_argument("--max-cells", type=_nonneg, default=6, help="bound on sum of counts")
    t1.add_argument("--max-steps", type=_nonneg, default=4)
    t1.add_argument("--max-len", type=_positive, default=4, help="bound on d+1")
    l2 = ver_sub.add_parser("lemma2", parents=[common])
    l2.add_argument("--n-max", type=_nonneg, default=4)
    l2.add_argument("--random-n", type=_counts, default=(5, 6),
                    help="sizes checked at random integer points")
    l2.add_argument("--points", type=_positive, default=50)
    l2.add_argument("--seed", type=int, default=0)
    hi = ver_sub.add_parser("hlf-identity", parents=[common])
    hi.add_argument("--n-max", type=_nonneg, default=4)
    t2 = ver_sub.add_parser("theorem2", parents=[common])
    t2.add_argument("--max-cells", type=_nonneg, default=6)
    t2.add_argument("--extra-letters", type=_nonneg, default=3)
    hk = ver_sub.add_parser("hooks", parents=[common])
    hk.add_argument("--max-cells", type=_nonneg, default=10)
    fam = ver_sub.add_parser("families", parents=[common],
                             help="filling-family formulas and the intersection remark")
    fam.add_argument("--max-cells", type=_nonneg, default=5)
    fam.add_argument("--max-steps", type=_nonneg, default=4)

    table = sub.add_parser("table", parents=[common], help="SSYT/SYT counts over a grid")
    table.add_argument("--max-size", type=_nonneg, default=4)
    table.add_argument("--max-letters", type=_nonneg, default=3)
    table.add_argument("--shapes", type=_shape_list, default=None,
                       help="explicit shapes separated by ';' (overrides --max-size)")
    return parser


@contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _emit(args, record, text):
    with _output(args.out) as fh:
        if args.format == "json":
            fh.write(json.dumps(record, sort_keys=True) + "\n")
        elif args.format == "csv":
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(list(record))
            writer.writerow([_cell(v) for v in record.values()])
        else:
            fh.write(text + "\n")


def _cell(value):
    if isinstance(value, (list, tuple)):
        return format_shape(value)
    return value


def ballot_value(N, counts, single):
    """Closed-form multi/single-vote count, zero outside the formula's range."""
    if not dagger(counts):
        return 0
    if single:
        return as_integer(formula_Fstar(N, counts)) if N == sum(counts) else 0
    return as_integer(formula_F(N, counts))


def cmd_count(args):
    if args.kind == "ssyt":
        value = hcf_count(args.letters, args.shape)
        oracle = (lambda: enumerate_ssyt(args.letters, args.shape, args.budget))
        record = {"kind": "ssyt", "shape": format_shape(args.shape), "N": str(args.letters)}
    elif args.kind == "syt":
        value = hlf_count(args.shape)
        oracle = (lambda: enumerate_syt(args.shape, args.budget))
        record = {"kind": "syt", "shape": format_shape(args.shape)}
    else:
        single = args.single
        value = ballot_value(args.steps, args.n, single)
        brute = count_singlevote if single else count_multivote
        oracle = (lambda: brute(args.steps, args.n, args.budget))
        record = {
            "kind": "single" if single else "multi",
            "n": format_shape(args.n),
            "N": str(args.steps),
            "dagger": str(dagger(args.n)),
        }
    record["value"] = str(value)
    status = EXIT_OK
    text = str(value)
    if args.oracle:
        brute_value = oracle()
        agree = brute_value == value
        record["oracle"] = str(brute_value)
        record["agree"] = agree
        text += f"\noracle {brute_value} {'agrees' if agree else 'DISAGREES'}"
        if not agree:
            status = EXIT_MISMATCH
    _emit(args, record, text)
    return status


def cmd_verify(args):
    if args.kind == "theorem1":
        summary = verify.theorem1_sweep(
            max_len=args.max_len, max_entry=args.max_cells,
            max_steps=args.max_steps, max_total=args.max_cells, cap=args.budget,
        )
    elif args.kind == "lemma2":
        summary = verify.lemma2_sweep(
            n_max=args.n_max, random_ns=args.random_n, points=args.points, seed=args.seed,
        )
    elif args.kind == "hlf-identity":
        summary = verify.hlf_identity_sweep(n_max=args.n_max)
    elif args.kind == "theorem2":
        summary = verify.theorem2_sweep(max_cells=args.max_cells, extra_N=args.extra_letters)
    elif args.kind == "hooks":
        summary = verify.hooks_sweep(max_cells=args.max_cells)
    else:
        summary = verify.family_sweep(
            max_cells=args.max_cells, max_N=args.max_steps, cap=args.budget,
        )
    record = summary.to_json()
    verdict = "pass" if summary.passed else "FAIL"
    text = f"{summary.name}: {summary.checked} checks, {verdict}"
    for failure in summary.failures[:10]:
        text += f"\n  failed: {failure}"
    if args.format == "csv":
        record = {"name": summary.name, "checked": summary.checked,
                  "passed": summary.passed, "failures": len(summary.failures)}
    _emit(args, record, text)
    return EXIT_OK if summary.passed else EXIT_MISMATCH


def table_rows(shapes, max_letters):
    for p in shapes:
        syt = hlf_count(p)
        for N in range(max_letters + 1):
            yield {"shape": format_shape(p), "N": str(N), "ssyt": str(hcf_count(N, p)), "syt": str(syt)}


def cmd_table(args):
    if args.shapes is not None:
        shapes = args.shapes
    else:
        shapes = [p for size in range(1, args.max_size + 1) for p in partitions(size)]
    rows = list(table_rows(shapes, args.max_letters))
    with _output(args.out) as fh:
        if args.format == "json":
            fh.write(json.dumps(rows, sort_keys=True) + "\n")
        else:
            buf = io.StringIO()
            delim = "," if args.format == "csv" else "\t"
            writer = csv.DictWriter(buf, fieldnames=["shape", "N", "ssyt", "syt"],
                                    delimiter=delim, lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
            fh.write(buf.getvalue())
    return EXIT_OK


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "count":
            return cmd_count(args)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_table(args)
    except BudgetExceeded as exc:
        print(f"hookcontent: {exc}", file=sys.stderr)
        return EXIT_BUDGET


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
