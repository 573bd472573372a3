"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or format error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import analysis, construction, counting, io, selftest
from .words import exponent

USAGE_ERROR = 2
VERIFY_ERROR = 1


def _add_generate(sub) -> None:
    p = sub.add_parser("generate", help="sample a tree and write its code")
    p.add_argument("--n", type=int, default=16, choices=(16, 32))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=construction.MODES, default="la3")
    p.add_argument("--tree", metavar="IDENTITY|FILE", default=None,
                   help="'identity' or a tree file to build instead of sampling")
    p.add_argument("--out", required=True, help="code file to write")
    p.add_argument("--tree-out", default=None, help="also write the tree file")
    p.add_argument("--big", action="store_true",
                   help="opt in to the length-32 working set")


def _cmd_generate(args) -> int:
    if args.n == 32 and not args.big:
        print("length 32 needs --big", file=sys.stderr)
        return USAGE_ERROR
    if args.tree == "identity":
        tree = construction.identity_tree(args.n, args.mode)
    elif args.tree is not None:
        tree = io.read_tree_file(args.tree)
        if tree.n != args.n or tree.mode != args.mode:
            print("tree file disagrees with --n/--mode", file=sys.stderr)
            return USAGE_ERROR
    else:
        tree = construction.sample_tree(args.n, args.seed, args.mode)
    problem = construction.validate_tree(tree)
    if problem is not None:
        print(f"invalid tree: {problem}", file=sys.stderr)
        return VERIFY_ERROR
    if args.n <= 16:
        code = construction.build_code(tree)
    else:
        code = construction.build_code_array(tree)
    io.write_code_file(args.out, code, args.n)
    if args.tree_out:
        io.write_tree_file(args.tree_out, tree)
    print(f"wrote {args.out}")
    return 0


def _cmd_verify(args) -> int:
    code, n, _ = io.read_code_file(args.code)
    if n > 16 and not args.big:
        print("length 32 needs --big", file=sys.stderr)
        return USAGE_ERROR
    report = analysis.verify_extended_perfect(code, n)
    print(report.render())
    return 0 if report.extended_perfect else VERIFY_ERROR


def _cmd_analyze(args) -> int:
    code, n, _ = io.read_code_file(args.code)
    if n > 16 and not args.big:
        print("length 32 needs --big", file=sys.stderr)
        return USAGE_ERROR
    report = analysis.analyze(code, n, with_kernel=(n <= 16 or args.kernel))
    print(report.render())
    return 0


def _cmd_puncture(args) -> int:
    code, n, _ = io.read_code_file(args.code)
    try:
        short = construction.puncture(code, n)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return VERIFY_ERROR
    with Path(args.out).open("w", encoding="ascii") as fh:
        fh.write(f"n={n - 1} complete=1\n")
        for w in short:
            fh.write(format(w, f"0{n - 1}b"))
            fh.write("\n")
    print(f"wrote {args.out}")
    return 0


def _cmd_count(args) -> int:
    n = args.n
    what = args.what
    if what in ("exact", "all"):
        print(f"exact {counting.format_count(counting.la_code_count(n))}")
    if what in ("upper", "all"):
        print(f"upper {counting.format_count(counting.la_code_count_upper(n))}")
    if what in ("reps", "all"):
        from .isometries import coset_count

        for t in range(1, exponent(n)):
            print(f"reps t={t} {counting.format_count(coset_count(n, t))}")
    if what in ("bounds", "all"):
        for key, value in counting.historical_bounds(n).items():
            print(f"{key} 2^{value:.2f}")
        ext, punct = counting.nonequivalence_bounds(n)
        print(f"noneq_extended 2^{ext:.2f}")
        print(f"noneq_punctured 2^{punct:.2f}")
    if what in ("asymptotic", "all"):
        for k, factor in counting.asymptotic_factors(n):
            print(f"asymptotic k={k} 2^{factor:.2f}")
        print(f"asymptotic_total 2^{counting.asymptotic_log2(n):.2f}")
    return 0


def _cmd_selftest(args) -> int:
    ok = selftest.run(args.n, args.level)
    print("selftest:", "ok" if ok else "FAILED")
    return 0 if ok else VERIFY_ERROR


def _cmd_report(args) -> int:
    from . import report as report_mod

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    rows = report_mod.bounds_rows(args.lengths)
    report_mod.write_bounds_csv(out_dir / "bounds.csv", rows)
    report_mod.bounds_figure(out_dir / "bounds.png", rows)
    written = ["bounds.csv", "bounds.png"]
    if args.code:
        code, n, _ = io.read_code_file(args.code)
        report = analysis.analyze(code, n, with_kernel=n <= 16)
        (out_dir / "code_report.txt").write_text(report.render() + "\n", "ascii")
        report_mod.write_weight_csv(out_dir / "weights.csv", code, n)
        report_mod.weight_figure(out_dir / "weights.png", code, n)
        written += ["code_report.txt", "weights.csv", "weights.png"]
    print("wrote " + ", ".join(str(out_dir / name) for name in written))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lacodes",
        description="build, verify and count extended 1-perfect binary codes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    _add_generate(sub)

    p = sub.add_parser("verify", help="check a code file for extended perfectness")
    p.add_argument("code")
    p.add_argument("--big", action="store_true")

    p = sub.add_parser("analyze", help="full report: perfectness, rank, kernel")
    p.add_argument("code")
    p.add_argument("--big", action="store_true")
    p.add_argument("--kernel", action="store_true",
                   help="force the kernel computation at length 32")

    p = sub.add_parser("puncture", help="delete the last coordinate")
    p.add_argument("code")
    p.add_argument("--out", required=True)

    p = sub.add_parser("count", help="evaluate counting formulas and bounds")
    p.add_argument("--n", type=int, default=16)
    p.add_argument("--what", default="all",
                   choices=("exact", "upper", "reps", "bounds", "asymptotic", "all"))

    p = sub.add_parser("selftest", help="run the built-in oracle suites")
    p.add_argument("--n", type=int, default=16)
    p.add_argument("--level", choices=("quick", "full"), default="quick")

    p = sub.add_parser("report", help="render bound tables and figures")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--lengths", type=int, nargs="+", default=[16, 32, 64, 128])
    p.add_argument("--code", default=None, help="also report on a code file")

    return parser


_HANDLERS = {
    "generate": _cmd_generate,
    "verify": _cmd_verify,
    "analyze": _cmd_analyze,
    "puncture": _cmd_puncture,
    "count": _cmd_count,
    "selftest": _cmd_selftest,
    "report": _cmd_report,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except io.FileFormatError as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR
    except (ValueError, OSError) as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
