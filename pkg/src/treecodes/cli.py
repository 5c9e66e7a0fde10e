"""Command-line entry point: ``treecodes {verify,plotdata,encode,scan-conj1,base32}``.

Exit codes: 0 on success, 2 for bad parameters or input, 3 when an internal
invariant fails.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from . import base32, blockcode, tables, treecode, verifier
from .dyadic import OddResidue

EXIT_USAGE = 2
EXIT_INVARIANT = 3


def _open_out(path):
    if path in (None, "-"):
        return sys.stdout, False
    return open(path, "w", newline="", encoding="utf-8"), True


def cmd_verify(args) -> int:
    if args.ell_max < 1:
        raise ValueError("--ell-max must be >= 1")
    if args.workers < 1:
        raise ValueError("--workers must be >= 1")
    out, close = _open_out(args.output)
    try:
        records = verifier.bb_delta(args.ell_max, symmetry=not args.no_symmetry,
                                    prune=not args.no_prune, workers=args.workers)
        tables.write_records(records, out)
    finally:
        if close:
            out.close()
    return 0


def cmd_plotdata(args) -> int:
    if args.reference:
        series = [(r.ell, r.one_minus_delta) for r in tables.reference_values()]
    elif args.input:
        series = tables.read_series(Path(args.input).read_text(encoding="utf-8"))
    else:
        raise ValueError("give an input CSV or --reference")
    prefix = Path(args.output)
    prefix.with_suffix(".dat").write_text(tables.plot_data(series), encoding="utf-8")
    prefix.with_suffix(".svg").write_text(tables.svg_chart(series), encoding="utf-8")
    return 0


def _parse_bits(text: str) -> tuple[int, ...]:
    if text in ("", "e", "eps"):
        return ()
    if set(text) - {"0", "1"}:
        raise ValueError(f"invalid bit string {text!r}")
    return tuple(int(ch) for ch in text)


def cmd_encode(args) -> int:
    if args.kappa < 2:
        raise ValueError("--kappa must be >= 2")
    if args.mode == "tree":
        path = _parse_bits(args.bits)
        word = treecode.alpha_star(path, args.kappa)
        print(word)
        if args.verbose:
            for t in treecode.beta_angles(path):
                print(f"# {t.numerator}/2^{t.level}")
    else:
        if args.message is None or args.n is None:
            raise ValueError("block mode needs --message and --n")
        word = blockcode.block_encode(args.message, n=args.n, c=args.c, kappa=args.kappa)
        print(word)
        if args.verbose:
            mod = 1 << args.n
            r = args.message
            for _ in range(args.c * args.n):
                print(f"# {r}/2^{args.n}")
                r = 3 * r % mod
    return 0


def cmd_scan_conj1(args) -> int:
    scan = blockcode.conj1_scan(args.n, args.c)
    print(f"n={scan.n} c={scan.c} max={scan.max_value:.8f} argmax={scan.argmax}")
    if args.histogram:
        with open(args.histogram, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["bin_lo", "bin_hi", "count"])
            for lo, hi, count in scan.histogram_rows():
                w.writerow([f"{lo:.2f}", f"{hi:.2f}", count])
    return 0


def cmd_base32(args) -> int:
    out, close = _open_out(args.output)
    try:
        w = csv.writer(out, lineterminator="\n")
        if args.mode == "trajectory":
            if not 1 <= args.ell <= base32.ENUM_MAX_ELL:
                raise ValueError(f"trajectory mode needs 1 <= ell <= {base32.ENUM_MAX_ELL}")
            w.writerow(["z", "coeffs", "nonzero_count", "eq7_holds"])
            for z in range(1, 1 << args.ell, 2):
                coeffs = base32.trajectory_coeffs(OddResidue(z, args.ell))
                holds, _ = base32.verify_eq7(coeffs)
                w.writerow([z, str(coeffs), coeffs.nonzero, str(holds).lower()])
        else:
            count, witness = base32.min_nonzero_fraction(args.ell)
            w.writerow(["ell", "min_nonzero", "witness"])
            w.writerow([args.ell, count, str(witness)])
    finally:
        if close:
            out.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="treecodes", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="branch-and-bound table of 1 - delta_l")
    v.add_argument("--ell-max", type=int, required=True)
    v.add_argument("--workers", type=int, default=verifier.default_workers())
    v.add_argument("--no-symmetry", action="store_true", help="search both halves of the tree")
    v.add_argument("--no-prune", action="store_true")
    v.add_argument("-o", "--output", help="CSV path (default stdout)")
    v.set_defaults(func=cmd_verify)

    pl = sub.add_parser("plotdata", help="two-column data and SVG chart from a 1 - delta table")
    pl.add_argument("input", nargs="?")
    pl.add_argument("--reference", action="store_true", help="use the bundled reference table")
    pl.add_argument("-o", "--output", required=True, help="output prefix; writes .dat and .svg")
    pl.set_defaults(func=cmd_plotdata)

    e = sub.add_parser("encode", help="encode a tree path or a block message")
    e.add_argument("--mode", choices=["tree", "block"], default="tree")
    e.add_argument("--bits", default="", help="path bits from the root, e.g. 0110")
    e.add_argument("--message", type=int)
    e.add_argument("--n", type=int)
    e.add_argument("--c", type=int, default=2)
    e.add_argument("--kappa", type=int, required=True)
    e.add_argument("-v", "--verbose", action="store_true", help="also print the exact angles")
    e.set_defaults(func=cmd_encode)

    s = sub.add_parser("scan-conj1", help="block-code exponential sums over all nonzero m")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--c", type=int, default=2)
    s.add_argument("--histogram", help="write bin_lo,bin_hi,count CSV here")
    s.set_defaults(func=cmd_scan_conj1)

    b = sub.add_parser("base32", help="base-3/2 trajectories and sparse expansions")
    b.add_argument("--ell", type=int, required=True)
    b.add_argument("--mode", choices=["trajectory", "search"], default="trajectory")
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_base32)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except base32.TrajectoryError as exc:
        print(f"treecodes: invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ValueError, OSError) as exc:
        print(f"treecodes: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
