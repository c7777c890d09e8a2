"""Command-line front end.

Subcommands:
  seq     table of sequence values (k, n, M, m) as CSV
  oct     octonion sequence coordinates as CSV
  verify  run the identity grid; exit 0 iff no check FAILs
  bench   time the naive vs logarithmic sequence evaluators

All numbers are exact decimal integers or fraction strings; no
scientific notation.  Exit codes: 0 success, 1 an identity check
failed (or a bench cross-check mismatch), 2 usage or I/O error, so CI
can tell a violated identity from a broken environment.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time

from . import __version__
from .octonion import corrupted_basis_table
from .oct_sequences import oct_seq
from .sequences import Family, seq_fast, seq_value
from .verify import ConfigError, GridConfig, run_grid

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

_FAMILIES = {
    "mersenne": (Family.MERSENNE,),
    "mersenne-lucas": (Family.MERSENNE_LUCAS,),
    "both": (Family.MERSENNE, Family.MERSENNE_LUCAS),
}


def _parse_range(spec: str, what: str, lo: int) -> range:
    """Parse 'A..B' or a single integer into an inclusive range."""
    try:
        if ".." in spec:
            a, b = spec.split("..", 1)
            start, stop = int(a), int(b)
        else:
            start = stop = int(spec)
    except ValueError:
        raise SystemExit2(f"invalid {what} range: {spec!r}")
    if start < lo or stop < start:
        raise SystemExit2(f"empty or out-of-bounds {what} range: {spec!r}")
    return range(start, stop + 1)


class SystemExit2(SystemExit):
    def __init__(self, message: str):
        print(f"error: {message}", file=sys.stderr)
        super().__init__(EXIT_USAGE)


def _open_out(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    try:
        return open(path, "w", newline=""), True
    except OSError as exc:
        raise SystemExit2(f"cannot open output: {exc}")


def cmd_seq(args) -> int:
    ks = _parse_range(args.k, "k", 1)
    ns = _parse_range(args.n, "n", 0)
    out, close = _open_out(args.output)
    try:
        w = csv.writer(out)
        w.writerow(["k", "n", "mersenne", "mersenne_lucas"])
        for k in ks:
            for n in ns:
                w.writerow([
                    k, n,
                    seq_value(Family.MERSENNE, k, n),
                    seq_value(Family.MERSENNE_LUCAS, k, n),
                ])
    finally:
        if close:
            out.close()
    return EXIT_OK


def cmd_oct(args) -> int:
    ks = _parse_range(args.k, "k", 1)
    ns = _parse_range(args.n, "n", 0)
    out, close = _open_out(args.output)
    try:
        w = csv.writer(out)
        w.writerow(["family", "k", "n"] + [f"e{r}" for r in range(8)])
        for family in _FAMILIES[args.family]:
            for k in ks:
                for n in ns:
                    w.writerow([family.value, k, n, *oct_seq(family, k, n).coords])
    finally:
        if close:
            out.close()
    return EXIT_OK


def cmd_verify(args) -> int:
    ks = _parse_range(args.k, "k", 1)
    ns = _parse_range(args.n, "n", 0)
    identities = tuple(args.identities.split(",")) if args.identities else None
    n_max = max(ns)
    cfg_kwargs = dict(
        ks=tuple(ks),
        n_max=n_max,
        specialized_n_max=min(20, n_max) if n_max >= 1 else 1,
        ij_max=args.ij_max,
        families=_FAMILIES[args.family],
        include_specialized=not args.no_specialized,
    )
    if identities:
        cfg_kwargs["identities"] = identities
    try:
        cfg = GridConfig(**cfg_kwargs)
        if args.corrupt_table:
            with corrupted_basis_table():
                report = run_grid(cfg)
        else:
            report = run_grid(cfg)
    except ConfigError as exc:
        raise SystemExit2(str(exc))
    out, close = _open_out(args.output)
    try:
        if args.format == "json":
            out.write(report.to_json())
        else:
            out.write(report.summary_table())
    finally:
        if close:
            out.close()
    return EXIT_CHECK_FAILED if report.failed else EXIT_OK


def cmd_bench(args) -> int:
    ks = _parse_range(args.k, "k", 1)
    ns = [int(x) for x in args.n_values.split(",")]
    if any(n < 0 for n in ns):
        raise SystemExit2("bench n values must be nonnegative")
    out, close = _open_out(args.output)
    try:
        w = csv.writer(out)
        w.writerow(["k", "n", "method", "nanoseconds", "digits"])
        for k in ks:
            for n in ns:
                timings = {}
                values = {}
                for name, fn in (("recurrence", seq_value), ("matrix_power", seq_fast)):
                    best = None
                    for _ in range(args.repeat):
                        t0 = time.perf_counter_ns()
                        v = fn(Family.MERSENNE, k, n)
                        dt = time.perf_counter_ns() - t0
                        best = dt if best is None else min(best, dt)
                    timings[name], values[name] = best, v
                if values["recurrence"] != values["matrix_power"]:
                    print(
                        f"error: evaluator mismatch at k={k}, n={n}",
                        file=sys.stderr,
                    )
                    return EXIT_CHECK_FAILED
                digits = len(str(abs(values["recurrence"]))) if values["recurrence"] else 1
                for name in ("recurrence", "matrix_power"):
                    w.writerow([k, n, name, timings[name], digits])
    finally:
        if close:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="mersoct",
        description="Exact k-Mersenne / k-Mersenne-Lucas octonion toolkit.",
    )
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, k_default="1..3"):
        sp.add_argument("--k", default=k_default, help="k range, e.g. 2 or 1..5")
        sp.add_argument("--output", "-o", default=None,
                        help="output file (default: stdout)")

    sp = sub.add_parser("seq", help="sequence value table (CSV)")
    common(sp)
    sp.add_argument("--n", default="0..16", help="n range, e.g. 0..24")
    sp.set_defaults(fn=cmd_seq)

    sp = sub.add_parser("oct", help="octonion sequence coordinates (CSV)")
    common(sp)
    sp.add_argument("--n", default="0..8", help="n range")
    sp.add_argument("--family", choices=sorted(_FAMILIES), default="both")
    sp.set_defaults(fn=cmd_oct)

    sp = sub.add_parser("verify", help="run the identity verification grid")
    common(sp, k_default="1..5")
    sp.add_argument("--n", default="0..24", help="n range (n_max is used)")
    sp.add_argument("--ij-max", type=int, default=8)
    sp.add_argument("--family", choices=sorted(_FAMILIES), default="both")
    sp.add_argument("--identities", default=None,
                    help="comma-separated subset, e.g. catalan,cassini")
    sp.add_argument("--no-specialized", action="store_true",
                    help="skip the k=1 specialized forms")
    sp.add_argument("--format", choices=("table", "json"), default="table")
    sp.add_argument("--corrupt-table", action="store_true",
                    help=argparse.SUPPRESS)  # mutation test hook
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("bench", help="time the sequence evaluators")
    common(sp)
    sp.add_argument("--n-values", default="1000,10000",
                    help="comma-separated n values")
    sp.add_argument("--repeat", type=int, default=3)
    sp.set_defaults(fn=cmd_bench)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except SystemExit2 as exc:
        return exc.code
    except BrokenPipeError:
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
