"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 parse or configuration
error, 3 validity budget exhausted, 4 strict integrality failure.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from fractions import Fraction

from .errors import (DimensionMismatch, NotSuperRigidShape, ParseError, ResourceLimit,
                     StrictIntegrality, ValidityExhausted)
from .fano import FanoBPS, FanoSeries, fano_bps_from_gw, fano_gw_from_bps
from .gv import BPSTable, bps_from_gw, gw_from_bps
from .lattice import LatticeConfig
from .localcurves import g_series, local_bps
from .qseries import QSeries
from .structure import extract_e, series_from_e
from .tableio import dumps, gen_bps_table, loads
from .verify import run_all

EXIT_OK, EXIT_MISMATCH, EXIT_CONFIG, EXIT_VALIDITY, EXIT_STRICT = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_CONFIG):
        super().__init__(message)
        self.code = code


def rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def even_int(text: str) -> int:
    v = int(text)
    if v % 2:
        raise argparse.ArgumentTypeError(f"t-order must be even, got {v}")
    return v


def read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def write_output(path: str, text: str):
    if path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".gvseries-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _flag_config(args) -> LatticeConfig | None:
    fields = (args.rank, args.mass, args.mass_cap, args.t_order)
    if all(f is None for f in fields):
        return None
    if any(f is None for f in fields):
        raise CliError("--rank, --mass, --mass-cap and --t-order must be given together")
    return LatticeConfig(args.rank, tuple(args.mass), args.mass_cap, args.t_order)


def _check_header(args, cfg: LatticeConfig):
    """Flags that are given must agree with the file header."""
    for name, have in (("rank", cfg.rank), ("mass_cap", cfg.mass_cap), ("t_order", cfg.t_order)):
        want = getattr(args, name, None)
        if want is not None and want != have:
            raise DimensionMismatch(f"--{name.replace('_', '-')} {want} disagrees with file "
                                    f"header value {have}")
    if getattr(args, "mass", None) is not None and tuple(args.mass) != cfg.mass_vector:
        raise DimensionMismatch("--mass disagrees with the file header")


def _load(args, expect: str):
    value = loads(read_input(args.input), expect=expect)
    if isinstance(value, (QSeries, BPSTable)):
        _check_header(args, value.config)
    return value


def _report(table, label: str):
    err = sys.stderr
    print(f"# {label}: integrality {'ok' if table.integrality_ok else 'FAILED'}; "
          f"genus window {table.genus_window}", file=err)
    for A, g0 in table.observed_genus_cutoffs.items():
        where = "inside window" if g0 <= table.genus_window else "at window edge"
        print(f"# class {A}: observed genus cutoff {g0} ({where})", file=err)


def cmd_gh_series(args):
    s = g_series(args.h, args.dmax, args.t_order)
    write_output(args.output, dumps(s))


def cmd_bps_from_gw(args):
    s = _load(args, "GW")
    table = bps_from_gw(s, strict=args.strict)
    if args.report:
        _report(table, "bps-from-gw")
    write_output(args.output, dumps(table))


def cmd_gw_from_bps(args):
    table = _load(args, "BPS")
    write_output(args.output, dumps(gw_from_bps(table)))


def cmd_extract_e(args):
    s = _load(args, "GW")
    e = extract_e(s, strict=args.strict)
    if args.report:
        _report(e, "extract-e")
    write_output(args.output, dumps(e))


def cmd_series_from_e(args):
    e = _load(args, "E")
    write_output(args.output, dumps(series_from_e(e)))


def cmd_fano_bps(args):
    f: FanoSeries = loads(read_input(args.input), expect="FANO")
    if args.c1 is not None and args.c1 != f.c1:
        raise DimensionMismatch(f"--c1 {args.c1} disagrees with file value {f.c1}")
    bps = fano_bps_from_gw(f)
    if args.strict:
        for g, c in bps.items():
            if c.denominator != 1:
                raise StrictIntegrality(f"Fano BPS in genus {g} is {c}", g, c)
    write_output(args.output, dumps(FanoBPS(f.c1, bps, f.window)))


def cmd_fano_gw(args):
    b: FanoBPS = loads(read_input(args.input), expect="FANO-BPS")
    if args.c1 is not None and args.c1 != b.c1:
        raise DimensionMismatch(f"--c1 {args.c1} disagrees with file value {b.c1}")
    T = args.t_order if args.t_order is not None else 2 * b.window - 2
    gw = fano_gw_from_bps(b.c1, b.bps_coeffs, T)
    write_output(args.output, dumps(FanoSeries(b.c1, gw, (T + 2) // 2)))


def default_audit_order(h: int, d_max: int) -> int:
    # window reaching past the total hook weight d(d+1)/2 of the one-row diagram
    return 2 * (max(h - 1, 0) * d_max * (d_max + 1) // 2 + 1) + 4


def cmd_audit(args):
    T = args.t_order if args.t_order is not None else default_audit_order(args.h, args.dmax)
    L = local_bps(args.h, args.dmax, T)
    out = [f"# audit h={L.h} d_max={args.dmax} t_order={T} genus_window={L.genus_window}"]
    for d in range(1, args.dmax + 1):
        nonzero = {g: c for (dd, g), c in L.entries.items() if dd == d}
        g0 = L.observed_genus_cutoffs.get(d, 0)
        body = " ".join(f"g={g}:{c}" for g, c in sorted(nonzero.items())) or "all zero"
        inside = "inside" if g0 <= L.genus_window else "NOT inside"
        out.append(f"d={d} cutoff={g0} ({inside} window) nonzero: {body}")
    for (d, g), c in L.entries.items():
        out.append(f"BPS_{{{d},{g}}}({L.h}) = {c}")
    out.append("all other in-window entries: 0")
    out.append(f"integrality: {'ok' if L.integrality_ok else 'FAILED'}")
    finite = all(g0 <= L.genus_window for g0 in L.observed_genus_cutoffs.values())
    out.append(f"finiteness: {'every cutoff inside window' if finite else 'not certified in window'}")
    write_output(args.output, "\n".join(out) + "\n")
    if not L.integrality_ok:
        return EXIT_STRICT
    return EXIT_OK


def cmd_verify(args):
    results = run_all(args.seed, args.count)
    lines = []
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        extra = f" first failure: {r.first_failure}" if r.first_failure else ""
        lines.append(f"{status} {r.name}: {r.passed} passed, {r.failed} failed{extra}")
    write_output(args.output, "\n".join(lines) + "\n")
    return EXIT_OK if all(r.ok for r in results) else EXIT_MISMATCH


def cmd_gen_bps(args):
    cfg = _flag_config(args)
    if cfg is None:
        raise CliError("gen-bps needs --rank, --mass, --mass-cap and --t-order")
    table = gen_bps_table(args.seed, cfg, args.density, args.genus_max)
    write_output(args.output, dumps(table))


def _io_flags(p, lattice: bool = True):
    p.add_argument("--input", "-i", default="-", help="input file, '-' for stdin")
    p.add_argument("--output", "-o", default="-", help="output file, '-' for stdout")
    if lattice:
        p.add_argument("--rank", type=int)
        p.add_argument("--mass", type=rational, nargs="+")
        p.add_argument("--mass-cap", type=rational)
        p.add_argument("--t-order", type=even_int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gvseries", description=(
        "Exact conversions between Gromov-Witten series, BPS invariants and "
        "local-curve expansions."))
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gh-series", help="print the local-curve series G_h as a rank-1 GW table")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--t-order", type=even_int, required=True)
    p.add_argument("--output", "-o", default="-")
    p.set_defaults(func=cmd_gh_series)

    for name, func, doc in (
        ("bps-from-gw", cmd_bps_from_gw, "recover BPS invariants from a GW table"),
        ("extract-e", cmd_extract_e, "expand a GW table in the G_g(q^A) basis"),
    ):
        p = sub.add_parser(name, help=doc)
        _io_flags(p)
        p.add_argument("--strict", action="store_true",
                       help="fail with exit code 4 on a non-integral coefficient")
        p.add_argument("--report", action="store_true",
                       help="write integrality and observed genus cutoffs to stderr")
        p.set_defaults(func=func)

    for name, func, doc in (
        ("gw-from-bps", cmd_gw_from_bps, "synthesize a GW table from BPS invariants"),
        ("series-from-e", cmd_series_from_e, "synthesize a GW table from e-coefficients"),
    ):
        p = sub.add_parser(name, help=doc)
        _io_flags(p)
        p.set_defaults(func=func)

    p = sub.add_parser("fano-bps", help="Fano-class transform from GW to BPS coefficients")
    _io_flags(p, lattice=False)
    p.add_argument("--c1", type=int)
    p.add_argument("--strict", action="store_true")
    p.set_defaults(func=cmd_fano_bps)

    p = sub.add_parser("fano-gw", help="Fano-class transform from BPS to GW coefficients")
    _io_flags(p, lattice=False)
    p.add_argument("--c1", type=int)
    p.add_argument("--t-order", type=even_int)
    p.set_defaults(func=cmd_fano_gw)

    p = sub.add_parser("audit", help="integrality/finiteness report for the local BPS numbers")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--t-order", type=even_int)
    p.add_argument("--output", "-o", default="-")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("verify", help="seeded round-trip checks of every transform")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--output", "-o", default="-")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen-bps", help="write a seeded random integer BPS table")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("--genus-max", type=int, default=2)
    p.add_argument("--output", "-o", default="-")
    p.add_argument("--rank", type=int)
    p.add_argument("--mass", type=rational, nargs="+")
    p.add_argument("--mass-cap", type=rational)
    p.add_argument("--t-order", type=even_int)
    p.set_defaults(func=cmd_gen_bps)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    try:
        return args.func(args) or EXIT_OK
    except (ParseError, DimensionMismatch, NotSuperRigidShape, ResourceLimit) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ValidityExhausted as exc:
        print(f"validity budget exhausted: {exc}", file=sys.stderr)
        return EXIT_VALIDITY
    except StrictIntegrality as exc:
        print(f"strict integrality: {exc}", file=sys.stderr)
        return EXIT_STRICT
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
