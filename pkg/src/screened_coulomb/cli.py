"""Command-line front end: spectra, reference tables, sweeps, and HFT checks as CSV.

Subcommands: spectrum, sweep, hft-check, table1, table2, asymptote.

Output is RFC-4180-style CSV (UTF-8, LF line endings, '.' decimal point,
header row always present) and is byte-for-byte deterministic for fixed flags.
Diagnostics go to stderr, never to the CSV stream.

Exit codes: 0 success; 1 bad flags; 2 solver/configuration error;
3 --assert-monotone violation; 4 --assert / --check failure.
The SPECTRA_THREADS environment variable caps sweep parallelism (0 = auto).
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import reference_tables as ref
from .analytic import harmonic_energy, k1_energy, scaled_energy
from .hft import check_hft_scaled, check_hft_unscaled, expectation
from .potentials import RadialProblem
from .solver import (
    EigenSolverError,
    SolverConfig,
    UnboundedPotentialError,
    solve,
)

EXIT_OK = 0
EXIT_BAD_FLAGS = 1
EXIT_SOLVER_ERROR = 2
EXIT_MONOTONE_FAIL = 3
EXIT_ASSERT_FAIL = 4


@dataclass(frozen=True)
class SweepRecord:
    C: float
    n: int
    l: int
    E_numeric: float | None
    E_k1: float
    E_harmonic: float | None
    c2e: float | None
    ce: float | None
    dEdC_expect: float | None


def _fmt(value, precision: int) -> str:
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return f"{float(value):.{precision}g}"


def _emit(header, rows, out_path, precision):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([v if isinstance(v, str) else _fmt(v, precision) for v in row])
    text = buf.getvalue()
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _thread_count(n_jobs: int) -> int:
    raw = os.environ.get("SPECTRA_THREADS", "0")
    try:
        cap = int(raw)
    except ValueError:
        cap = 0
    if cap <= 0:
        cap = os.cpu_count() or 1
    return max(1, min(cap, n_jobs))


def _solver_config(args, k_states: int) -> SolverConfig:
    return SolverConfig(
        k_states=k_states,
        n_points=args.n_points,
        richardson=not args.no_richardson,
        scaled_threshold=args.scaled_threshold,
    )


def cmd_spectrum(args) -> int:
    problem = RadialProblem(args.l, args.C)
    spectrum = solve(problem, _solver_config(args, args.states))
    rows = [
        (i, s.energy, s.nodes, s.converged, s.richardson_estimate)
        for i, s in enumerate(spectrum.states)
    ]
    _emit(["index", "E", "nodes", "converged", "richardson_estimate"],
          rows, args.out, args.precision)
    return EXIT_OK


def cmd_table1(args) -> int:
    rows = []
    for nu, ref_row in enumerate(ref.K1_TABLE):
        cells = [str(nu)]
        for l in range(4):
            value = k1_energy(nu + l + 1, l, ref.K1_TABLE_C).value
            cells.append(ref.format_sig(value, ref.sig_figs(ref_row[l])))
        rows.append(cells)
    _emit(["nu", "l=0", "l=1", "l=2", "l=3"], rows, args.out, args.precision)
    if args.check:
        mismatches = ref.check_k1_table()
        for nu, l, expected, got in mismatches:
            print(f"table1 mismatch at nu={nu}, l={l}: expected {expected}, got {got}",
                  file=sys.stderr)
        if mismatches:
            return EXIT_ASSERT_FAIL
    return EXIT_OK


def cmd_table2(args) -> int:
    rows = []
    for C, ref_row in ref.HARMONIC_TABLE:
        cells = [f"{C:g}"]
        for nu in range(3):
            mant, _ = ref.parse_mantissa_exponent(ref_row[nu])
            value = harmonic_energy(nu, C).value
            cells.append(ref.format_mantissa_exponent(value, ref.sig_figs(mant)))
        rows.append(cells)
    _emit(["C", "nu=0", "nu=1", "nu=2"], rows, args.out, args.precision)
    if args.check:
        mismatches = ref.check_harmonic_table()
        for C, nu, expected, got in mismatches:
            print(f"table2 mismatch at C={C:g}, nu={nu}: expected {expected}, got {got}",
                  file=sys.stderr)
        if mismatches:
            return EXIT_ASSERT_FAIL
    return EXIT_OK


def _sweep_point(l: int, n: int, C: float, args) -> SweepRecord:
    nu = n - l - 1
    problem = RadialProblem(l, C)
    spectrum = solve(problem, _solver_config(args, nu + 1))
    e_numeric = expect = None
    if len(spectrum.states) > nu:
        state = spectrum.states[nu]
        e_numeric = state.best_energy
        expect = expectation(
            state.psi, spectrum.grid, lambda r: np.exp(-C / r) / (r * r)
        )
    e_k1 = k1_energy(n, l, C).value
    e_harm = harmonic_energy(nu, C).value if (l == 0 and C > 0) else None
    c2e, ce = scaled_energy(e_numeric, C) if e_numeric is not None else (None, None)
    return SweepRecord(C, n, l, e_numeric, e_k1, e_harm, c2e, ce, expect)


def monotone_violations(records) -> list[str]:
    """E must rise and C^2 E must fall along a C-sorted sweep."""
    problems = []
    for prev, cur in zip(records, records[1:]):
        if prev.E_numeric is None or cur.E_numeric is None:
            problems.append(f"missing state at C={prev.C:g} or C={cur.C:g}")
            continue
        if not cur.E_numeric > prev.E_numeric:
            problems.append(f"E not increasing from C={prev.C:g} to C={cur.C:g}")
        if not cur.c2e < prev.c2e:
            problems.append(f"C^2 E not decreasing from C={prev.C:g} to C={cur.C:g}")
    return problems


def _run_sweep(args, c_values) -> int:
    if args.n < args.l + 1:
        print(f"need n >= l + 1, got n={args.n}, l={args.l}", file=sys.stderr)
        return EXIT_BAD_FLAGS
    c_values = sorted(set(c_values))
    workers = _thread_count(len(c_values))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(lambda C: _sweep_point(args.l, args.n, C, args), c_values))
    else:
        records = [_sweep_point(args.l, args.n, C, args) for C in c_values]
    rows = [
        (r.C, r.n, r.l, r.E_numeric, r.E_k1, r.E_harmonic, r.c2e, r.ce, r.dEdC_expect)
        for r in records
    ]
    _emit(
        ["C", "n", "l", "E_numeric", "E_k1", "E_harmonic", "c2e", "ce", "dEdC_expect"],
        rows, args.out, args.precision,
    )
    if args.assert_monotone:
        problems = monotone_violations(records)
        for message in problems:
            print(f"monotonicity violation: {message}", file=sys.stderr)
        if problems:
            return EXIT_MONOTONE_FAIL
    return EXIT_OK


def cmd_sweep(args) -> int:
    return _run_sweep(args, args.C_list)


def cmd_asymptote(args) -> int:
    # preset demonstrating C * E -> -1/e for the ground state at large C
    c_values = args.C_list if args.C_list else [10.0, 100.0, 1000.0, 10000.0]
    args.l = 0
    args.n = 1
    return _run_sweep(args, c_values)


def cmd_hft_check(args) -> int:
    problem = RadialProblem(args.l, args.C)
    config = SolverConfig(k_states=args.state + 1, n_points=args.n_points)
    delta_c = args.deltaC if args.deltaC is not None else 1e-4 * max(1.0, args.C)
    unscaled = check_hft_unscaled(problem, args.state, delta_c, config)
    scaled = check_hft_scaled(problem, args.state, delta_c, config)
    rows = [
        ("unscaled", args.l, args.state, args.C, delta_c,
         unscaled.dE_dC_expect, unscaled.dE_dC_fd,
         unscaled.rel_discrepancy, unscaled.grid_matched),
        ("scaled", args.l, args.state, args.C, delta_c,
         scaled.scaled_expect, scaled.scaled_fd,
         scaled.rel_discrepancy, scaled.grid_matched),
    ]
    _emit(
        ["mode", "l", "state", "C", "deltaC", "expectation",
         "finite_difference", "rel_discrepancy", "grid_matched"],
        rows, args.out, args.precision,
    )
    if args.assert_:
        bad = [r for r in (unscaled, scaled) if not r.rel_discrepancy < 1e-4]
        for report in bad:
            print(f"hft check failed: rel_discrepancy = {report.rel_discrepancy:g}",
                  file=sys.stderr)
        if bad:
            return EXIT_ASSERT_FAIL
    return EXIT_OK


def _positive_int(minimum):
    def parse(text):
        value = int(text)
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}")
        return value
    return parse


def _c_list(text):
    try:
        return [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad C list {text!r}: {exc}")


def _add_output_flags(p):
    p.add_argument("--out", default=None, help="write CSV to this file instead of stdout")
    p.add_argument("--precision", type=_positive_int(3), default=12,
                   metavar="DIGITS", help="significant digits for CSV floats (3-17)")


def _add_solver_flags(p):
    p.add_argument("--n-points", type=_positive_int(16), default=16000)
    p.add_argument("--no-richardson", action="store_true",
                   help="skip the h/2 refinement pass")
    p.add_argument("--scaled-threshold", type=float, default=10.0,
                   help="switch to rho = r/C coordinates when C >= this")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scspectra",
        description="Bound-state spectra of the screened Coulomb potential "
                    "V(r) = -exp(-C/r)/r (Hartree atomic units).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="solve for the lowest bound states")
    p.add_argument("--l", type=_positive_int(0), default=0)
    p.add_argument("--C", type=float, default=0.0)
    p.add_argument("--states", type=_positive_int(1), default=1)
    _add_solver_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("table1", help="K=1 closed-form eigenvalue table at C=0.1")
    p.add_argument("--check", action="store_true",
                   help="compare against the embedded reference table")
    _add_output_flags(p)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("table2", help="harmonic-asymptote eigenvalue table")
    p.add_argument("--check", action="store_true",
                   help="compare against the embedded reference table")
    _add_output_flags(p)
    p.set_defaults(func=cmd_table2)

    p = sub.add_parser("sweep", help="numeric/closed-form comparison over a C list")
    p.add_argument("--l", type=_positive_int(0), default=0)
    p.add_argument("--n", type=_positive_int(1), default=1,
                   help="principal quantum number of the tracked state")
    p.add_argument("--C-list", dest="C_list", type=_c_list, required=True)
    p.add_argument("--assert-monotone", action="store_true",
                   help="exit 3 unless E rises and C^2 E falls along the sweep")
    _add_solver_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("asymptote", help="ground-state sweep preset showing C*E -> -1/e")
    p.add_argument("--C-list", dest="C_list", type=_c_list, default=None)
    p.add_argument("--assert-monotone", action="store_true")
    _add_solver_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_asymptote)

    p = sub.add_parser("hft-check", help="Hellmann-Feynman derivative checks")
    p.add_argument("--l", type=_positive_int(0), default=0)
    p.add_argument("--C", type=float, required=True)
    p.add_argument("--state", type=_positive_int(0), default=0)
    p.add_argument("--deltaC", type=float, default=None)
    p.add_argument("--assert", dest="assert_", action="store_true",
                   help="exit 4 unless both discrepancies are below 1e-4")
    p.add_argument("--n-points", type=_positive_int(16), default=4000)
    _add_output_flags(p)
    p.set_defaults(func=cmd_hft_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if hasattr(args, "precision") and not 3 <= args.precision <= 17:
            parser.error("--precision must be in [3, 17]")
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_BAD_FLAGS
    try:
        return args.func(args)
    except (ValueError, UnboundedPotentialError, EigenSolverError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SOLVER_ERROR


if __name__ == "__main__":
    sys.exit(main())
