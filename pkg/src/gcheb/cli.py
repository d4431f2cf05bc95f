"""Command-line front end: ``gcheb <command> [options]``.

Every command writes a table, either CSV (header row, round-trip float
formatting, complex values split into ``<name>_re`` / ``<name>_im``) or
JSON Lines (one object per row, complex values as ``{"re": .., "im": ..}``).

Exit status: 0 success, 2 invalid input, 3 numerical failure (pole,
singular energy, quadrature budget), 4 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Iterable

import numpy as np

from gcheb import genchebyshev as gc
from gcheb import jost, oracle, pointres, scattering, spectral, verify
from gcheb.branch import EnergyPoint
from gcheb.errors import DomainError

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC, EXIT_VERIFY = 0, 2, 3, 4


class UsageError(DomainError):
    pass


# --- formatting ----------------------------------------------------------------


def _num(x) -> str:
    return repr(float(x))


def _flatten(row: dict) -> dict:
    out = {}
    for k, v in row.items():
        if isinstance(v, (complex, np.complexfloating)):
            out[f"{k}_re"] = _num(v.real)
            out[f"{k}_im"] = _num(v.imag)
        elif isinstance(v, (float, np.floating)):
            out[k] = _num(v)
        elif isinstance(v, (bool, np.bool_)):
            out[k] = "true" if v else "false"
        else:
            out[k] = str(v)
    return out


def _jsonable(v):
    if isinstance(v, (complex, np.complexfloating)):
        return {"re": float(v.real), "im": float(v.imag)}
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        return float(v) if np.isfinite(v) else None
    return v


def render(rows: Iterable[dict], fmt: str) -> str:
    rows = list(rows)
    buf = io.StringIO()
    if fmt == "json":
        for row in rows:
            buf.write(json.dumps({k: _jsonable(v) for k, v in row.items()}) + "\n")
        return buf.getvalue()
    flat = [_flatten(r) for r in rows]
    header: list = []
    for r in flat:
        header += [k for k in r if k not in header]
    w = csv.DictWriter(buf, fieldnames=header, lineterminator="\n", restval="")
    w.writeheader()
    w.writerows(flat)
    return buf.getvalue()


# --- argument helpers ------------------------------------------------------------


def _positive_a(args) -> float:
    if args.a is None:
        raise UsageError("--a is required")
    if not (np.isfinite(args.a) and args.a > 0):
        raise UsageError("--a must be a positive number")
    return float(args.a)


def _z(args) -> complex:
    if args.z is not None and (args.z_re is not None or args.z_im is not None):
        raise UsageError("give either --z or --z-re/--z-im, not both")
    re = args.z if args.z is not None else args.z_re
    if re is None:
        raise UsageError("--z or --z-re is required")
    im = args.z_im or 0.0
    if not (np.isfinite(re) and np.isfinite(im)):
        raise UsageError("z must be finite")
    return complex(re, im)


def parse_grid(text: str | None, default_count: int = 101, open_band: bool = True) -> np.ndarray:
    """Grid from "count" (interior of (-1, 1)) or "start:stop:count"."""
    text = text or str(default_count)
    parts = text.split(":")
    try:
        if len(parts) == 1:
            count = int(parts[0])
            start = stop = None
        elif len(parts) == 3:
            start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
        else:
            raise ValueError
    except ValueError:
        raise UsageError(f"grid must be 'count' or 'start:stop:count', got {text!r}") from None
    if count < 1:
        raise UsageError("grid count must be positive")
    if start is None:
        grid = -1.0 + 2.0 * np.arange(1, count + 1) / (count + 1)
    else:
        grid = np.linspace(start, stop, count)
    if open_band and np.any(np.abs(grid) >= 1.0):
        raise UsageError("grid points must satisfy |lambda| < 1")
    return grid


def _nonneg(value, name) -> int:
    if value is None:
        raise UsageError(f"--{name} is required")
    if value < 0:
        raise UsageError(f"--{name} must be non-negative")
    return int(value)


def _float_list(text: str, name: str) -> list:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--{name} must be a comma-separated list of numbers") from None


# --- commands ------------------------------------------------------------------


def cmd_poly(args):
    a = _positive_a(args)
    z = _z(args)
    n_max = _nonneg(args.nmax, "nmax")
    vals = gc.eval_recurrence(gc.CouplingParams(a, args.b), z, n_max).values
    return [{"n": k, "re": float(np.real(v)), "im": float(np.imag(v))} for k, v in enumerate(vals)]


def cmd_resolvent(args):
    a = _positive_a(args)
    pt = EnergyPoint.at(_z(args))
    if args.nmax is not None:
        pairs = [(n, m) for n in range(_nonneg(args.nmax, "nmax") + 1) for m in range(args.nmax + 1)]
    else:
        pairs = [(_nonneg(args.n, "n"), _nonneg(args.m, "m"))]
    rows = []
    for n, m in pairs:
        v = complex(pointres.resolvent_entry(a, n, m, pt))
        rows.append({"n": n, "m": m, "z_re": pt.z.real, "z_im": pt.z.imag, "re": v.real, "im": v.imag})
    return rows


def cmd_measure(args):
    a = _positive_a(args)
    grid = parse_grid(args.grid)
    rows = [{"kind": "density", "lambda": x, "value": d} for x, d in zip(grid, spectral.density(a, grid))]
    rows += [{"kind": "atom", "lambda": x, "value": w} for x, w in spectral.atoms(a)]
    return rows


def cmd_scatter(args):
    a = _positive_a(args)
    rows = []
    for x in parse_grid(args.grid):
        r = scattering.scattering_record(a, x)
        rows.append(
            {
                "lambda": r.lam,
                "s": r.s_value,
                "xi": r.xi,
                "sigma_plus": r.sigma_plus,
                "sigma_minus": r.sigma_minus,
                "det_plus": r.det_plus,
            }
        )
    return rows


def cmd_ssf(args):
    a = _positive_a(args)
    grid = parse_grid(args.grid, open_band=False)
    rows = []
    for x in grid:
        row = {"lambda": x, "xi_closed": float(scattering.ssf_closed(a, x))}
        if args.tracked:
            # tracking is undefined at the jump points; keep the row, mark the gap
            try:
                row["xi_tracked"] = float(scattering.ssf_arg_tracked(a, x))
            except DomainError:
                row["xi_tracked"] = float("nan")
        rows.append(row)
    return rows


def cmd_moments(args):
    a = _positive_a(args)
    k = spectral.moment_coeffs(a, _nonneg(args.nmax, "nmax"))
    return [{"n": n, "moment": v} for n, v in enumerate(k)]


def cmd_trace(args):
    a = _positive_a(args)
    k = spectral.trace_coeffs(a, _nonneg(args.nmax, "nmax"))
    return [{"n": n, "trace_difference": v} for n, v in enumerate(k)]


def _coeffs_from_args(args) -> jost.JacobiCoeffs:
    if args.a_seq is not None or args.b_seq is not None:
        a_seq = _float_list(args.a_seq or "", "a-seq")
        b_seq = _float_list(args.b_seq or "", "b-seq")
        return jost.JacobiCoeffs(tuple(a_seq), tuple(b_seq))
    return jost.JacobiCoeffs.from_coupling(gc.CouplingParams(_positive_a(args), args.b))


def cmd_jost(args):
    coeffs = _coeffs_from_args(args)
    if args.z is not None or args.z_re is not None:
        pt = EnergyPoint.at(_z(args))
        u = jost.jost_solution(coeffs, pt, n_min=-1)
        rows = [{"n": k - 1, "u": complex(v)} for k, v in enumerate(u)]
        rows.append({"n": "det", "u": complex(jost.pert_det_general(coeffs, pt))})
        return rows
    c = jost.det_polynomial(coeffs).coeffs
    return [{"k": k, "coeff": complex(v)} for k, v in enumerate(c)]


def cmd_recover(args):
    if args.coeffs is None:
        raise UsageError("--coeffs is required")
    L = np.array(_float_list(args.coeffs, "coeffs"))
    if len(L) <= 3:
        out = jost.recover_rank1(L)
    elif len(L) <= 5:
        out = jost.recover_rank2(L)
    else:
        raise UsageError("recovery is available for polynomials of degree <= 4")
    rows = [{"kind": "a", "index": k, "value": v} for k, v in enumerate(out.a_seq)]
    rows += [{"kind": "b", "index": k, "value": v} for k, v in enumerate(out.b_seq)]
    return rows


def cmd_resonances(args):
    a = _positive_a(args)
    return [{"re": p.real, "im": p.imag} for p in spectral.resonances(a)]


def _suites(text: str) -> list:
    if text in (None, "all"):
        return sorted(verify.SUITES)
    out = []
    for tok in text.split(","):
        tok = tok.strip().lstrip("c")
        if not tok.isdigit() or int(tok) not in verify.SUITES:
            raise UsageError(f"unknown suite {tok!r}; choose from 1..{max(verify.SUITES)} or 'all'")
        out.append(int(tok))
    return out


def cmd_verify(args):
    truncation = args.truncation or oracle.DEFAULT_SIZE
    if truncation < 2048:
        raise UsageError("--truncation must be at least 2048")
    results = verify.run_all(truncation, _suites(args.suite))
    rows = [
        {"criterion": r.criterion, "title": r.title, "passed": r.passed, "elapsed": round(r.elapsed, 3)}
        for r in results
    ]
    return rows, all(r.passed for r in results), results


COMMANDS = {
    "poly": (cmd_poly, "generalized Chebyshev polynomials Ch_0..Ch_nmax at z"),
    "resolvent": (cmd_resolvent, "resolvent matrix entries of H_a"),
    "measure": (cmd_measure, "spectral density on a grid plus atoms"),
    "scatter": (cmd_scatter, "scattering matrix, sigma multipliers and D(lam + i0)"),
    "ssf": (cmd_ssf, "spectral shift function"),
    "moments": (cmd_moments, "moments of the spectral measure"),
    "trace": (cmd_trace, "Tr(H_a^n - H_1^n)"),
    "jost": (cmd_jost, "determinant polynomial or Jost solution"),
    "recover": (cmd_recover, "Jacobi coefficients from a determinant polynomial"),
    "resonances": (cmd_resonances, "second-sheet zeros of the determinant"),
    "verify": (cmd_verify, "run oracle-agreement suites"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gcheb", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        p = sub.add_parser(name, help=help_)
        p.add_argument("--a", type=float)
        p.add_argument("--b", type=float, default=0.0)
        p.add_argument("--n", type=int)
        p.add_argument("--m", type=int)
        p.add_argument("--nmax", type=int)
        p.add_argument("--z", type=float, help="real z (shorthand for --z-re)")
        p.add_argument("--z-re", dest="z_re", type=float)
        p.add_argument("--z-im", dest="z_im", type=float)
        p.add_argument("--grid", help="'count' or 'start:stop:count'")
        p.add_argument("--truncation", type=int)
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--output", help="write to this path instead of stdout")
        if name == "ssf":
            p.add_argument("--tracked", action="store_true", help="add the argument-tracking column")
        if name == "jost":
            p.add_argument("--a-seq", dest="a_seq", help="comma-separated a_0..a_{N-1}")
            p.add_argument("--b-seq", dest="b_seq", help="comma-separated b_0..b_{N-1}")
        if name == "recover":
            p.add_argument("--coeffs", help="comma-separated l_0..l_{2N}")
        if name == "verify":
            p.add_argument("--suite", default="all", help="'all' or comma-separated criterion numbers")
    return parser


def _thread_limit():
    raw = os.environ.get("GCHEB_THREADS")
    if raw is None:
        return None
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n < 1:
        raise UsageError("GCHEB_THREADS must be a positive integer")
    return n


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run(args) -> int:
    fn = COMMANDS[args.command][0]
    if args.command == "verify":
        rows, ok, results = fn(args)
        for r in results:
            print(r.summary(), file=sys.stderr)
        _emit(render(rows, args.format), args.output)
        return EXIT_OK if ok else EXIT_VERIFY
    _emit(render(fn(args), args.format), args.output)
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        threads = _thread_limit()
        if threads is None:
            return _run(args)
        from threadpoolctl import threadpool_limits

        with threadpool_limits(limits=threads):
            return _run(args)
    except ValueError as exc:
        print(f"gcheb {args.command}: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ArithmeticError as exc:
        print(f"gcheb {args.command}: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
