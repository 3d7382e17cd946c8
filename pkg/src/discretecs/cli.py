"""Command-line interface: ``discretecs <subcommand> ...``.

Exit codes: 0 success, 2 usage error, 3 domain error (e.g. a singular
P-function), 4 I/O error.
"""

from __future__ import annotations

import argparse
import collections
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import export, pauli
from .errors import DiscreteCSError
from .gf2n import MAX_N, build_field, iter_self_dual_bases
from .ordering import order_axis, recenter
from .quasidist import GRID_MAX_N, p_function, q_function
from .states import coherent_state, fiducial, squeezed_fiducial, superpose
from .vector import StateVector
from .verify import MAX_VERIFY_N, check_names, run_checks

EXIT_USAGE, EXIT_DOMAIN, EXIT_IO = 2, 3, 4
OUTPUT_DIR_ENV = "DISCRETECS_OUTPUT_DIR"
ALL_BASES_MAX_N = 8
RECONSTRUCT_MAX_N = 4


class UsageError(Exception):
    pass


def _poly_string(poly: int) -> str:
    terms = []
    for k in range(poly.bit_length() - 1, -1, -1):
        if poly >> k & 1:
            terms.append("1" if k == 0 else "x" if k == 1 else f"x^{k}")
    return " + ".join(terms)


def parse_state(spec: str, field, theta: float):
    """Build a state from the mini-language.

    ``fiducial | z-up | mixed | cs:<g>,<d> | xor:<p>,<q>[;<p>,<q>...] |
    squeeze:<z> | super:<spec>+<spec> | file:<path>``. Field elements are
    written ``0``, ``1`` or ``s<k>``. ``mixed`` yields a density matrix.
    """
    spec = spec.strip()
    kind, _, arg = spec.partition(":")
    try:
        if kind == "fiducial" and not arg:
            return fiducial(field, theta)
        if kind == "z-up" and not arg:
            return StateVector.basis(field, 0)
        if kind == "mixed" and not arg:
            return np.eye(field.order, dtype=complex) / field.order
        if kind == "cs":
            g, d = (field.parse(t) for t in arg.split(","))
            return coherent_state(field, (g, d), theta)
        if kind == "xor":
            psi = fiducial(field, theta)
            for pair in arg.split(";"):
                p, q = (int(t) for t in pair.split(","))
                psi = pauli.xor_gate(p, q, psi)
            return psi
        if kind == "squeeze":
            return squeezed_fiducial(field, field.parse(arg), theta)
        if kind == "super":
            parts = [parse_state(s, field, theta) for s in arg.split("+")]
            if any(not isinstance(s, StateVector) for s in parts):
                raise UsageError("superpositions need pure components")
            return superpose(*parts)
        if kind == "file":
            return StateVector.from_json(Path(arg).read_text(), field)
    except (ValueError, IndexError) as exc:
        if isinstance(exc, DiscreteCSError):
            raise
        raise UsageError(f"bad state spec {spec!r}: {exc}") from exc
    raise UsageError(f"unknown state spec {spec!r}")


def _field_from_args(args):
    poly = int(args.poly, 16) if args.poly else None
    return build_field(args.n, poly)


def _output_path(args, stem):
    if args.output:
        p = Path(args.output)
        base = os.environ.get(OUTPUT_DIR_ENV)
        return p if p.is_absolute() or not base else Path(base) / p
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base:
        return Path(base) / f"{stem}.{args.format}"
    return None


def _emit(text, path):
    if path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
        print(f"wrote {path}")


def _footer(line, args, path):
    # keep JSON on stdout machine-readable
    stream = sys.stderr if path is None and args.format == "json" else sys.stdout
    print(line, file=stream)


def _render(values, field, rows, cols, fmt, **extra):
    if fmt == "json":
        return export.grid_to_json(values, field, rows, cols, **extra)
    return export.grid_to_csv(values, field, rows, cols)


# -- subcommands --------------------------------------------------------------


def cmd_field_info(args):
    f = _field_from_args(args)
    if args.json:
        print(f.to_json())
        return 0
    print(f"n = {f.n}")
    print(f"polynomial = {_poly_string(f.poly)} (0x{f.poly:x})")
    print(f"primitive element order = {f.order - 1}")
    print("self-dual basis = " + ", ".join(f.label(b) for b in f.self_dual_basis))
    hist = collections.Counter(int(h) for h in f.h_table)
    print("h histogram = " + ", ".join(f"{k}:{hist[k]}" for k in range(f.n + 1)))
    if args.all_bases:
        if f.n > ALL_BASES_MAX_N:
            raise UsageError(f"--all-bases is limited to n <= {ALL_BASES_MAX_N}")
        bases = list(iter_self_dual_bases(f))
        print(f"all self-dual bases ({len(bases)}):")
        for b in bases:
            print("  " + ", ".join(f.label(x) for x in b))
    return 0


def cmd_qfunc(args):
    if args.n > GRID_MAX_N:
        raise UsageError(f"grids are capped at n <= {GRID_MAX_N}")
    f = _field_from_args(args)
    state = parse_state(args.state, f, args.theta)
    if isinstance(state, StateVector):
        grid = q_function(state, args.theta, descr=args.state)
    else:
        grid = q_function(state, args.theta, field=f, descr=args.state)
    rows = cols = order_axis(f, args.order)
    if args.recenter:
        g, d = (f.parse(t) for t in args.recenter.split(","))
        rows, cols = recenter(rows, g), recenter(cols, d)
    sums = {"sum_Q": grid.total(), "sum_Q2": grid.sum_squared()}
    text = _render(grid.values, f, rows, cols, args.format, state=args.state, theta=args.theta, **sums)
    path = _output_path(args, f"qfunc_n{f.n}")
    _emit(text, path)
    _footer(" ".join(f"{k}={v:.6f}" for k, v in sums.items()), args, path)
    return 0


def cmd_pfunc(args):
    if args.n > GRID_MAX_N:
        raise UsageError(f"grids are capped at n <= {GRID_MAX_N}")
    f = _field_from_args(args)
    state = parse_state(args.state, f, args.theta)
    kw = {} if isinstance(state, StateVector) else {"field": f}
    grid = p_function(state, args.theta, **kw)
    extra = {"sum_P": float(grid.values.sum())}
    if f.n <= RECONSTRUCT_MAX_N:
        rho = state if not isinstance(state, StateVector) else np.outer(
            state.amplitudes, state.amplitudes.conj()
        )
        extra["reconstruction_residual"] = float(np.max(np.abs(grid.reconstruct() - rho)))
    order = order_axis(f, args.order)
    text = _render(grid.values, f, order, order, args.format, state=args.state, theta=args.theta, **extra)
    path = _output_path(args, f"pfunc_n{f.n}")
    _emit(text, path)
    line = f"sum_P={extra['sum_P']:.6f}"
    if "reconstruction_residual" in extra:
        line += f" reconstruction_residual={extra['reconstruction_residual']:.3e}"
    _footer(line, args, path)
    return 0


def cmd_verify(args):
    if args.list:
        print("\n".join(check_names()))
        return 0
    unknown = sorted(set(args.only or ()) - set(check_names()))
    if unknown:
        raise UsageError(f"unknown check(s): {', '.join(unknown)}; see --list")
    results = run_checks(args.n, only=args.only or None, seed=args.seed)
    for r in results:
        print(r.line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


# -- parser -------------------------------------------------------------------


def _bounded_int(lo, hi):
    def parse(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
        if not lo <= v <= hi:
            raise argparse.ArgumentTypeError(f"must be in [{lo}, {hi}], got {v}")
        return v

    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="discretecs", description="Discrete coherent states for n qubits over GF(2^n)."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, max_n):
        p.add_argument("-n", type=_bounded_int(1, max_n), required=True, help="number of qubits")
        p.add_argument("--poly", help="primitive polynomial as hex bitmask, e.g. 0x25")

    def grid_opts(p):
        p.add_argument("--theta", type=float, default=math.pi / 4)
        p.add_argument("--state", default="fiducial", help="state spec (see README)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--order", choices=("h_ascending", "h_symmetric"), default="h_ascending")
        p.add_argument("-o", "--output", help=f"output file (relative to ${OUTPUT_DIR_ENV} if set)")

    p = sub.add_parser("field-info", help="print field tables and the self-dual basis")
    common(p, MAX_N)
    p.add_argument("--all-bases", action="store_true", help="list every self-dual basis")
    p.add_argument("--json", action="store_true", help="print the field as JSON")
    p.set_defaults(func=cmd_field_info)

    p = sub.add_parser("qfunc", help="evaluate and export the Q-function")
    common(p, MAX_N)
    grid_opts(p)
    p.add_argument("--recenter", metavar="G,D", help="recentre rows by G and columns by D")
    p.set_defaults(func=cmd_qfunc)

    p = sub.add_parser("pfunc", help="evaluate and export the P-function")
    common(p, MAX_N)
    grid_opts(p)
    p.set_defaults(func=cmd_pfunc)

    p = sub.add_parser("verify", help="run the identity checks")
    p.add_argument("-n", type=_bounded_int(1, MAX_VERIFY_N), default=5, help="largest n to test")
    p.add_argument("--only", action="append", metavar="NAME", help="run only this check (repeatable)")
    p.add_argument("--list", action="store_true", help="list check names and exit")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DiscreteCSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
