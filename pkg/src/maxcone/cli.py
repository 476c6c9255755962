"""``maxcone`` command line.

Exit codes: 0 success (or member), 2 definite non-member, 1 any error.
Column indices in all output are 1-based.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

import numpy as np

from . import _backend, bench, io
from .extremals import (
    METHODS,
    NotAMemberError,
    caratheodory_decompose,
    extract_basis,
    extremal_columns,
    scaled_slice,
    slice_minima,
)
from .maxcore import DEFAULT_RTOL, Tolerance
from .residuation import residuate

EXIT_OK, EXIT_ERROR, EXIT_NONMEMBER = 0, 1, 2


class CLIError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors, which is reserved for non-members
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _rtol(args) -> float:
    if args.rtol is not None:
        return args.rtol
    env = os.environ.get("MAXCONE_RTOL")
    if env:
        try:
            val = float(env)
        except ValueError:
            raise CLIError(f"MAXCONE_RTOL is not a number: {env!r}") from None
        if not val >= 0:
            raise CLIError(f"MAXCONE_RTOL must be >= 0, got {env!r}")
        return val
    return DEFAULT_RTOL


def _nonneg_float(s: str) -> float:
    try:
        x = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {s!r}") from None
    if not x >= 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {s!r}")
    return x


def _int_list(s: str) -> List[int]:
    try:
        vals = [int(t) for t in s.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {s!r}") from None
    if not vals or min(vals) < 1:
        raise argparse.ArgumentTypeError(f"sizes must be positive: {s!r}")
    return vals


def _fmt_vec(v) -> str:
    return " ".join(io.human(t) for t in v)


def _indices(idx) -> str:
    return " ".join(str(i + 1) for i in idx)


def _load(args):
    V = io.read_matrix(args.matrix, args.format)
    return V, Tolerance(_rtol(args)).resolve(V)


def cmd_basis(args) -> int:
    V, tol = _load(args)
    res = extract_basis(V, method=args.method, tol=tol, backend=args.backend)
    fmt = io.infer_format(args.matrix, args.format)
    if fmt == "json":
        obj = {"f": [i + 1 for i in res.kept], **io.matrix_object(res.basis)}
        print(json.dumps(obj))
    else:
        print(f"f = {_indices(res.kept)}".rstrip())
        sys.stdout.write(io.dump_csv(res.basis))
    if args.output:
        io.write_matrix(res.basis, args.output, args.format if args.output_format is None
                        else args.output_format)
    return EXIT_OK


def _target(args, n: int) -> np.ndarray:
    v = io.parse_vector(args.vector, args.format)
    if v.size != n:
        raise CLIError(f"vector has length {v.size}, matrix has {n} rows")
    return v


def cmd_member(args) -> int:
    U, _ = _load(args)
    v = _target(args, U.shape[0])
    tol = Tolerance(_rtol(args)).resolve(U, v)
    r = residuate(U, v, tol)
    print(f"x = {_fmt_vec(r.x)}")
    print(f"image = {_fmt_vec(r.image)}")
    print("member" if r.exact else "not member")
    return EXIT_OK if r.exact else EXIT_NONMEMBER


def cmd_decompose(args) -> int:
    U, _ = _load(args)
    v = _target(args, U.shape[0])
    tol = Tolerance(_rtol(args)).resolve(U, v)
    try:
        d = caratheodory_decompose(U, v, tol)
    except NotAMemberError as e:
        print(f"not member: {e}")
        return EXIT_NONMEMBER
    print(f"terms = {len(d.terms)} (support size {int(np.count_nonzero(v > 0))})")
    for i, lam in d.terms:
        print(f"{i + 1} {io.human(lam)}")
    return EXIT_OK


def cmd_extremals(args) -> int:
    V, tol = _load(args)
    print(_indices(extremal_columns(V, tol)))
    return EXIT_OK


def cmd_minima(args) -> int:
    V, tol = _load(args)
    n = V.shape[0]
    if args.j is not None:
        if not 1 <= args.j <= n:
            raise CLIError(f"--j must be in 1..{n}")
        coords = [args.j - 1]
    else:
        coords = range(n)
    for j in coords:
        mins = slice_minima(V, j, tol)
        print(f"j = {j + 1}: {_indices(mins)}")
        if args.j is not None:
            idx, P = scaled_slice(V, j)
            rows = {int(c): P[r] for r, c in enumerate(idx)}
            for c in mins:
                print(f"  {c + 1}: {_fmt_vec(rows[c])}")
    return EXIT_OK


def cmd_bench(args) -> int:
    try:
        rep = bench.run_bench(args.n, args.k, reps=args.reps, seed=args.seed,
                              method=args.method, sparsity=args.sparsity,
                              backend=args.backend, rtol=_rtol(args))
    except ValueError as e:
        raise CLIError(str(e)) from None
    if args.json:
        print(json.dumps(rep.to_dict(), indent=2))
        return EXIT_OK
    print(f"{'n':>6} {'k':>6} {'method':>12} {'backend':>9} {'median_s':>12} {'reps':>5} {'basis':>6}")
    for c in rep.cells:
        print(f"{c.n:>6} {c.k:>6} {c.method:>12} {c.backend:>9} {c.median_s:>12.6f} "
              f"{c.reps:>5} {c.basis_size:>6}")
    for r in rep.ratios:
        other = "n" if r.axis == "k" else "k"
        print(f"{r.axis}: {r.size_from} -> {r.size_to} at {other}={r.fixed}: "
              f"{r.time_from:.6f}s -> {r.time_to:.6f}s, per doubling {r.per_doubling:.3f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rtol", type=_nonneg_float, default=None,
                        help=f"relative tolerance (default $MAXCONE_RTOL or {DEFAULT_RTOL})")
    common.add_argument("--format", choices=io.FORMATS, default=None,
                        help="input format (default: from file extension)")
    common.add_argument("--backend", choices=["auto", *_backend.BACKENDS], default="auto")

    p = _Parser(prog="maxcone", description="Finitely generated max-times cones.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("basis", parents=[common], help="extract the essentially unique basis")
    s.add_argument("matrix")
    s.add_argument("--method", choices=METHODS, default="residuation")
    s.add_argument("-o", "--output", help="also write the basis matrix to this file")
    s.add_argument("--output-format", choices=io.FORMATS, default=None)
    s.set_defaults(func=cmd_basis)

    for name, func, text in (
        ("member", cmd_member, "test membership of a vector in the cone"),
        ("decompose", cmd_decompose, "write a member as a short max combination"),
    ):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("matrix")
        s.add_argument("vector", help='comma-separated values, or a one-row/column matrix file')
        s.set_defaults(func=func)

    s = sub.add_parser("extremals", parents=[common], help="list extremal generators")
    s.add_argument("matrix")
    s.set_defaults(func=cmd_extremals)

    s = sub.add_parser("minima", parents=[common], help="minimal rescaled generators per coordinate")
    s.add_argument("matrix")
    s.add_argument("--j", type=int, default=None, help="coordinate (1-based); default all")
    s.set_defaults(func=cmd_minima)

    s = sub.add_parser("bench", parents=[common], help="time basis extraction")
    s.add_argument("--n", type=_int_list, default=[50], help="row counts, comma-separated")
    s.add_argument("--k", type=_int_list, default=[250, 500, 1000],
                   help="column counts, comma-separated")
    s.add_argument("--reps", type=int, default=3)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--method", choices=METHODS, default="residuation")
    s.add_argument("--sparsity", type=float, default=0.0, help="fraction of entries set to zero")
    s.add_argument("--json", action="store_true", help="print the report as JSON")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CLIError, ValueError) as e:
        print(f"maxcone {args.command}: error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
