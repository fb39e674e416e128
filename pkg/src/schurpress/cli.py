"""Command-line entry point: ``schurpress {dims,compress,roundtrip,verify,bench,export-cg}``.

Exit codes: 0 success, 1 verification failure, 2 usage or file-format error.
"""

from __future__ import annotations

import argparse
import csv
import statistics
import sys
import time
from pathlib import Path

import numpy as np

from . import _kernels, cg, verify
from .combinatorics import DimensionOverflow, dim_symmetric
from .compressor import compress, compress_dense, decompress, estimate_cost
from .fileio import (
    CgCache,
    FormatError,
    MatrixFile,
    atomic_write,
    build_matrix,
    dumps_matrix,
    read_state,
    write_state,
)
from .oracle import tensor_power_state
from .states import DenseState, PureQudit, fidelity

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _cmd_dims(args) -> int:
    dim = dim_symmetric(args.n, args.d)
    full = args.d**args.n
    print(f"n={args.n} d={args.d}")
    print(f"dim_symmetric {dim}")
    print(f"full_dimension {full}")
    print(f"compression_ratio {full}/{dim} = {full / dim:.10g}")
    return EXIT_OK


def _load_qudit_or_dense(args):
    """Return ``(phi, n)`` for a one-qudit file with ``--n``, else ``(dense_state, None)``."""
    state = read_state(args.input)
    if not isinstance(state, DenseState):
        raise FormatError("input must be a computational-basis state file")
    if state.n == 1 and args.n is not None:
        if args.n < 1:
            raise UsageError("--n must be >= 1")
        return PureQudit.normalized(state.amplitudes), args.n
    if args.n is not None and args.n != state.n:
        raise UsageError(f"--n={args.n} conflicts with an {state.n}-qudit input file")
    return state, None


def _cmd_compress(args) -> int:
    source, n = _load_qudit_or_dense(args)
    if n is not None:
        out = compress(source, n)
    else:
        out, leakage = compress_dense(source)
        print(f"leakage {leakage:.17g}")
        if leakage > 1e-6:
            # the occupation block alone is not a normalized state
            raise FormatError(f"input is not symmetric (leakage {leakage:.3g}); nothing written")
    write_state(args.out, out)
    print(f"wrote {len(out.amplitudes)} amplitudes (d={out.d}, n={out.n}) to {args.out}")
    return EXIT_OK


def _cmd_roundtrip(args) -> int:
    source, n = _load_qudit_or_dense(args)
    if n is not None:
        restored = decompress(compress(source, n))
        fid = fidelity(restored, tensor_power_state(source, n))
    else:
        block, _ = compress_dense(source)
        fid = fidelity(decompress(block), source)
    print(f"fidelity {fid:.17g}")
    return EXIT_OK if fid >= 1 - args.tol else EXIT_FAIL


def _cmd_verify(args) -> int:
    report = verify.run(args.suite, n_max=args.n_max, d_max=args.d_max, tol=args.tol, seed=args.seed)
    sys.stdout.write(report.render())
    return EXIT_OK if report.ok else EXIT_FAIL


def _time_compress(d: int, n: int, repeats: int, rng, backend) -> int:
    samples = []
    for _ in range(repeats):
        cg.clear_caches()
        z = rng.standard_normal(d) + 1j * rng.standard_normal(d)
        phi = PureQudit.normalized(z)
        start = time.perf_counter_ns()
        compress(phi, n, backend=backend)
        samples.append(time.perf_counter_ns() - start)
    return int(statistics.median(samples))


def _cmd_bench(args) -> int:
    if args.n_max < 2:
        raise UsageError("--n-max must be >= 2")
    _kernels.warm_up()
    rng = np.random.default_rng(args.seed)
    rows = []
    for n in range(2, args.n_max + 1):
        wall = _time_compress(args.d, n, args.repeats, rng, args.backend)
        rows.append((n, wall, dim_symmetric(n, args.d), estimate_cost(n, args.d)))
    header = ("n", "wall_ns", "dim_symmetric", "estimate_cost")
    if args.csv:
        path = Path(args.csv)
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)
        print(f"wrote {len(rows)} rows to {path}")
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    return EXIT_OK


def _cmd_export_cg(args) -> int:
    kind = "unitary" if args.complete else "isometry"
    if args.no_cache:
        mf: MatrixFile = build_matrix(args.d, args.k, kind)
    else:
        mf = CgCache(args.cache_dir).get(args.d, args.k, kind)
    atomic_write(Path(args.out), dumps_matrix(mf))
    rows, cols = mf.matrix.shape
    print(f"wrote {kind} d={args.d} k={args.k} ({rows}x{cols}) to {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schurpress", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", help="symmetric-register dimension and compression ratio")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=_cmd_dims)

    for name, func, help_ in (("compress", _cmd_compress, "compress a state file"),
                              ("roundtrip", _cmd_roundtrip, "compress, decompress, report fidelity")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--input", required=True, help="state file (one qudit with --n, or n qudits)")
        p.add_argument("--n", type=int, help="number of copies of a one-qudit input")
        if name == "compress":
            p.add_argument("--out", required=True)
        else:
            p.add_argument("--tol", type=float, default=1e-9)
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("--suite", default="all", choices=["all", *verify.SUITES])
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--d-max", type=int, default=3)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bench", help="time the fast compression path")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--csv", help="output CSV path (default: stdout)")
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--backend", choices=sorted(_kernels.BACKENDS))
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("export-cg", help="write a symmetric CG matrix file")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--complete", action="store_true", help="export the unitary completion")
    p.add_argument("--out", required=True)
    p.add_argument("--cache-dir", help="override the cache directory")
    p.add_argument("--no-cache", action="store_true")
    p.set_defaults(func=_cmd_export_cg)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, UsageError, DimensionOverflow, OSError) as exc:
        # FormatError and ScaleError are ValueErrors
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
