"""Command line interface.

Subcommands: solve (one seeded matrix), topk (deflated leading pairs),
bench (the timing suite, CSV records plus optional JSON summary and
figures), hist (re-bin a records file). Errors the package raises on
purpose exit with status 1 and a one-line message on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .bench import (
    DESK_SCALE_SIZES,
    FULL_SCALE_SIZES,
    emit_histogram,
    emit_records,
    histogram,
    parse_records,
    run_suite,
    summarize,
)
from .deflation import top_k_eigenpairs
from .ensembles import EnsembleSpec, random_matrix
from .errors import PowitError
from .solvers import SOLVERS, SolverConfig

ORTHOGONALITY_TOL = 1e-8


def _parse_sizes(text: str) -> list[tuple[int, int]]:
    sizes = []
    for part in text.split(","):
        n, sep, count = part.strip().partition(":")
        if not sep:
            raise argparse.ArgumentTypeError(f"expected n:count, got {part!r}")
        sizes.append((int(n), int(count)))
    return sizes


def _add_solver_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", choices=("real", "complex"), default="real")
    p.add_argument("--alg", choices=tuple(SOLVERS), default="power")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--max-iter", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)


def _cmd_solve(args) -> int:
    matrix = random_matrix(EnsembleSpec(n=args.n, mode=args.mode, seed=args.seed))
    cfg = SolverConfig(tol=args.tol, max_iter=args.max_iter, seed=args.seed)
    est = SOLVERS[args.alg](matrix, cfg)
    print(f"eigenvalue: {np.real(est.value)!r}")
    print(f"iterations: {est.iterations}")
    print(f"residual: {est.residual!r}")
    print(f"converged: {'true' if est.converged else 'false'}")
    return 0


def _cmd_topk(args) -> int:
    matrix = random_matrix(EnsembleSpec(n=args.n, mode=args.mode, seed=args.seed))
    cfg = SolverConfig(tol=args.tol, max_iter=args.max_iter, seed=args.seed)
    spectrum = top_k_eigenpairs(matrix, args.k, cfg, method=args.alg)
    for i, value in enumerate(spectrum.values):
        print(f"lambda[{i}]: {value!r}")
    overlap = 0.0
    for i in range(spectrum.k):
        for j in range(i + 1, spectrum.k):
            overlap = max(overlap, float(abs(np.vdot(spectrum.vectors[i], spectrum.vectors[j]))))
    print(f"max_pairwise_overlap: {overlap!r}")
    print(f"orthogonal: {'true' if overlap <= ORTHOGONALITY_TOL else 'false'}")
    if not spectrum.complete:
        print(
            f"warning: no convergence at round {spectrum.failed_round}; "
            f"extracted {spectrum.k} of {args.k} pairs",
            file=sys.stderr,
        )
    return 0


def _cmd_bench(args) -> int:
    if args.sizes is not None:
        sizes = args.sizes
    else:
        sizes = FULL_SCALE_SIZES if args.full_scale else DESK_SCALE_SIZES
    cfg = SolverConfig(tol=args.tol, max_iter=args.max_iter)
    records = run_suite(sizes, mode=args.mode, cfg=cfg, base_seed=args.seed)
    emit_records(records, args.out)
    print(f"wrote {len(records)} records to {args.out}")
    rows = summarize(records)
    header = (
        f"{'n':>6} {'mode':>8} {'algorithm':>10} {'matrices':>9} "
        f"{'time/matrix':>12} {'median_iter':>12} {'speedup':>8} {'reference':>10}"
    )
    print(header)
    for row in rows:
        speedup = "" if row["speedup"] is None else f"{row['speedup']:g}"
        reference = "" if row["reference_speedup"] is None else f"{row['reference_speedup']:g}"
        print(
            f"{row['n']:>6} {row['mode']:>8} {row['algorithm']:>10} {row['matrices']:>9} "
            f"{row['time_per_matrix']:>12.4g} {row['iterations_median']:>12g} "
            f"{speedup:>8} {reference:>10}"
        )
    if args.summary:
        with open(args.summary, "w") as fh:
            json.dump({"workers": 1, "rows": rows}, fh, indent=2)
            fh.write("\n")
        print(f"wrote summary to {args.summary}")
    if args.plot:
        from .plots import save_timing_figure

        save_timing_figure(rows, args.plot)
        print(f"wrote figure to {args.plot}")
    return 0


def _cmd_hist(args) -> int:
    records = parse_records(args.infile)
    hist = histogram(records, args.alg, args.scale)
    emit_histogram(hist, args.out)
    print(
        f"wrote {len(hist.counts)} bins covering {sum(hist.counts)} "
        f"converged runs to {args.out}"
    )
    if args.plot:
        from .plots import save_histogram_figure

        save_histogram_figure(hist, args.plot, title=f"{args.alg}: iterations to convergence")
        print(f"wrote figure to {args.plot}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powit",
        description="Dominant eigenpairs by plain and squared power iteration.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve one seeded random matrix")
    p_solve.add_argument("--n", type=int, required=True)
    _add_solver_options(p_solve)
    p_solve.set_defaults(run=_cmd_solve)

    p_topk = sub.add_parser("topk", help="leading k eigenpairs via deflation")
    p_topk.add_argument("--n", type=int, required=True)
    p_topk.add_argument("--k", type=int, required=True)
    _add_solver_options(p_topk)
    p_topk.set_defaults(run=_cmd_topk)

    p_bench = sub.add_parser("bench", help="run the timing suite")
    p_bench.add_argument("--sizes", type=_parse_sizes, default=None, metavar="N:COUNT,...")
    p_bench.add_argument("--mode", choices=("real", "complex"), default="real")
    p_bench.add_argument("--tol", type=float, default=1e-10)
    p_bench.add_argument("--max-iter", type=int, default=None)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--out", default="records.csv")
    p_bench.add_argument("--summary", default=None)
    p_bench.add_argument("--plot", default=None, help="write a timing figure (png/pdf)")
    p_bench.add_argument(
        "--full-scale",
        action="store_true",
        help="use the large published sizes instead of the desk-scale defaults",
    )
    p_bench.set_defaults(run=_cmd_bench)

    p_hist = sub.add_parser("hist", help="bin iteration counts from a records file")
    p_hist.add_argument("--in", dest="infile", required=True)
    p_hist.add_argument("--alg", choices=tuple(SOLVERS), required=True)
    p_hist.add_argument("--scale", choices=("linear", "log2"), required=True)
    p_hist.add_argument("--out", default="hist.csv")
    p_hist.add_argument("--plot", default=None, help="write a histogram figure (png/pdf)")
    p_hist.set_defaults(run=_cmd_hist)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (PowitError, ValueError, OSError) as exc:
        # config validation raises plain ValueError; keep the exit clean
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
