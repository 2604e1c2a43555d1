"""Command-line front end.

Exit status: 0 success, 1 verification failure, 2 usage or parse error,
3 domain error (for example a Pareto moment that does not exist).
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path

import numpy as np

from .distributions import parse_distribution
from .errors import DomainError, SpecnormError
from .extension import norm_extended
from .figures import circle_samples
from .hermitian import continuity_scan, norm_exact, norm_mc
from .linalg import HERMITIAN_RTOL, HermitianMatrix, as_matrix, hermitian_defect
from .majorization import DoublyStochastic, birkhoff_decompose
from .verify import SUITES, run_verify

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_entry(token: str) -> complex:
    """Parse ``re+imi`` style entries such as ``1``, ``-2.5``, ``3i``, ``1-0.5i``."""
    t = token.strip()
    try:
        return complex(t.replace("i", "j") if t.endswith("i") else t)
    except ValueError:
        raise UsageError(f"bad matrix entry {token!r}") from None


def format_entry(z: complex) -> str:
    return f"{float(z.real):.17g}{float(z.imag):+.17g}i"


def read_matrix(text: str) -> np.ndarray:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise UsageError("empty matrix file")
    try:
        n = int(lines[0])
    except ValueError:
        raise UsageError(f"first line must be the dimension, got {lines[0]!r}") from None
    rows = [ln.split() for ln in lines[1:]]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise UsageError(f"expected {n} rows of {n} entries")
    return np.array([[parse_entry(tok) for tok in row] for row in rows])


def write_matrix(M) -> str:
    M = np.asarray(M, dtype=complex)
    lines = [str(M.shape[0])] + [" ".join(format_entry(z) for z in row) for row in M]
    return "\n".join(lines) + "\n"


def read_csv_matrix(text: str) -> np.ndarray:
    rows = [r for r in csv.reader(io.StringIO(text)) if r and any(c.strip() for c in r)]
    try:
        return np.array([[float(c) for c in r] for r in rows])
    except ValueError as exc:
        raise UsageError(f"bad CSV matrix: {exc}") from None


def _load_matrix(path: str) -> np.ndarray:
    try:
        return as_matrix(read_matrix(Path(path).read_text()))
    except OSError as exc:
        raise UsageError(str(exc)) from None


def _dist(spec: str):
    try:
        return parse_distribution(spec)
    except DomainError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _is_hermitian(Z: np.ndarray) -> bool:
    return hermitian_defect(Z) <= HERMITIAN_RTOL * (1.0 + float(np.max(np.abs(Z))))


def cmd_norm(args) -> int:
    dist = _dist(args.dist)
    Z = _load_matrix(args.matrix)
    if args.method == "mc":
        if not _is_hermitian(Z):
            raise DomainError("Monte Carlo evaluation needs a Hermitian matrix")
        est = norm_mc(HermitianMatrix(Z), dist, args.d, args.samples, args.seed)
        print(f"{est.value!r} stderr={est.stderr!r} samples={est.samples}")
    elif _is_hermitian(Z):
        print(repr(norm_exact(HermitianMatrix(Z), dist, args.d)))
    else:
        print(repr(norm_extended(Z, dist, args.d)))
    return EXIT_OK


def cmd_circle(args) -> int:
    dist = _dist(args.dist)
    table = circle_samples(dist, args.d, args.resolution, args.method, args.samples, args.seed)
    if args.out:
        table.write_csv(args.out)
    else:
        sys.stdout.write(table.to_csv())
    if args.svg:
        Path(args.svg).write_text(table.to_svg())
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_verify(args.suite, seed=args.seed)
    print(report.format())
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_decompose(args) -> int:
    try:
        text = Path(args.doubly_stochastic).read_text()
    except OSError as exc:
        raise UsageError(str(exc)) from None
    dec = birkhoff_decompose(DoublyStochastic(read_csv_matrix(text)))
    n = len(dec.terms[0].permutation) if dec.terms else 0
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["coefficient"] + [f"p{i}" for i in range(n)])
    for t in dec:
        writer.writerow([f"{t.coefficient:.17g}", *t.permutation])
    target = args.out
    if target:
        Path(target).write_text(out.getvalue())
    else:
        sys.stdout.write(out.getvalue())
    return EXIT_OK


def cmd_continuity(args) -> int:
    dist = _dist(args.dist)
    Z = _load_matrix(args.matrix)
    if args.steps < 1:
        raise UsageError("--steps must be positive")
    grid = np.linspace(args.dmin, args.dmax, args.steps)
    est = continuity_scan(HermitianMatrix(Z), dist, grid, args.samples, args.seed)
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["d", "value", "stderr", "samples"])
    for d, e in zip(grid, est):
        writer.writerow([f"{d:.17g}", f"{e.value:.17g}", f"{e.stderr:.17g}", e.samples])
    if args.out:
        Path(args.out).write_text(out.getvalue())
    else:
        sys.stdout.write(out.getvalue())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="specnorm", description="Random-vector matrix norms.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("norm", help="evaluate ||Z||_{X,d}")
    p.add_argument("--dist", required=True)
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--matrix", required=True)
    p.add_argument("--method", choices=("exact", "mc"), default="exact")
    p.add_argument("--samples", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("circle", help="unit-circle table for 2x2 diagonal matrices")
    p.add_argument("--dist", required=True)
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--resolution", type=int, default=360)
    p.add_argument("--method", choices=("exact", "mc"), default="exact")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.add_argument("--svg")
    p.set_defaults(func=cmd_circle)

    p = sub.add_parser("verify", help="run a self-check suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decompose", help="Birkhoff decomposition of a doubly stochastic CSV")
    p.add_argument("--doubly-stochastic", required=True, dest="doubly_stochastic")
    p.add_argument("--out")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("continuity", help="Monte Carlo norm over a grid of exponents")
    p.add_argument("--dist", required=True)
    p.add_argument("--matrix", required=True)
    p.add_argument("--dmin", type=float, default=1.0)
    p.add_argument("--dmax", type=float, default=3.0)
    p.add_argument("--steps", type=int, default=41)
    p.add_argument("--samples", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_continuity)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        # d arrives as float; exact engines accept integral floats
        if getattr(args, "d", None) is not None and float(args.d).is_integer():
            args.d = int(args.d)
        return args.func(args)
    except UsageError as exc:
        print(f"specnorm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"specnorm: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except SpecnormError as exc:
        print(f"specnorm: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
