"""``bernvand`` command line: experiment CSVs and a one-off solve.

Exit status is 0 on success, 2 for usage or input errors, 1 for numerical
failure (singular pivot, non-finite result) or an unwritable output file.
"""

import argparse
import sys
from pathlib import Path

import numpy as np

from .bases import equispaced_nodes, random_stratified_nodes
from .experiments import Experiment, ExperimentConfig, run_experiment
from .validation import check_nodes
from .vandermonde import Method, solve

EXIT_OK, EXIT_NUMERIC, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer seed, got {text!r}") from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must lie in [0, 2**64)")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bernvand",
        description="Bernstein-Vandermonde solvers and accuracy experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--nmax", type=_positive_int, default=20, help="largest degree (default 20)")
        p.add_argument("--seed", type=_seed, default=0)
        p.add_argument("--out", type=Path, default=None, help="CSV path (default stdout)")
        p.add_argument("--trials", type=_positive_int, default=1, help="draws averaged per degree")

    for name, text in [
        ("conditioning", "M->2 and 2-norm condition numbers at equispaced nodes"),
        ("equispaced", "solver accuracy at equispaced nodes"),
        ("random", "solver accuracy at stratified random nodes"),
        ("blocklu", "block LU accuracy on the 2- and 3-simplex"),
    ]:
        common(sub.add_parser(name, help=text))

    p = sub.add_parser("solve", help="solve one system and print the coefficients")
    common(p)
    p.add_argument("--n", type=int, required=True, help="polynomial degree")
    p.add_argument("--method", choices=[m.value for m in Method], default="lu")
    p.add_argument("--nodes", default="equispaced", help="equispaced, stratified, or a file of n+1 reals")
    p.add_argument("--rhs", type=Path, required=True, help="file of n+1 whitespace-separated reals")
    return parser


def read_reals(path: Path) -> np.ndarray:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror or exc}") from None
    values = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        for token in line.split():
            try:
                values.append(float(token))
            except ValueError:
                raise UsageError(f"{path}:{lineno}: cannot parse {token!r} as a real number") from None
    return np.array(values)


def _nodes(spec: str, n: int, seed: int) -> np.ndarray:
    if spec == "equispaced":
        return equispaced_nodes(n)
    if spec == "stratified":
        if n < 1:
            raise UsageError("stratified nodes need n >= 1")
        return random_stratified_nodes(n, seed)
    x = read_reals(Path(spec))
    try:
        return check_nodes(x, n=n)
    except ValueError as exc:
        raise UsageError(f"{spec}: {exc}") from None


def _solve_command(args) -> int:
    n = args.n
    if n < 0:
        raise UsageError("--n must be nonnegative")
    nodes = _nodes(args.nodes, n, args.seed)
    method = Method(args.method)
    if method is Method.DFT_EQUISPACED and not (n >= 1 and np.array_equal(nodes, equispaced_nodes(n))):
        raise UsageError("method dft-equispaced requires --nodes equispaced and n >= 1")
    b = read_reals(args.rhs)
    if b.size != n + 1:
        raise UsageError(f"{args.rhs}: expected {n + 1} values, found {b.size}")
    with np.errstate(all="ignore"):
        c = solve(method, nodes, b)
    if not np.all(np.isfinite(c)):
        print("bernvand: solution is not finite", file=sys.stderr)
        return EXIT_NUMERIC
    lines = "".join(f"{v:.17g}\n" for v in c)
    if args.out is None:
        sys.stdout.write(lines)
    else:
        args.out.write_text(lines, encoding="utf-8")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on bad usage
    try:
        if args.command == "solve":
            return _solve_command(args)
        cfg = ExperimentConfig(
            experiment=Experiment(args.command),
            n_max=args.nmax,
            seed=args.seed,
            output_path=args.out,
            trials=args.trials,
        )
        text = run_experiment(cfg)
        if args.out is None:
            sys.stdout.write(text)
        return EXIT_OK
    except UsageError as exc:
        print(f"bernvand: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except np.linalg.LinAlgError as exc:  # before ValueError, its base class
        print(f"bernvand: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ValueError, TypeError) as exc:
        print(f"bernvand: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"bernvand: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
