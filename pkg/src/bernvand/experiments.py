"""Experiment drivers that write the accuracy and conditioning data as CSV.

Every random quantity for a given ``n`` comes from its own generator seeded by
``(seed, n)``, so rows do not depend on each other and reruns are byte-identical.
"""

import csv
import io
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

import numpy as np

from .bases import equispaced_nodes, random_stratified_nodes
from .conditioning import conditioning_sweep, mass_matrix, m_norm
from .simplex import block_lu_solve, lattice_size, simplex_mass_matrix, simplex_vandermonde
from .structured import lu_factor
from .validation import check_degree
from .vandermonde import (
    bernstein_vandermonde,
    factored_inverse,
    factored_inverse_equispaced,
    inverse_via_bezout,
)

NEWTON_NOTE = "# newton: not implemented (external algorithm)"

SOLVE_HEADER = [
    "n",
    "BezoutL2err", "DFTL2err", "LUL2err",
    "BezoutMerr", "DFTMerr", "LUMerr",
    "Bezoutres", "DFTres", "LUres",
]
BLOCK_HEADER = ["n", "2dL2err", "3dL2err", "2dMerr", "3dMerr", "2dres", "3dres"]
CONDITIONING_HEADER = ["n", "k2LD", "ub", "k2V"]


class Experiment(str, Enum):
    CONDITIONING = "conditioning"
    EQUISPACED = "equispaced"
    RANDOM_NODES = "random"
    BLOCK_LU = "blocklu"


@dataclass
class ExperimentConfig:
    experiment: Experiment
    n_max: int = 20
    seed: int = 0
    output_path: Path | None = None
    trials: int = 1

    def __post_init__(self):
        self.experiment = Experiment(self.experiment)
        self.n_max = check_degree(self.n_max, minimum=1, name="n_max")
        self.trials = check_degree(self.trials, minimum=1, name="trials")
        if not isinstance(self.seed, (int, np.integer)) or self.seed < 0:
            raise ValueError(f"seed must be a nonnegative integer, got {self.seed!r}")
        self.seed = int(self.seed)


@dataclass
class SolveReport:
    """Per-method errors for one ``n``: relative 2-norm, relative M-norm, absolute residual."""

    n: int
    rel_err_2: dict = field(default_factory=dict)
    rel_err_M: dict = field(default_factory=dict)
    residual_2: dict = field(default_factory=dict)

    def add(self, method, c, c_hat, V, b, M):
        diff = c - c_hat
        self.rel_err_2[method] = float(np.linalg.norm(diff) / np.linalg.norm(c))
        self.rel_err_M[method] = m_norm(M, diff) / m_norm(M, c)
        self.residual_2[method] = float(np.linalg.norm(V @ c_hat - b))


def _rng(seed: int, n: int) -> np.random.Generator:
    return np.random.default_rng([seed, n])


def _mean_reports(n, reports) -> SolveReport:
    out = SolveReport(n)
    for attr in ("rel_err_2", "rel_err_M", "residual_2"):
        keys = getattr(reports[0], attr)
        getattr(out, attr).update({k: float(np.mean([getattr(r, attr)[k] for r in reports])) for k in keys})
    return out


def univariate_report(nodes, rng, equispaced: bool) -> SolveReport:
    """One draw of ``c`` in ``[-1, 1]^{n+1}``, ``b = V c``, solved by each backend."""
    n = nodes.size - 1
    V = bernstein_vandermonde(nodes)
    M = mass_matrix(n)
    c = rng.uniform(-1.0, 1.0, n + 1)
    b = V @ c
    dft = factored_inverse_equispaced(n) if equispaced else factored_inverse(nodes)
    rep = SolveReport(n)
    with np.errstate(all="ignore"):
        rep.add("Bezout", c, inverse_via_bezout(nodes) @ b, V, b, M)
        rep.add("DFT", c, dft.apply(b), V, b, M)
    rep.add("LU", c, lu_factor(V).solve(b), V, b, M)
    return rep


def _solve_rows(cfg: ExperimentConfig, equispaced: bool) -> list[SolveReport]:
    rows = []
    for n in range(1, cfg.n_max + 1):
        rng = _rng(cfg.seed, n)
        reps = []
        for _ in range(cfg.trials):
            nodes = equispaced_nodes(n) if equispaced else random_stratified_nodes(n, rng)
            reps.append(univariate_report(nodes, rng, equispaced))
        rows.append(_mean_reports(n, reps))
    return rows


def block_report(d: int, n: int, rng) -> SolveReport:
    V = simplex_vandermonde(d, n, n)
    M = simplex_mass_matrix(d, n)
    c = rng.uniform(-1.0, 1.0, lattice_size(d, n))
    b = V @ c
    rep = SolveReport(n)
    rep.add(f"{d}d", c, block_lu_solve(d, n, b), V, b, M)
    return rep


def _block_rows(cfg: ExperimentConfig) -> list[SolveReport]:
    rows = []
    for n in range(1, cfg.n_max + 1):
        rng = _rng(cfg.seed, n)
        reps = []
        for _ in range(cfg.trials):
            rep = block_report(2, n, rng)
            other = block_report(3, n, rng)
            for attr in ("rel_err_2", "rel_err_M", "residual_2"):
                getattr(rep, attr).update(getattr(other, attr))
            reps.append(rep)
        rows.append(_mean_reports(n, reps))
    return rows


def _fmt(x) -> str:
    # repr gives the shortest round-trip form and ignores locale
    return repr(float(x))


def run_conditioning(cfg: ExperimentConfig) -> tuple[list[str], list[list[str]], list[str]]:
    rows = [
        [str(r.n), _fmt(r.kappa_m_to_2), _fmt(r.bound), _fmt(r.kappa_2)]
        for r in conditioning_sweep(cfg.n_max)
    ]
    return CONDITIONING_HEADER, rows, []


def _solve_table(reports):
    rows = []
    for r in reports:
        row = [str(r.n)]
        for attr in ("rel_err_2", "rel_err_M", "residual_2"):
            row += [_fmt(getattr(r, attr)[m]) for m in ("Bezout", "DFT", "LU")]
        rows.append(row)
    return rows


def run_equispaced(cfg: ExperimentConfig):
    return SOLVE_HEADER, _solve_table(_solve_rows(cfg, equispaced=True)), [NEWTON_NOTE]


def run_random_nodes(cfg: ExperimentConfig):
    return SOLVE_HEADER, _solve_table(_solve_rows(cfg, equispaced=False)), [NEWTON_NOTE]


def run_block_lu(cfg: ExperimentConfig):
    rows = []
    for r in _block_rows(cfg):
        rows.append(
            [str(r.n)]
            + [_fmt(r.rel_err_2[k]) for k in ("2d", "3d")]
            + [_fmt(r.rel_err_M[k]) for k in ("2d", "3d")]
            + [_fmt(r.residual_2[k]) for k in ("2d", "3d")]
        )
    return BLOCK_HEADER, rows, []


RUNNERS = {
    Experiment.CONDITIONING: run_conditioning,
    Experiment.EQUISPACED: run_equispaced,
    Experiment.RANDOM_NODES: run_random_nodes,
    Experiment.BLOCK_LU: run_block_lu,
}


def render_csv(header, rows, comments=()) -> str:
    buf = io.StringIO()
    for line in comments:
        buf.write(line + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def run_experiment(cfg: ExperimentConfig) -> str:
    """Run ``cfg`` and return the CSV text; write it to ``cfg.output_path`` when set."""
    text = render_csv(*RUNNERS[cfg.experiment](cfg))
    if cfg.output_path is not None:
        path = Path(cfg.output_path)
        try:
            path.write_text(text, encoding="utf-8", newline="")
        except OSError as exc:
            raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc
    return text
