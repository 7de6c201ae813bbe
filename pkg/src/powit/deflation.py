"""Top-k eigenpairs of a self-adjoint matrix by solve-then-deflate rounds.

Each round finds the current dominant pair, rescales the vector to unit
2-norm, and subtracts value * v v†, which sends the found direction to
eigenvalue 0 while self-adjointness keeps every other eigenpair untouched.
"Top k" therefore means the k largest in modulus, which is what the
dominant-pair solvers find.

The unit 2-norm rescaling matters: the solvers hand back max-norm vectors,
and deflating with those leaves a spurious rank-one remainder behind.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .ensembles import derive_seed
from .errors import DegenerateInputError, DimensionError, SymmetryError
from .linalg import adjoint, as_matrix, as_vector, outer
from .solvers import SOLVERS, SolverConfig

__all__ = ["Spectrum", "deflate", "top_k_eigenpairs"]

HERMITIAN_TOL = 1e-12


@dataclass
class Spectrum:
    """Eigenpairs in extraction order (descending modulus when complete).

    complete is False when an inner solve failed to converge; values and
    vectors then hold the rounds that finished, and failed_round names the
    first bad one (1-based).
    """

    values: list[float] = field(default_factory=list)
    vectors: list[np.ndarray] = field(default_factory=list)  # unit 2-norm
    complete: bool = True
    failed_round: int | None = None

    @property
    def k(self) -> int:
        return len(self.values)

    @property
    def pairs(self) -> list[tuple[float, np.ndarray]]:
        return list(zip(self.values, self.vectors))


def deflate(A, value, vector) -> np.ndarray:
    """Subtract value * vector vector† from A.

    The vector must carry unit 2-norm for the deflated direction to land
    exactly on eigenvalue 0.
    """
    A = as_matrix(A)
    v = as_vector(vector)
    if A.shape[0] != v.shape[0]:
        raise DimensionError(f"dimension mismatch: {A.shape[0]} vs {v.shape[0]}")
    return A - value * outer(v, v)


def top_k_eigenpairs(
    A,
    k: int,
    cfg: SolverConfig | None = None,
    method: str = "power",
    reorthogonalize: bool = False,
) -> Spectrum:
    """Extract the k largest-modulus eigenpairs of a self-adjoint matrix.

    method picks the inner solver ("power" or "squared"). Each round seeds
    its start vector from (cfg.seed, round), solves on the current deflated
    matrix, and deflates with the real part of the Rayleigh quotient (the
    spectrum is real). reorthogonalize additionally projects each new
    vector against the ones already found before deflating; rounding alone
    rarely needs that, hence off by default.
    """
    A = as_matrix(A)
    n = A.shape[0]
    if not 1 <= k <= n:
        raise DimensionError(f"k must lie in [1, {n}], got {k}")
    if float(np.max(np.abs(A - adjoint(A)))) > HERMITIAN_TOL:
        raise SymmetryError("matrix must be self-adjoint (entrywise 1e-12)")
    if method not in SOLVERS:
        raise ValueError(f"method must be one of {tuple(SOLVERS)}, got {method!r}")
    cfg = cfg or SolverConfig()
    solve = SOLVERS[method]

    out = Spectrum()
    current = A
    for round_idx in range(k):
        round_cfg = replace(cfg, seed=derive_seed(cfg.seed, round_idx))
        try:
            estimate = solve(current, round_cfg)
        except DegenerateInputError:
            estimate = None
        if estimate is None or not estimate.converged:
            out.complete = False
            out.failed_round = round_idx + 1
            return out
        value = float(np.real(estimate.value))
        vector = estimate.vector / np.linalg.norm(estimate.vector)
        if reorthogonalize:
            for prev in out.vectors:
                vector = vector - np.vdot(prev, vector) * prev
            norm = float(np.linalg.norm(vector))
            if norm == 0.0:
                out.complete = False
                out.failed_round = round_idx + 1
                return out
            vector = vector / norm
        out.values.append(value)
        out.vectors.append(vector)
        current = current - value * outer(vector, vector)
    return out
