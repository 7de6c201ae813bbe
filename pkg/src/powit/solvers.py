"""Dominant-eigenpair solvers.

Two routes to the same estimate: classic power iteration, which multiplies
a vector by A until the normalized iterate stops moving, and a squared
variant that repeatedly squares and renormalizes A itself. Squaring doubles
the effective power per step, so the second route converges in roughly the
base-2 log of the iterations the first one needs, at the price of
matrix-matrix instead of matrix-vector products.

Stopping compares successive normalized iterates in max norm. Before the
comparison, the new vector iterate is rotated by the unit phase that makes
its inner product with the previous iterate real and positive (a sign flip
in real mode). Without that alignment a dominant negative eigenvalue flips
the iterate every step and the difference never shrinks; the Rayleigh
quotient still recovers the signed eigenvalue.

Reported eigenvectors have max norm 1 and a fixed phase: the largest-modulus
entry is real and positive. A result is marked converged only if the
stopping rule fired and the final residual passes a sanity bound
(residual <= 100 * tol * max_norm(A)), so the flag stays honest on spectra
where the iteration itself goes blind, e.g. two eigenvalues of equal
modulus and opposite sign.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ensembles import derive_seed, random_unit_vector
from .errors import DegenerateInputError, DimensionError, NumericOverflowError
from .linalg import as_matrix, as_vector, max_norm, normalize_vec, phase_fix

__all__ = [
    "POWER_MAX_ITER",
    "SQUARED_MAX_ITER",
    "RESIDUAL_SLACK",
    "SolverConfig",
    "EigenEstimate",
    "rayleigh_quotient",
    "power_iteration",
    "matrix_power_squaring",
    "power_iteration_squared",
    "SOLVERS",
]

POWER_MAX_ITER = 10**6
SQUARED_MAX_ITER = 64  # doubles saturate long before 2**64

# converged results must satisfy residual <= RESIDUAL_SLACK * tol * max_norm(A)
RESIDUAL_SLACK = 100.0


@dataclass(frozen=True)
class SolverConfig:
    """Knobs shared by both solvers.

    max_iter None picks the per-algorithm default: 10**6 multiplications
    for the vector iteration, 64 squarings for the squared one. seed drives
    the starting-vector draw.
    """

    tol: float = 1e-10
    max_iter: int | None = None
    seed: int = 0

    def __post_init__(self) -> None:
        if not self.tol > 0.0:
            raise ValueError("tol must be positive")
        if self.max_iter is not None and self.max_iter < 1:
            raise ValueError("max_iter must be at least 1")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")


@dataclass
class EigenEstimate:
    """Dominant-eigenpair estimate with convergence metadata."""

    value: float | complex  # Rayleigh quotient of the reported vector
    vector: np.ndarray  # max norm 1, largest-modulus entry real and positive
    iterations: int  # multiplications or squarings performed
    converged: bool
    residual: float  # max norm of A v - value v


def rayleigh_quotient(A, x) -> float | complex:
    """Return (x† A x) / (x† x) as a float (real mode) or complex scalar.

    For self-adjoint A the imaginary part is rounding noise; it is kept in
    the complex case so callers can inspect it.
    """
    A = as_matrix(A)
    x = as_vector(x)
    if A.shape[0] != x.shape[0]:
        raise DimensionError(f"dimension mismatch: {A.shape[0]} vs {x.shape[0]}")
    if not np.any(x):
        raise DegenerateInputError("Rayleigh quotient of the zero vector")
    num = np.vdot(x, A @ x)
    den = np.vdot(x, x).real
    return (num / den).item()


def _finish(A, x, iterations, hit_tol, tol, scale) -> EigenEstimate:
    """Phase-fix the final iterate and attach the eigenvalue and residual."""
    v = phase_fix(x)
    value = rayleigh_quotient(A, v)
    residual = float(np.max(np.abs(A @ v - value * v)))
    converged = hit_tol and residual <= RESIDUAL_SLACK * tol * scale
    return EigenEstimate(
        value=value,
        vector=v,
        iterations=iterations,
        converged=converged,
        residual=residual,
    )


def power_iteration(A, cfg: SolverConfig | None = None, x0=None) -> EigenEstimate:
    """Estimate the largest-modulus eigenpair by repeated multiplication.

    Starts from x0 when given (any nonzero vector, normalized here),
    otherwise from the seeded random draw. Iterates x <- A x / |A x| with
    phase alignment until the aligned step difference drops to cfg.tol or
    max_iter is reached; the capped case returns converged False instead of
    raising. The zero matrix, a zero x0, and a starting vector that A maps
    to zero raise DegenerateInputError (re-seed and retry for the latter).
    """
    A = as_matrix(A)
    cfg = cfg or SolverConfig()
    limit = cfg.max_iter if cfg.max_iter is not None else POWER_MAX_ITER
    scale = max_norm(A)
    if scale == 0.0:
        raise DegenerateInputError("zero matrix: every eigenvalue is 0")
    n = A.shape[0]
    if x0 is not None:
        x = as_vector(x0)
        if x.shape[0] != n:
            raise DimensionError(f"dimension mismatch: {n} vs {x.shape[0]}")
        x = normalize_vec(x)
    else:
        x = random_unit_vector(n, cfg.seed)

    hit_tol = False
    iterations = 0
    while iterations < limit:
        y = A @ x
        m = np.max(np.abs(y))
        if m == 0.0:
            raise DegenerateInputError(
                "starting vector lies in the kernel of A; re-seed and retry"
            )
        y /= m
        d = np.vdot(x, y)
        if d != 0:
            y *= d.conjugate() / abs(d)
        step = np.max(np.abs(y - x))
        x = y
        iterations += 1
        if step <= cfg.tol:
            hit_tol = True
            break
    return _finish(A, x, iterations, hit_tol, cfg.tol, scale)


def matrix_power_squaring(A, j: int) -> np.ndarray:
    """Compute A**(2**j) by j successive squarings, with no normalization.

    Entry growth is the caller's concern; entries that leave the finite
    range raise NumericOverflowError.
    """
    A = as_matrix(A)
    if j < 0:
        raise ValueError("squaring count must be non-negative")
    out = A.copy()
    for step in range(j):
        with np.errstate(over="ignore", invalid="ignore"):  # reported below
            out = out @ out
        if not np.all(np.isfinite(out)):
            raise NumericOverflowError(f"entries overflowed at squaring {step + 1}")
    return out


def _squared_step(current: np.ndarray) -> np.ndarray:
    """Square and renormalize one iterate of the squared power method."""
    with np.errstate(over="ignore", invalid="ignore"):  # reported below
        nxt = current @ current
    m = np.max(np.abs(nxt))
    if m == 0.0:
        raise DegenerateInputError("matrix squared to zero; dominant eigenvalue is 0")
    if not np.isfinite(m):
        raise NumericOverflowError("matrix entries overflowed while squaring")
    nxt /= m
    return nxt


def power_iteration_squared(A, cfg: SolverConfig | None = None, x0=None) -> EigenEstimate:
    """Estimate the largest-modulus eigenpair by squaring the matrix itself.

    Iterates A <- A A / |A A| until successive normalized iterates agree to
    cfg.tol in max norm (or max_iter squarings pass), then projects the
    starting vector through the converged power and takes the Rayleigh
    quotient against the original input. If the projection collapses below
    tol, the start vector is re-drawn from a derived seed, three times at
    most, after which DegenerateInputError is raised. iterations counts
    squarings; non-convergence returns converged False.
    """
    A = as_matrix(A)
    cfg = cfg or SolverConfig()
    limit = cfg.max_iter if cfg.max_iter is not None else SQUARED_MAX_ITER
    scale = max_norm(A)
    if scale == 0.0:
        raise DegenerateInputError("zero matrix: every eigenvalue is 0")
    n = A.shape[0]

    current = A
    hit_tol = False
    iterations = 0
    while iterations < limit:
        nxt = _squared_step(current)
        step = np.max(np.abs(nxt - current))
        current = nxt
        iterations += 1
        if step <= cfg.tol:
            hit_tol = True
            break

    if x0 is not None:
        x = as_vector(x0)
        if x.shape[0] != n:
            raise DimensionError(f"dimension mismatch: {n} vs {x.shape[0]}")
    else:
        x = random_unit_vector(n, cfg.seed)
    projected = current @ x
    redraws = 0
    while np.max(np.abs(projected)) <= cfg.tol:
        redraws += 1
        if redraws > 3:
            raise DegenerateInputError(
                "projected start vector keeps collapsing; re-seed or use power_iteration"
            )
        x = random_unit_vector(n, derive_seed(cfg.seed, redraws))
        projected = current @ x
    return _finish(A, normalize_vec(projected), iterations, hit_tol, cfg.tol, scale)


SOLVERS = {"power": power_iteration, "squared": power_iteration_squared}
