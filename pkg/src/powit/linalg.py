"""Dense kernels for square matrices and vectors.

Everything operates on numpy arrays in row-major order. Real problems use
float64 and complex problems complex128; the same code path serves both, so
real mode is simply the case where every imaginary part is zero. The norm
used throughout is the max norm (largest entry modulus), which is cheap to
evaluate and bounds entry growth under repeated multiplication.

Kernels are pure: inputs are never mutated and results never alias them.
"""

from __future__ import annotations

import numpy as np

from .errors import DegenerateInputError, DimensionError

__all__ = [
    "as_matrix",
    "as_vector",
    "matmul",
    "matvec",
    "adjoint",
    "outer",
    "max_norm",
    "max_norm_vec",
    "normalize_matrix",
    "normalize_vec",
    "phase_fix",
]


def as_matrix(a) -> np.ndarray:
    """Coerce input to a square float64 or complex128 matrix."""
    m = np.asarray(a)
    m = m.astype(np.complex128 if m.dtype.kind == "c" else np.float64, copy=False)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] == 0:
        raise DimensionError("matrix dimension must be at least 1")
    return m


def as_vector(x) -> np.ndarray:
    """Coerce input to a 1-D float64 or complex128 vector."""
    v = np.asarray(x)
    v = v.astype(np.complex128 if v.dtype.kind == "c" else np.float64, copy=False)
    if v.ndim != 1:
        raise DimensionError(f"expected a vector, got shape {v.shape}")
    if v.shape[0] == 0:
        raise DimensionError("vector dimension must be at least 1")
    return v


def matmul(a, b) -> np.ndarray:
    """Matrix product with plain cubic semantics."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[0] != b.shape[0]:
        raise DimensionError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return a @ b


def matvec(a, x) -> np.ndarray:
    """Matrix-vector product."""
    a = as_matrix(a)
    x = as_vector(x)
    if a.shape[0] != x.shape[0]:
        raise DimensionError(f"dimension mismatch: {a.shape[0]} vs {x.shape[0]}")
    return a @ x


def adjoint(a) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(a).conj().T.copy()


def outer(u, v) -> np.ndarray:
    """Outer product u v†, i.e. result[r, c] = u[r] * conj(v[c])."""
    u = as_vector(u)
    v = as_vector(v)
    if u.shape[0] != v.shape[0]:
        raise DimensionError(f"dimension mismatch: {u.shape[0]} vs {v.shape[0]}")
    return np.outer(u, v.conj())


def max_norm(a) -> float:
    """Largest entry modulus of a matrix."""
    return float(np.max(np.abs(as_matrix(a))))


def max_norm_vec(x) -> float:
    """Largest entry modulus of a vector."""
    return float(np.max(np.abs(as_vector(x))))


def normalize_matrix(a) -> np.ndarray:
    """Scale a matrix so its max norm is 1."""
    a = as_matrix(a)
    m = float(np.max(np.abs(a)))
    if m == 0.0:
        raise DegenerateInputError("cannot normalize the zero matrix")
    return a / m


def normalize_vec(x) -> np.ndarray:
    """Scale a vector so its max norm is 1."""
    x = as_vector(x)
    m = float(np.max(np.abs(x)))
    if m == 0.0:
        raise DegenerateInputError("cannot normalize the zero vector")
    return x / m


def phase_fix(x) -> np.ndarray:
    """Rotate a vector so its largest-modulus entry is real and positive.

    Ties pick the lowest index; real vectors just get a sign flip. The
    pivot entry is written as its exact modulus, since the rotation itself
    can leave one ulp of phase dust on it.
    """
    x = as_vector(x)
    i = int(np.argmax(np.abs(x)))
    pivot = x[i]
    if pivot == 0:
        return x.copy()
    y = x * (abs(pivot) / pivot)
    y[i] = abs(pivot)
    return y
