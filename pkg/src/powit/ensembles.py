"""Seeded random matrices and starting vectors.

All randomness flows through one fixed, documented stack so that equal
seeds give identical output on every platform and run:

* bit generator: numpy PCG64, explicitly seeded (never the process-global
  or platform default generator),
* uniforms: 53-bit doubles in [0, 1) from ``Generator.random``,
* normals: Box-Muller transform of those uniforms, cosine half first and
  sine half second.

Matrices are drawn entrywise from the standard normal distribution and
averaged with their own adjoint. The averaging is exact in floating point,
so the result equals its adjoint with no tolerance, and it keeps the entry
scale near one (off-diagonal variance becomes 1/2).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError
from .linalg import normalize_vec

__all__ = [
    "MODES",
    "EnsembleSpec",
    "derive_seed",
    "random_matrix",
    "random_unit_vector",
]

MODES = ("real", "complex")


def derive_seed(*parts: int) -> int:
    """Mix integers into one 64-bit seed via numpy's SeedSequence hashing."""
    return int(np.random.SeedSequence(list(parts)).generate_state(1, np.uint64)[0])


def _generator(seed: int) -> np.random.Generator:
    if seed < 0:
        raise ValueError("seeds must be non-negative integers")
    return np.random.Generator(np.random.PCG64(seed))


def _standard_normals(gen: np.random.Generator, count: int) -> np.ndarray:
    """Box-Muller normals from PCG64 uniforms, in a fixed draw order."""
    half = (count + 1) // 2
    u1 = 1.0 - gen.random(half)  # (0, 1] keeps the log finite
    u2 = gen.random(half)
    radius = np.sqrt(-2.0 * np.log(u1))
    angle = (2.0 * np.pi) * u2
    z = np.concatenate([radius * np.cos(angle), radius * np.sin(angle)])
    return z[:count]


@dataclass(frozen=True)
class EnsembleSpec:
    """Recipe for one random self-adjoint matrix.

    mode "real" yields a symmetric matrix, "complex" a Hermitian one whose
    entries have independent standard normal real and imaginary parts.
    """

    n: int
    mode: str = "real"
    seed: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DimensionError("ensemble dimension must be at least 1")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.seed < 0:
            raise ValueError("seeds must be non-negative integers")


def random_matrix(spec: EnsembleSpec) -> np.ndarray:
    """Draw the self-adjoint matrix described by ``spec``.

    Real mode returns (G + G.T) / 2 for G with i.i.d. standard normal
    entries. Complex mode returns (G + G†) / 2 where the real parts of G
    are drawn first and the imaginary parts second. Either way the result
    is exactly self-adjoint as stored, and complex diagonals carry a
    bitwise-zero imaginary part.
    """
    gen = _generator(spec.seed)
    n = spec.n
    if spec.mode == "real":
        g = _standard_normals(gen, n * n).reshape(n, n)
        return (g + g.T) / 2.0
    re = _standard_normals(gen, n * n).reshape(n, n)
    im = _standard_normals(gen, n * n).reshape(n, n)
    g = re + 1j * im
    return (g + g.conj().T) / 2.0


def random_unit_vector(n: int, seed: int) -> np.ndarray:
    """Standard normal vector scaled to max norm 1, deterministic per seed."""
    if n < 1:
        raise DimensionError("vector dimension must be at least 1")
    gen = _generator(seed)
    return normalize_vec(_standard_normals(gen, n))
