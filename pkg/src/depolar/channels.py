"""Process (A) and Choi-ordered (B) matrices of compression maps.

A compression map multiplies each coherence component by a factor
``nu_i`` and optionally adds a translation ``t_i``. It acts on the vector
``(1, a)`` through the matrix ``T``; ``M`` takes ``(1, a)`` to the row-major
vectorization of the density matrix, so that ``A = M T M^-1`` acts on
``vec(rho)`` directly.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .su_basis import DimensionError, GeneratorBasis

CHOI_HERMITIAN_TOL = 1e-12
CHOI_TRACE_TOL = 1e-10


def vec(matrix) -> np.ndarray:
    """Row-major vectorization ``(rho_11, rho_12, ..., rho_1N, rho_21, ...)``."""
    return np.asarray(matrix).reshape(-1)


def unvec(vector) -> np.ndarray:
    vector = np.asarray(vector)
    n = int(round(np.sqrt(vector.size)))
    return vector.reshape(n, n)


def _frozen_vector(values, length: int, name: str) -> np.ndarray:
    arr = np.array(values, dtype=float)
    if arr.shape != (length,):
        raise DimensionError(f"{name} must have length {length}, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} has non-finite entries")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class CompressionMap:
    """Diagonal unital part ``nu`` plus an optional translation ``t``.

    ``nu`` is not range-restricted; deciding which ``nu`` give a CP map is
    the point of the exercise.
    """

    dim: int
    nu: np.ndarray
    translation: np.ndarray | None = None

    def __post_init__(self):
        if self.dim < 2:
            raise DimensionError(f"dim must be >= 2, got {self.dim}")
        n = self.dim**2 - 1
        object.__setattr__(self, "nu", _frozen_vector(self.nu, n, "nu"))
        if self.translation is not None:
            object.__setattr__(
                self, "translation", _frozen_vector(self.translation, n, "translation")
            )

    @property
    def is_unital(self) -> bool:
        return self.translation is None or not np.any(self.translation)


@dataclass(frozen=True, eq=False)
class ChannelMatrices:
    dim: int
    A: np.ndarray
    B: np.ndarray


def build_T(cmap: CompressionMap) -> np.ndarray:
    n = cmap.dim**2
    T = np.zeros((n, n))
    T[0, 0] = 1.0
    T[np.arange(1, n), np.arange(1, n)] = cmap.nu
    if cmap.translation is not None:
        T[1:, 0] = cmap.translation
    return T


def build_M(basis: GeneratorBasis) -> np.ndarray:
    """Matrix taking ``(1, a)`` to ``vec(rho)``.

    Column 0 is ``vec(I / N)``, column ``j`` is ``vec(c J_j / N)``.
    """
    N = basis.dim
    c = basis.norm_constant
    cols = [vec(np.eye(N, dtype=complex) / N)]
    cols += [vec(c * J / N) for J in basis.generators]
    return np.column_stack(cols)


def transfer_matrices(basis: GeneratorBasis) -> tuple[np.ndarray, np.ndarray]:
    """``(M, M^-1)`` for ``basis``, computed once and stored on the basis."""
    cached = basis.__dict__.get("_transfer")
    if cached is None:
        M = build_M(basis)
        try:
            M_inv = np.linalg.inv(M)
        except np.linalg.LinAlgError as exc:
            raise RuntimeError("M is singular; the basis is not a valid SU(N) basis") from exc
        M.setflags(write=False)
        M_inv.setflags(write=False)
        # setdefault is atomic, so concurrent first calls agree on one pair
        cached = basis.__dict__.setdefault("_transfer", (M, M_inv))
    return cached


def _check_dims(cmap: CompressionMap, basis: GeneratorBasis):
    if cmap.dim != basis.dim:
        raise DimensionError(f"map has dim {cmap.dim} but basis has dim {basis.dim}")


def build_A(cmap: CompressionMap, basis: GeneratorBasis) -> np.ndarray:
    _check_dims(cmap, basis)
    M, M_inv = transfer_matrices(basis)
    return M @ build_T(cmap) @ M_inv


def reshuffle(X) -> np.ndarray:
    """Swap the inner index pair: ``out[(r, r'), (s, s')] = X[(r, s), (r', s')]``.

    The operation is an involution.
    """
    X = np.asarray(X)
    side = X.shape[0]
    n = int(round(np.sqrt(side)))
    if X.ndim != 2 or X.shape != (side, side) or n * n != side:
        raise DimensionError(f"expected a square matrix with perfect-square side, got {X.shape}")
    return X.reshape(n, n, n, n).transpose(0, 2, 1, 3).reshape(side, side)


def build_channel(cmap: CompressionMap, basis: GeneratorBasis) -> ChannelMatrices:
    A = build_A(cmap, basis)
    return ChannelMatrices(cmap.dim, A, reshuffle(A))


def choi_batch(nus, basis: GeneratorBasis) -> np.ndarray:
    """Choi matrices for a stack of unital compression vectors.

    :param nus: array of shape ``(k, N**2 - 1)``.
    :return: complex array of shape ``(k, N**2, N**2)``.
    """
    nus = np.atleast_2d(np.asarray(nus, dtype=float))
    if nus.shape[1] != len(basis):
        raise DimensionError(f"nu vectors must have length {len(basis)}, got {nus.shape[1]}")
    M, M_inv = transfer_matrices(basis)
    diag = np.concatenate([np.ones((len(nus), 1)), nus], axis=1)
    # M @ diag(d) @ M_inv, batched
    A = (M[None, :, :] * diag[:, None, :]) @ M_inv
    n = basis.dim
    side = n * n
    return A.reshape(-1, n, n, n, n).transpose(0, 1, 3, 2, 4).reshape(-1, side, side)


def apply_channel(channel: ChannelMatrices, rho) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    N = channel.dim
    if rho.shape != (N, N):
        raise DimensionError(f"expected a {N}x{N} matrix, got shape {rho.shape}")
    return unvec(channel.A @ vec(rho))
