"""Generator bases of SU(N) and the density-matrix <-> coherence-vector map.

Every basis is normalized so that ``Tr(J_i J_j) = 2 delta_ij``. A density
matrix is written as

    rho = (I + c * sum_i a_i J_i) / N,    c = sqrt(N (N - 1) / 2),

so that pure states have coherence vectors of unit length.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
ORTHOGONALITY_TOL = 1e-12
STATE_TRACE_TOL = 1e-9


class DimensionError(ValueError):
    """Raised for invalid dimensions or mismatched array lengths."""


class MalformedStateError(ValueError):
    """Raised when a matrix is not a valid (unit trace, Hermitian) state."""


class BasisKind(enum.Enum):
    GELL_MANN = "gell-mann"
    PAULI_TENSOR = "pauli-tensor"


PAULI = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
_PAULI_NAMES = ("I", "X", "Y", "Z")


@dataclass(frozen=True, eq=False)
class GeneratorBasis:
    """Ordered set of ``N**2 - 1`` generators of SU(N).

    The ordering is significant: the ``i``-th compression factor of a map
    acts on the coefficient of ``generators[i]``.
    """

    dim: int
    generators: np.ndarray
    kind: BasisKind
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        gens = np.array(self.generators, dtype=complex)
        n = self.dim
        if gens.shape != (n * n - 1, n, n):
            raise DimensionError(
                f"expected {n * n - 1} generators of shape ({n}, {n}), got {gens.shape}"
            )
        gens.setflags(write=False)
        object.__setattr__(self, "generators", gens)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"J{i + 1}" for i in range(n * n - 1)))

    @property
    def norm_constant(self) -> float:
        return float(np.sqrt(self.dim * (self.dim - 1) / 2))

    def __len__(self) -> int:
        return len(self.generators)


def gell_mann_basis(N: int) -> GeneratorBasis:
    """Generalized Gell-Mann matrices for SU(N).

    Generators are produced block by block: for ``k = 2, ..., N`` the
    symmetric and antisymmetric pair for each ``j < k`` (in order of ``j``)
    followed by the ``(k - 1)``-th diagonal generator. For ``N = 2`` this is
    ``(sigma_x, sigma_y, sigma_z)`` and for ``N = 3`` it is the usual
    ``lambda_1 ... lambda_8``.
    """
    if N < 2:
        raise DimensionError(f"N must be >= 2, got {N}")
    gens, labels = [], []
    for k in range(1, N):
        for j in range(k):
            sym = np.zeros((N, N), dtype=complex)
            sym[j, k] = sym[k, j] = 1
            anti = np.zeros((N, N), dtype=complex)
            anti[j, k] = -1j
            anti[k, j] = 1j
            gens += [sym, anti]
            labels += [f"S{j + 1}{k + 1}", f"A{j + 1}{k + 1}"]
        diag = np.zeros(N)
        diag[:k] = 1
        diag[k] = -k
        gens.append(np.sqrt(2 / (k * (k + 1))) * np.diag(diag).astype(complex))
        labels.append(f"D{k}")
    return GeneratorBasis(N, np.array(gens), BasisKind.GELL_MANN, tuple(labels))


def pauli_labels(n_qubits: int) -> list[tuple[int, ...]]:
    """Non-identity Pauli strings, ordered by weight then lexicographically.

    Each string is a tuple of indices into ``(I, X, Y, Z)``. For two qubits
    this gives ``IX, IY, IZ, XI, YI, ZI, XX, XY, ..., ZZ``.
    """
    strings = [s for s in itertools.product(range(4), repeat=n_qubits) if any(s)]
    return sorted(strings, key=lambda s: (sum(1 for p in s if p), s))


def pauli_string(indices) -> np.ndarray:
    """Unnormalized tensor product of Pauli matrices."""
    return reduce(np.kron, (PAULI[i] for i in indices))


def pauli_tensor_basis(n_qubits: int) -> GeneratorBasis:
    """Pauli tensor products generating SU(2**n), scaled to ``Tr(J_i J_j) = 2 delta_ij``."""
    if n_qubits < 1:
        raise DimensionError(f"n_qubits must be >= 1, got {n_qubits}")
    scale = 2 ** ((n_qubits - 1) / 2)
    strings = pauli_labels(n_qubits)
    gens = np.array([pauli_string(s) / scale for s in strings])
    labels = tuple("".join(_PAULI_NAMES[i] for i in s) for s in strings)
    return GeneratorBasis(2**n_qubits, gens, BasisKind.PAULI_TENSOR, labels)


def default_basis(N: int) -> GeneratorBasis:
    """Pauli tensor basis when ``N`` is a power of two above 2, Gell-Mann otherwise."""
    if N >= 4 and N & (N - 1) == 0:
        return pauli_tensor_basis(N.bit_length() - 1)
    return gell_mann_basis(N)


def density_from_coherence(a, basis: GeneratorBasis) -> np.ndarray:
    """Density matrix with coherence vector ``a``. Positivity is not checked."""
    a = np.asarray(a, dtype=float)
    if a.shape != (len(basis),):
        raise DimensionError(f"coherence vector must have length {len(basis)}, got shape {a.shape}")
    N = basis.dim
    return (np.eye(N) + basis.norm_constant * np.tensordot(a, basis.generators, axes=1)) / N


def coherence_from_density(rho, basis: GeneratorBasis) -> np.ndarray:
    """Inverse of :func:`density_from_coherence`.

    :param rho: Hermitian ``N x N`` matrix with unit trace.
    :param basis: basis the coherence vector refers to.
    :return: real array of length ``N**2 - 1``.
    """
    rho = np.asarray(rho, dtype=complex)
    N = basis.dim
    if rho.shape != (N, N):
        raise DimensionError(f"expected a {N}x{N} matrix, got shape {rho.shape}")
    tr = np.trace(rho)
    if abs(tr - 1) > STATE_TRACE_TOL:
        raise MalformedStateError(f"density matrix trace is {tr}, expected 1")
    # Tr(rho J_i) for all i at once; J_i^T contracted elementwise.
    overlaps = np.einsum("ij,kji->k", rho, basis.generators)
    return N * overlaps.real / (2 * basis.norm_constant)


@dataclass(frozen=True)
class BasisReport:
    hermiticity: np.ndarray
    tracelessness: np.ndarray
    orthogonality: float

    def ok(self, tol: float = ORTHOGONALITY_TOL) -> bool:
        return bool(
            self.hermiticity.max(initial=0.0) <= tol
            and self.tracelessness.max(initial=0.0) <= tol
            and self.orthogonality <= tol
        )


def validate_basis(basis: GeneratorBasis) -> BasisReport:
    """Measure how far a basis is from Hermitian, traceless and trace-orthogonal.

    ``hermiticity[i]`` is ``max|J_i - J_i^dagger|``, ``tracelessness[i]`` is
    ``|Tr J_i|`` and ``orthogonality`` is ``max|Tr(J_i J_j) - 2 delta_ij|``.
    """
    gens = basis.generators
    herm = np.abs(gens - gens.conj().transpose(0, 2, 1)).max(axis=(1, 2))
    trace = np.abs(np.trace(gens, axis1=1, axis2=2))
    gram = np.einsum("iab,jba->ij", gens, gens)
    ortho = np.abs(gram - 2 * np.eye(len(gens))).max()
    return BasisReport(herm, trace, float(ortho))
