"""Geometry of the CP region in the space of compression factors.

Monte-Carlo sampling, the unitary extremal maps of Pauli-tensor bases,
simplex decompositions, a joint-diagonalizability test for the
2**n simplex conjecture, and boundary probing for the curved N=3 region.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .channels import CompressionMap, build_channel, choi_batch
from .cp_region import CP_TOL, qutrit_closed_form
from .su_basis import (
    BasisKind,
    DimensionError,
    GeneratorBasis,
    default_basis,
    gell_mann_basis,
    pauli_tensor_basis,
)

CHUNK = 1 << 15
WEIGHT_TOL = 1e-10
RANK_ONE_TOL = 1e-9
BISECTION_STEPS = 60


class UnsupportedBasisError(ValueError):
    pass


class DecompositionError(ValueError):
    pass


# --------------------------------------------------------------------------
# Sampling
# --------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class RegionSample:
    dim: int
    nu: np.ndarray
    is_cp: np.ndarray
    min_eigenvalue: np.ndarray
    seed: int
    n_total: int

    @property
    def cp_fraction(self) -> float:
        return float(self.is_cp.mean()) if self.n_total else 0.0


def evaluate_points(nus, basis: GeneratorBasis, tol: float = CP_TOL):
    """Minimum Choi eigenvalue and CP flag for each row of ``nus``."""
    nus = np.atleast_2d(np.asarray(nus, dtype=float))
    lo = np.empty(len(nus))
    # bound the (k, N^2, N^2) temporaries to ~64 MB
    step = max(1, (1 << 22) // basis.dim**4)
    for i in range(0, len(nus), step):
        lo[i : i + step] = np.linalg.eigvalsh(choi_batch(nus[i : i + step], basis))[:, 0]
    return lo, lo >= -tol


def sample_region(
    N: int,
    n_samples: int,
    seed: int = 0,
    tol: float = CP_TOL,
    basis: GeneratorBasis | None = None,
    workers: int = 1,
) -> RegionSample:
    """Uniform samples of ``nu`` in ``[-1, 1]^(N^2 - 1)`` with their CP verdicts.

    Points are drawn in fixed-size chunks, each from its own child of
    ``SeedSequence(seed)``, so the output does not depend on ``workers``.
    """
    if n_samples < 1:
        raise ValueError("n_samples must be >= 1")
    basis = basis or default_basis(N)
    if basis.dim != N:
        raise DimensionError(f"basis has dim {basis.dim}, expected {N}")
    d = N * N - 1
    n_chunks = -(-n_samples // CHUNK)
    streams = np.random.SeedSequence(seed).spawn(n_chunks)

    def run(k):
        size = min(CHUNK, n_samples - k * CHUNK)
        pts = np.random.default_rng(streams[k]).uniform(-1.0, 1.0, size=(size, d))
        return pts, *evaluate_points(pts, basis, tol)

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(run, range(n_chunks)))
    else:
        parts = [run(k) for k in range(n_chunks)]
    nu = np.concatenate([p[0] for p in parts])
    lo = np.concatenate([p[1] for p in parts])
    flags = np.concatenate([p[2] for p in parts])
    return RegionSample(N, nu, flags, lo, seed, n_samples)


# --------------------------------------------------------------------------
# Extremal maps
# --------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class VertexMap:
    generator_index: int
    label: str
    unitary: np.ndarray
    nu_pattern: np.ndarray
    choi_rank_one: bool = field(default=False)


def _pauli_scale(basis: GeneratorBasis) -> float:
    n_qubits = basis.dim.bit_length() - 1
    if basis.dim != 2**n_qubits:
        raise UnsupportedBasisError(f"dimension {basis.dim} is not a power of two")
    return 2 ** ((n_qubits - 1) / 2)


def vertices_from_unitaries(basis: GeneratorBasis) -> list[VertexMap]:
    """The ``N**2`` maps ``rho -> U rho U^dagger`` with ``U`` the identity or a Pauli string.

    Conjugation by ``U`` leaves ``J_j`` alone if they commute and flips its
    sign if they anticommute, so each such map is a compression map with a
    ``+-1`` pattern. Each pattern is checked to have a rank-one Choi matrix.
    """
    if basis.kind is not BasisKind.PAULI_TENSOR and basis.dim != 2:
        raise UnsupportedBasisError("extremal unitaries need a Pauli tensor basis")
    N = basis.dim
    scale = _pauli_scale(basis)
    gens = basis.generators
    unitaries = [np.eye(N, dtype=complex)] + [scale * J for J in gens]
    labels = ["I" * (N.bit_length() - 1)] + list(basis.labels)
    out = []
    for idx, (U, label) in enumerate(zip(unitaries, labels)):
        conj = U @ gens @ U.conj().T
        pattern = np.where(np.abs(conj - gens).max(axis=(1, 2)) < 1e-9, 1.0, -1.0)
        eig = np.linalg.eigvalsh(build_channel(CompressionMap(N, pattern), basis).B)
        target = np.zeros(N * N)
        target[-1] = N
        ok = bool(np.abs(eig - target).max() <= RANK_ONE_TOL)
        out.append(VertexMap(idx, label, U, pattern, ok))
    return out


@dataclass(frozen=True, eq=False)
class ConvexDecomposition:
    weights: np.ndarray
    residual: float

    @property
    def in_simplex(self) -> bool:
        return bool(np.all(self.weights >= -WEIGHT_TOL))


def convex_decomposition(nu, vertices: list[VertexMap]) -> ConvexDecomposition:
    """Barycentric coordinates of ``nu`` with respect to the vertex patterns.

    Solves ``sum_k w_k pattern_k = nu`` with ``sum_k w_k = 1``. The point is
    inside the simplex iff every weight is non-negative.
    """
    nu = np.asarray(nu, dtype=float)
    P = np.array([v.nu_pattern for v in vertices])
    if P.shape != (len(nu) + 1, len(nu)):
        raise DimensionError(
            f"need {len(nu) + 1} vertices of length {len(nu)}, got array of shape {P.shape}"
        )
    system = np.vstack([P.T, np.ones(len(P))])
    rhs = np.append(nu, 1.0)
    try:
        w = np.linalg.solve(system, rhs)
    except np.linalg.LinAlgError as exc:
        raise DecompositionError("vertex patterns are affinely dependent") from exc
    residual = float(np.abs(system @ w - rhs).max())
    return ConvexDecomposition(w, residual)


# --------------------------------------------------------------------------
# Simplex conjecture
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ConjectureReport:
    n_qubits: int
    dim: int
    trials: int
    seed: int
    tolerance: float
    max_commutator: float
    max_offdiagonal: float
    max_spectrum_delta: float
    simplex_consistent: bool

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def test_simplex_conjecture(
    n_qubits: int, trials: int = 100, seed: int = 0, tol: float = 1e-10
) -> ConjectureReport:
    """Check that every Choi eigenvalue is an affine function of ``nu``.

    ``B(nu) = B(0) + sum_j nu_j (B(e_j) - B(0))``, so the eigenvalues are all
    affine (the CP region is cut out by ``N**2`` hyperplanes) exactly when the
    ``B(e_j)`` commute pairwise. The common eigenbasis is then used to
    predict the spectrum at ``trials`` random points, which is compared with
    a direct eigensolve.
    """
    if n_qubits < 1:
        raise DimensionError("n_qubits must be >= 1")
    if trials < 2:
        raise ValueError("trials must be >= 2")
    basis = pauli_tensor_basis(n_qubits)
    N, d = basis.dim, len(basis)
    B0 = choi_batch(np.zeros(d), basis)[0]
    Bj = choi_batch(np.eye(d), basis)

    max_comm = 0.0
    for i in range(d):
        comm = Bj[i] @ Bj[i + 1 :] - Bj[i + 1 :] @ Bj[i]
        if len(comm):
            max_comm = max(max_comm, float(np.abs(comm).max()))

    rng = np.random.default_rng(seed)
    D = Bj - B0
    # eigenvectors of a generic element of the family diagonalize all of it if it commutes
    mix = B0 + np.tensordot(rng.uniform(-1, 1, d), D, axes=1)
    _, V = np.linalg.eigh(mix)
    Dt = V.conj().T @ D @ V
    B0t = V.conj().T @ B0 @ V
    off = Dt - np.einsum("kii->ki", Dt)[:, :, None] * np.eye(N * N)
    max_off = float(np.abs(off).max())
    base = np.diag(B0t).real
    slopes = np.einsum("kii->ki", Dt).real

    nus = rng.uniform(-1, 1, size=(trials, d))
    predicted = np.sort(base + nus @ slopes, axis=1)
    actual = np.linalg.eigvalsh(choi_batch(nus, basis))
    delta = float(np.abs(predicted - actual).max())

    ok = max_comm <= tol and delta <= max(tol, 1e-9)
    return ConjectureReport(n_qubits, N, trials, seed, tol, max_comm, max_off, delta, ok)


test_simplex_conjecture.__test__ = False


# --------------------------------------------------------------------------
# Boundary probing (N = 3)
# --------------------------------------------------------------------------

QUTRIT_CONSTRAINTS = ("h1", "h2", "h3", "h4", "h5", "h6", "h7", "s1", "s2")


def _min_eig(nu, basis) -> float:
    return float(np.linalg.eigvalsh(choi_batch(nu, basis)[0])[0])


def boundary_point(direction, basis: GeneratorBasis, max_scale: float = 1e3) -> np.ndarray:
    """Point where the ray from the origin along ``direction`` leaves the CP region."""
    direction = np.asarray(direction, dtype=float)
    lo, hi = 0.0, 1.0
    while _min_eig(hi * direction, basis) >= 0:
        lo, hi = hi, 2 * hi
        if hi > max_scale:
            raise ValueError("ray does not leave the CP region")
    for _ in range(BISECTION_STEPS):
        mid = (lo + hi) / 2
        if _min_eig(mid * direction, basis) >= 0:
            lo = mid
        else:
            hi = mid
    return lo * direction


def active_constraints(nu, tie_tol: float = 1e-8) -> tuple[str, ...]:
    """Qutrit constraints whose value is (within ``tie_tol``) the smallest in magnitude."""
    vals = np.abs(qutrit_closed_form(nu).values)
    return tuple(n for n, v in zip(QUTRIT_CONSTRAINTS, vals) if v <= vals.min() + tie_tol)


@dataclass(frozen=True, eq=False)
class FacetReport:
    points: np.ndarray
    min_eigenvalues: np.ndarray
    active: list[tuple[str, ...]]
    counts: dict[str, int]

    @property
    def curvature_witness(self) -> bool:
        return self.counts.get("s1", 0) + self.counts.get("s2", 0) > 0


def facet_check(N: int, n_probes: int, seed: int = 0, directions=None) -> FacetReport:
    """Locate boundary points along random rays and attribute each to a constraint.

    ``directions`` overrides the random rays (one row per probe).
    """
    if N != 3:
        raise UnsupportedBasisError("boundary attribution is only implemented for N = 3")
    basis = gell_mann_basis(3)
    if directions is None:
        rng = np.random.default_rng(seed)
        directions = rng.normal(size=(n_probes, 8))
        directions /= np.linalg.norm(directions, axis=1, keepdims=True)
    directions = np.asarray(directions, dtype=float).reshape(-1, 8)
    points = np.array([boundary_point(u, basis) for u in directions]).reshape(-1, 8)
    lows = np.array([_min_eig(p, basis) for p in points])
    active = [active_constraints(p) for p in points]
    counts = {name: sum(name in a for a in active) for name in QUTRIT_CONSTRAINTS}
    return FacetReport(points, lows, active, counts)
