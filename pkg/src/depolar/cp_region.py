"""Complete positivity of compression maps.

The numeric route diagonalizes the Choi matrix ``B``. For ``N = 2, 3, 4``
the eigenvalues are also available in closed form as functions of the
compression factors; those are evaluated here so the two routes can be
compared.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .channels import CompressionMap, build_channel
from .su_basis import BasisKind, DimensionError, GeneratorBasis, default_basis

CP_TOL = 1e-9
BOUNDARY_TOL = 1e-7


class Region(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    EXTERIOR = "exterior"


@dataclass(frozen=True, eq=False)
class ClosedFormValues:
    """Named closed-form quantities for one compression vector.

    For ``N = 2`` and ``N = 4`` the values are the Choi eigenvalues
    themselves. For ``N = 3`` they are the six hyperplanes ``h1..h6`` and
    the invariants ``h7, s1, s2`` of the 3x3 block ``H`` whose eigenvalues
    make up the rest of the spectrum.
    """

    dim: int
    names: tuple[str, ...]
    values: np.ndarray
    H: np.ndarray | None = None

    def as_dict(self) -> dict[str, float]:
        return {k: float(v) for k, v in zip(self.names, self.values)}

    def __getitem__(self, name: str) -> float:
        return float(self.values[self.names.index(name)])

    def spectrum(self) -> np.ndarray:
        """Sorted closed-form eigenvalues of ``B`` (eigensolves ``H`` for ``N = 3``)."""
        if self.H is None:
            return np.sort(self.values)
        return np.sort(np.concatenate([self.values[:6], np.linalg.eigvalsh(self.H)]))

    def is_cp(self, tol: float = CP_TOL) -> bool:
        return bool(np.all(self.values >= -tol))


@dataclass(frozen=True, eq=False)
class CPReport:
    eigenvalues: np.ndarray
    min_eigenvalue: float
    is_cp: bool
    tolerance: float
    closed_form: ClosedFormValues | None = None

    @property
    def agreement_max_delta(self) -> float | None:
        """Largest sorted-elementwise gap between closed-form and numeric spectra."""
        if self.closed_form is None:
            return None
        return float(np.abs(self.closed_form.spectrum() - self.eigenvalues).max())


def _nu(nu, length: int) -> np.ndarray:
    nu = np.asarray(nu, dtype=float)
    if nu.shape != (length,):
        raise DimensionError(f"expected {length} compression factors, got shape {nu.shape}")
    return nu


# Sign patterns (s1, s2, s3) with s1 * s2 * s3 = +1: one per tetrahedron vertex.
QUBIT_SIGNS = np.array([[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]])


def qubit_closed_form(nu) -> ClosedFormValues:
    """Choi eigenvalues ``(1 + s . nu) / 2`` of a qubit compression map.

    Each vanishes on the face of the tetrahedron opposite one of the
    vertices ``(1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1)``.
    """
    nu = _nu(nu, 3)
    vals = (1 + QUBIT_SIGNS @ nu) / 2
    return ClosedFormValues(2, ("l0", "l1", "l2", "l3"), vals)


def qutrit_H(nu) -> np.ndarray:
    n1, n2, n3, n4, n5, n6, n7, n8 = _nu(nu, 8)
    return np.array(
        [
            [(2 + 3 * n3 + n8) / 6, (n1 + n2) / 2, (n4 + n5) / 2],
            [(n1 + n2) / 2, (2 + 3 * n3 + n8) / 6, (n6 + n7) / 2],
            [(n4 + n5) / 2, (n6 + n7) / 2, (1 + 2 * n8) / 3],
        ]
    )


def qutrit_closed_form(nu) -> ClosedFormValues:
    """Hyperplanes ``h1..h6`` and the invariants of ``H`` for Gell-Mann order.

    ``h7``, ``s1`` and ``s2`` are the trace, sum of principal 2x2 minors and
    determinant of ``H``, i.e. the elementary symmetric functions of its
    eigenvalues.
    """
    n1, n2, n3, n4, n5, n6, n7, n8 = nu = _nu(nu, 8)
    h = [
        (2 + 3 * n4 - 3 * n5 - 2 * n8) / 6,
        (2 - 3 * n4 + 3 * n5 - 2 * n8) / 6,
        (2 + 3 * n6 - 3 * n7 - 2 * n8) / 6,
        (2 - 3 * n6 + 3 * n7 - 2 * n8) / 6,
        (2 + 3 * n1 - 3 * n2 - 3 * n3 + n8) / 6,
        (2 - 3 * n1 + 3 * n2 - 3 * n3 + n8) / 6,
    ]
    H = qutrit_H(nu)
    h7 = np.trace(H)
    s1 = (
        H[0, 0] * H[1, 1] - H[0, 1] ** 2
        + H[1, 1] * H[2, 2] - H[1, 2] ** 2
        + H[0, 0] * H[2, 2] - H[0, 2] ** 2
    )
    s2 = np.linalg.det(H)
    names = ("h1", "h2", "h3", "h4", "h5", "h6", "h7", "s1", "s2")
    return ClosedFormValues(3, names, np.array(h + [h7, s1, s2]), H)


def qutrit_invariant_polynomials(nu) -> tuple[float, float, float]:
    """``h7, s1, s2`` as explicit polynomials in the compression factors.

    Independent of :func:`qutrit_H`; used to cross-check the expansion.
    """
    n1, n2, n3, n4, n5, n6, n7, n8 = _nu(nu, 8)
    p, q, r = n1 + n2, n4 + n5, n6 + n7
    h7 = 1 + n3 + n8
    s1 = (
        -3 * p**2 + 3 * n3**2 - 3 * q**2 - 3 * r**2
        + (2 + n8) * (2 + 3 * n8) + 2 * n3 * (4 + 5 * n8)
    ) / 12
    s2 = (
        54 * n2 * q * r
        - 18 * n1**2 * (1 + 2 * n8)
        - 18 * n2**2 * (1 + 2 * n8)
        + 18 * n1 * (3 * q * r - 2 * n2 * (1 + 2 * n8))
        + (2 + 3 * n3 + n8)
        * (4 - 9 * q**2 - 9 * r**2 + 10 * n8 + 4 * n8**2 + 6 * n3 * (1 + 2 * n8))
    ) / 216
    return float(h7), float(s1), float(s2)


# Signs of nu_1..nu_15 in each of the sixteen N=4 eigenvalues (1 + signs . nu) / 4,
# generators ordered IX, IY, IZ, XI, YI, ZI, XX, XY, XZ, YX, YY, YZ, ZX, ZY, ZZ.
QUART_SIGNS = np.array(
    [
        [+1, +1, +1, +1, -1, -1, +1, +1, +1, -1, -1, -1, -1, -1, -1],
        [+1, +1, +1, -1, +1, -1, -1, -1, -1, +1, +1, +1, -1, -1, -1],
        [+1, -1, -1, +1, +1, +1, +1, -1, -1, +1, -1, -1, +1, -1, -1],
        [+1, -1, -1, -1, -1, +1, -1, +1, +1, -1, +1, +1, +1, -1, -1],
        [-1, +1, -1, +1, +1, +1, -1, +1, -1, -1, +1, -1, -1, +1, -1],
        [-1, +1, -1, -1, -1, +1, +1, -1, +1, +1, -1, +1, -1, +1, -1],
        [-1, -1, +1, +1, -1, -1, -1, -1, +1, +1, +1, -1, +1, +1, -1],
        [-1, -1, +1, -1, +1, -1, +1, +1, -1, -1, -1, +1, +1, +1, -1],
        [-1, -1, +1, -1, -1, +1, +1, +1, -1, +1, +1, -1, -1, -1, +1],
        [-1, -1, +1, +1, +1, +1, -1, -1, +1, -1, -1, +1, -1, -1, +1],
        [-1, +1, -1, -1, +1, -1, +1, -1, +1, -1, +1, -1, +1, -1, +1],
        [-1, +1, -1, +1, -1, -1, -1, +1, -1, +1, -1, +1, +1, -1, +1],
        [+1, -1, -1, -1, +1, -1, -1, +1, +1, +1, -1, -1, -1, +1, +1],
        [+1, -1, -1, +1, -1, -1, +1, -1, -1, -1, +1, +1, -1, +1, +1],
        [+1, +1, +1, -1, -1, +1, -1, -1, -1, -1, -1, -1, +1, +1, +1],
        [+1, +1, +1, +1, +1, +1, +1, +1, +1, +1, +1, +1, +1, +1, +1],
    ]
)


def quart_closed_form(nu) -> ClosedFormValues:
    """The sixteen affine Choi eigenvalues of an N=4 map in Pauli tensor order."""
    nu = _nu(nu, 15)
    vals = (1 + QUART_SIGNS @ nu) / 4
    return ClosedFormValues(4, tuple(f"l{i + 1}" for i in range(16)), vals)


def closed_form(nu, basis: GeneratorBasis) -> ClosedFormValues | None:
    """Closed form matching ``basis``, or ``None`` if none is known for it."""
    if basis.dim == 2:
        return qubit_closed_form(nu)
    if basis.dim == 3 and basis.kind is BasisKind.GELL_MANN:
        return qutrit_closed_form(nu)
    if basis.dim == 4 and basis.kind is BasisKind.PAULI_TENSOR:
        return quart_closed_form(nu)
    return None


def is_cp(cmap: CompressionMap, basis: GeneratorBasis | None = None, tol: float = CP_TOL) -> CPReport:
    """Decide complete positivity from the spectrum of the Choi matrix.

    The closed form is attached when one exists for the basis and the map is
    unital.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if basis is None:
        basis = default_basis(cmap.dim)
    B = build_channel(cmap, basis).B
    eig = np.linalg.eigvalsh(B)
    cf = closed_form(cmap.nu, basis) if cmap.is_unital else None
    lo = float(eig[0])
    return CPReport(eig, lo, lo >= -tol, tol, cf)


def classify(
    cmap: CompressionMap, basis: GeneratorBasis | None = None, boundary_tol: float = BOUNDARY_TOL
) -> Region:
    if boundary_tol <= 0:
        raise ValueError("boundary_tol must be positive")
    lo = is_cp(cmap, basis).min_eigenvalue
    if lo < -boundary_tol:
        return Region.EXTERIOR
    if abs(lo) <= boundary_tol:
        return Region.BOUNDARY
    return Region.INTERIOR
