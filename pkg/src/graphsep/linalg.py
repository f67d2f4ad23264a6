"""Dense symmetric-matrix kernels.

Covers what the rest of the package needs: a full eigendecomposition with
orthonormal vectors (cyclic Jacobi), positivity and diagonal-dominance
certificates, row-sum norms, Kronecker products, and the subsystem partial
transpose.  Everything here is a pure function over immutable inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import DimensionProfile

SYMMETRY_ATOL = 1e-12

_JACOBI_MAX_SWEEPS = 100
_JACOBI_OFF_FRACTION = 1e-13


def require_symmetric(matrix, atol: float = SYMMETRY_ATOL, name: str = "matrix") -> np.ndarray:
    """Return ``matrix`` as a float array, or raise if it is not square symmetric."""
    mat = np.asarray(matrix, dtype=float)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"{name} must be square, got shape {mat.shape}")
    if mat.size and float(np.max(np.abs(mat - mat.T))) > atol:
        raise ValueError(f"{name} is not symmetric within {atol}")
    return mat


@dataclass(frozen=True, eq=False)
class Eigendecomposition:
    """Eigenvalues in descending order with matching orthonormal columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def order(self) -> int:
        return int(self.eigenvalues.shape[0])

    def pairs(self):
        """Iterate ``(eigenvalue, eigenvector)`` in stored order."""
        for r in range(self.order):
            yield float(self.eigenvalues[r]), self.eigenvectors[:, r]

    def reconstruct(self) -> np.ndarray:
        """Sum of rank-one terms; should reproduce the input matrix."""
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.T


def spectral_decomposition(matrix) -> Eigendecomposition:
    """Full eigendecomposition of a symmetric matrix by cyclic Jacobi sweeps.

    Rotations run in fixed (p, q) order until the off-diagonal Frobenius
    mass drops below 1e-13 of the input norm, or 100 sweeps.  The rotation
    product keeps the vectors orthonormal even for repeated eigenvalues.
    Output order is descending by eigenvalue (stable), and each vector is
    sign-normalised so its first non-negligible component is positive.
    """
    a = require_symmetric(matrix).copy()
    n = a.shape[0]
    v = np.eye(n)
    norm = float(np.linalg.norm(a))
    if n > 1 and norm > 0.0:
        stop = _JACOBI_OFF_FRACTION * norm
        # Entries below `skip` cannot push the off-mass above `stop` even if
        # every off-diagonal sits at that size.
        skip = stop / (2.0 * n)
        for _ in range(_JACOBI_MAX_SWEEPS):
            off = a - np.diag(np.diagonal(a))
            if float(np.linalg.norm(off)) <= stop:
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if abs(apq) <= skip:
                        continue
                    tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                    t = np.sign(tau) / (abs(tau) + np.hypot(1.0, tau))
                    if tau == 0.0:
                        t = 1.0
                    c = 1.0 / np.hypot(1.0, t)
                    s = t * c
                    col_p = a[:, p].copy()
                    col_q = a[:, q].copy()
                    a[:, p] = c * col_p - s * col_q
                    a[:, q] = s * col_p + c * col_q
                    row_p = a[p, :].copy()
                    row_q = a[q, :].copy()
                    a[p, :] = c * row_p - s * row_q
                    a[q, :] = s * row_p + c * row_q
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    vec_p = v[:, p].copy()
                    vec_q = v[:, q].copy()
                    v[:, p] = c * vec_p - s * vec_q
                    v[:, q] = s * vec_p + c * vec_q
    values = np.diagonal(a).copy()
    order = np.argsort(-values, kind="stable")
    values = values[order]
    vectors = v[:, order].copy()
    for r in range(n):
        col = vectors[:, r]
        tol = 1e-12 * max(1.0, float(np.max(np.abs(col))))
        for x in col:
            if abs(x) > tol:
                if x < 0.0:
                    vectors[:, r] = -col
                break
    return Eigendecomposition(values, vectors)


@dataclass(frozen=True)
class PsdCertificate:
    """Positive-semidefiniteness verdict with the extreme eigenvalues."""

    psd: bool
    min_eigenvalue: float
    max_eigenvalue: float
    tolerance: float

    def __bool__(self) -> bool:
        return self.psd


def is_psd(matrix, tol: float = 1e-9) -> PsdCertificate:
    """Check ``lambda_min >= -tol * max(1, |lambda_max|)``.

    The tolerance scales with the largest eigenvalue magnitude (floored at
    one) so the verdict does not depend on overall matrix scale.
    """
    mat = require_symmetric(matrix)
    values = np.linalg.eigvalsh(mat)
    lo = float(values[0])
    hi = float(values[-1])
    return PsdCertificate(lo >= -tol * max(1.0, abs(hi)), lo, hi, tol)


@dataclass(frozen=True)
class DominanceCertificate:
    """Row-by-row diagonal dominance verdict."""

    dominant: bool
    violating_rows: tuple[int, ...]

    def __bool__(self) -> bool:
        return self.dominant


def is_diagonally_dominant(matrix, tol: float = 1e-12) -> DominanceCertificate:
    """Check each diagonal entry against its absolute off-diagonal row sum.

    A row passes when ``m[i, i] >= sum_j |m[i, j]| - m[i, i]`` up to a small
    relative slack, and the diagonal entry is positive whenever the row has
    any off-diagonal mass.  Integer inputs are judged exactly; the slack only
    absorbs float rounding in computed matrices.  Violating rows are listed
    0-based.
    """
    mat = np.asarray(matrix, dtype=float)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"matrix must be square, got shape {mat.shape}")
    diag = np.diagonal(mat)
    off = np.sum(np.abs(mat), axis=1) - np.abs(diag)
    scale = np.maximum(1.0, np.maximum(np.abs(diag), off))
    slack = tol * scale
    dominated = diag >= off - slack
    positive = (diag > 0.0) | (off <= slack)
    ok = dominated & positive
    violating = tuple(int(i) for i in np.nonzero(~ok)[0])
    return DominanceCertificate(not violating, violating)


def inf_norm(matrix) -> float:
    """Maximum absolute row sum."""
    mat = np.asarray(matrix, dtype=float)
    if mat.size == 0:
        return 0.0
    return float(np.max(np.sum(np.abs(mat), axis=1)))


def spectral_radius_bound(matrix) -> float:
    """Upper bound on the largest eigenvalue magnitude (the row-sum norm)."""
    return inf_norm(matrix)


def kron(factors) -> np.ndarray:
    """Kronecker product of the factors, left to right."""
    factors = list(factors)
    if not factors:
        raise ValueError("kron needs at least one factor")
    out = np.asarray(factors[0])
    for factor in factors[1:]:
        out = np.kron(out, np.asarray(factor))
    return out


def partial_transpose_matrix(matrix, profile: DimensionProfile, subsystem: int) -> np.ndarray:
    """Transpose the given subsystem's index pair, leaving the others alone.

    Entry ((.., i_t, ..), (.., j_t, ..)) moves to ((.., j_t, ..), (.., i_t, ..)).
    Pure reindexing: exact, trace-preserving, and an involution.
    """
    mat = np.asarray(matrix)
    total = profile.total
    if mat.shape != (total, total):
        raise ValueError(
            f"matrix order {mat.shape} does not match profile total {total}"
        )
    n = profile.n
    if not 1 <= subsystem <= n:
        raise ValueError(f"subsystem {subsystem} out of range 1..{n}")
    tensor = mat.reshape(profile.dims + profile.dims)
    tensor = np.swapaxes(tensor, subsystem - 1, n + subsystem - 1)
    return tensor.reshape(total, total).copy()
