"""Hermitian-matrix utilities: principal square roots, tolerant rank, null spaces.

Everything here is a thin, carefully-toleranced layer over numpy's Hermitian
eigendecomposition.  Eigenvalues in [-psd_tol * ||P||_F, 0) are treated as
roundoff from Gram assembly and clamped to zero; anything more negative is
rejected as indefinite.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_TOLERANCES, ToleranceConfig
from .errors import (
    DimensionMismatchError,
    IndefiniteError,
    NotHermitianError,
    SingularMatrixError,
)

__all__ = [
    "EigenDecomposition",
    "eigh_decomposition",
    "herm_sqrt",
    "herm_inv_sqrt",
    "rank_tol",
    "null_space_basis",
    "null_space_included",
]


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    """Eigenvalues (ascending, real) and a unitary eigenvector matrix."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _as_square(p) -> np.ndarray:
    arr = np.asarray(p)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {arr.shape}")
    return arr


def _check_hermitian(p: np.ndarray, cfg: ToleranceConfig) -> None:
    deviation = np.linalg.norm(p - p.conj().T)
    if deviation > cfg.hermitian_tol * max(1.0, np.linalg.norm(p)):
        raise NotHermitianError(
            f"matrix is not Hermitian: ||P - P^H||_F = {deviation:.3e}"
        )


def eigh_decomposition(p, cfg: ToleranceConfig | None = None) -> EigenDecomposition:
    """Hermitian eigendecomposition of the symmetrized input."""
    cfg = cfg or DEFAULT_TOLERANCES
    arr = _as_square(p)
    _check_hermitian(arr, cfg)
    w, v = np.linalg.eigh((arr + arr.conj().T) / 2.0)
    return EigenDecomposition(w, v)


def herm_sqrt(p, cfg: ToleranceConfig | None = None) -> np.ndarray:
    """The principal PSD square root S of a Hermitian PSD matrix, S @ S = P."""
    cfg = cfg or DEFAULT_TOLERANCES
    dec = eigh_decomposition(p, cfg)
    w, v = dec.eigenvalues, dec.eigenvectors
    floor = -cfg.psd_tol * np.linalg.norm(np.asarray(p))
    if w[0] < floor:
        raise IndefiniteError(
            f"matrix is not PSD: min eigenvalue {w[0]:.3e} below {floor:.3e}"
        )
    w = np.clip(w, 0.0, None)
    s = (v * np.sqrt(w)) @ v.conj().T
    return (s + s.conj().T) / 2.0


def herm_inv_sqrt(p, cfg: ToleranceConfig | None = None) -> np.ndarray:
    """T with T @ P @ T = I for Hermitian positive definite P.

    Raises SingularMatrixError when the smallest eigenvalue does not clear
    rank_rel_tol relative to the largest; for Gram matrices that means a
    degenerate signal reached an orthonormalization step.
    """
    cfg = cfg or DEFAULT_TOLERANCES
    dec = eigh_decomposition(p, cfg)
    w, v = dec.eigenvalues, dec.eigenvectors
    if w[-1] <= 0 or w[0] <= cfg.rank_rel_tol * w[-1]:
        raise SingularMatrixError(
            f"matrix is singular at rank tolerance: eigenvalue range "
            f"[{w[0]:.3e}, {w[-1]:.3e}]"
        )
    t = (v / np.sqrt(w)) @ v.conj().T
    return (t + t.conj().T) / 2.0


def rank_tol(p, cfg: ToleranceConfig | None = None) -> int:
    """Count of eigenvalues above rank_rel_tol * lambda_max (0 for the zero matrix)."""
    cfg = cfg or DEFAULT_TOLERANCES
    dec = eigh_decomposition(p, cfg)
    w = np.clip(dec.eigenvalues, 0.0, None)
    lam_max = w[-1]
    if lam_max == 0.0:
        return 0
    return int(np.sum(w > cfg.rank_rel_tol * lam_max))


def null_space_basis(p, cfg: ToleranceConfig | None = None) -> np.ndarray:
    """Orthonormal columns spanning the (tolerant) null space of a Hermitian PSD matrix.

    Complementary to rank_tol: the returned column count is N - rank_tol(P).
    """
    cfg = cfg or DEFAULT_TOLERANCES
    dec = eigh_decomposition(p, cfg)
    w = np.clip(dec.eigenvalues, 0.0, None)
    lam_max = w[-1]
    if lam_max == 0.0:
        mask = np.ones_like(w, dtype=bool)
    else:
        mask = w <= cfg.rank_rel_tol * lam_max
    return dec.eigenvectors[:, mask]


def null_space_included(a, null_p, cfg: ToleranceConfig | None = None) -> bool:
    """True when null(P) (given by its orthonormal basis) lies inside null(A^H).

    Tests ||A^H u||_2 <= rank_rel_tol * max(1, ||A||_F) for every basis column
    u.  An empty basis (full-rank P) is vacuously included; A = 0 absorbs
    everything.
    """
    cfg = cfg or DEFAULT_TOLERANCES
    arr = _as_square(a)
    basis = np.asarray(null_p)
    if basis.size == 0:
        return True
    if basis.ndim != 2 or basis.shape[0] != arr.shape[0]:
        raise DimensionMismatchError(
            f"null basis shape {basis.shape} incompatible with {arr.shape[0]}x{arr.shape[0]} matrix"
        )
    images = arr.conj().T @ basis
    bound = cfg.rank_rel_tol * max(1.0, np.linalg.norm(arr))
    return bool(np.all(np.linalg.norm(images, axis=0) <= bound))
