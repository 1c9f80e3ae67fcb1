"""Gram-Schmidt with matrix-valued projection coefficients.

Matrix multiplication does not commute, so the projection coefficient always
multiplies from the left, both in the orthonormalizing recursion

    g_1 = <f_1, f_1>^{-1/2} f_1
    g_k = <g^_k, g^_k>^{-1/2} g^_k,   g^_k = f_k - sum_{l<k} <f_k, g_l> g_l

and in the plain orthogonalizing variant that keeps the un-normalized
residuals f^_k together with their mu coefficients

    f^_k = f_k - sum_{l<k} mu[l, k] f^_l,   mu[l, k] = <f_k, f^_l> <f^_l, f^_l>^{-1}.

Each step must invert the residual's Gram matrix, so a degenerate residual is
detected immediately and reported as DegenerateStepError: that failure mode is
precisely what it means for the input family to be linearly dependent, and no
silently non-orthonormal output can escape.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_TOLERANCES,
    MatrixSignal,
    SignalFamily,
    ToleranceConfig,
    inner_product,
    is_orthonormal_set,
    left_mul,
    sub,
)
from .errors import (
    BasisNotOrthonormalError,
    DegenerateStepError,
    DimensionMismatchError,
    MatrixSignalError,
)

__all__ = [
    "GramSchmidtResult",
    "orthonormalize",
    "orthogonalize",
    "expand",
    "reconstruct",
    "parseval_residual",
]


@dataclass(frozen=True, eq=False)
class GramSchmidtResult:
    """Output family plus per-step bookkeeping.

    In "orthogonalize" mode ``mu`` holds the (K, K, N, N) coefficient table
    with mu[l, k] filled for l < k, and ``step_norms[k]`` is the signal norm of
    the k-th residual; both are None in "orthonormalize" mode.
    ``reorthogonalized`` records whether a second pass was needed to reach the
    orthonormality tolerance.
    """

    ortho: SignalFamily
    mu: np.ndarray | None
    step_norms: np.ndarray | None
    mode: str
    reorthogonalized: bool = False


def _residual_eigh(gram: np.ndarray, anchor: float, step: int, cfg: ToleranceConfig):
    """Eigendecomposition of a residual Gram, rejecting degenerate steps.

    The degeneracy threshold is anchored to the scale of the *unprojected*
    signal: a residual that cancelled to roundoff has a tiny but well-shaped
    spectrum of its own, and only the outside anchor exposes it.
    """
    sym = (gram + gram.conj().T) / 2.0
    w, v = np.linalg.eigh(sym)
    reference = max(float(w[-1]), anchor)
    if reference <= 0.0 or w[0] <= cfg.rank_rel_tol * reference:
        raise DegenerateStepError(step)
    return w, v


def _orthonormal_pass(signals, cfg: ToleranceConfig):
    out: list[MatrixSignal] = []
    for k, f in enumerate(signals):
        residual = f
        for g in out:
            residual = sub(residual, left_mul(inner_product(f, g), g))
        gram = inner_product(residual, residual)
        anchor = float(np.linalg.norm(inner_product(f, f)))
        w, v = _residual_eigh(gram, anchor, k, cfg)
        inv_sqrt = (v / np.sqrt(w)) @ v.conj().T
        out.append(left_mul(inv_sqrt, residual))
    return out


def _max_orthonormality_residual(signals) -> float:
    eye = np.eye(signals[0].n)
    worst = 0.0
    for k in range(len(signals)):
        for l in range(k, len(signals)):
            gram = inner_product(signals[k], signals[l])
            target = eye if k == l else 0.0
            worst = max(worst, float(np.linalg.norm(gram - target)))
    return worst


def orthonormalize(fam: SignalFamily, cfg: ToleranceConfig | None = None) -> GramSchmidtResult:
    """Turn a linearly independent family into an orthonormal one.

    The classical recursion runs once; if the pairwise residual exceeds
    ortho_tol a single re-pass over the output is applied (twice is enough)
    and recorded in the result.
    """
    cfg = cfg or DEFAULT_TOLERANCES
    out = _orthonormal_pass(fam.signals, cfg)
    reorthogonalized = False
    if _max_orthonormality_residual(out) > cfg.ortho_tol:
        out = _orthonormal_pass(out, cfg)
        reorthogonalized = True
        residual = _max_orthonormality_residual(out)
        if residual > cfg.ortho_tol:
            raise MatrixSignalError(
                f"orthonormalization failed to converge: residual {residual:.3e}"
            )
    return GramSchmidtResult(
        ortho=SignalFamily(tuple(out)),
        mu=None,
        step_norms=None,
        mode="orthonormalize",
        reorthogonalized=reorthogonalized,
    )


def orthogonalize(fam: SignalFamily, cfg: ToleranceConfig | None = None) -> GramSchmidtResult:
    """Pairwise-orthogonalize without normalizing, returning the mu table."""
    cfg = cfg or DEFAULT_TOLERANCES
    k_total, n = fam.k, fam.n
    dtype = np.float64 if fam.field == "real" else np.complex128
    mu = np.zeros((k_total, k_total, n, n), dtype=dtype)
    step_norms = np.zeros(k_total)
    residuals: list[MatrixSignal] = []
    inverses: list[np.ndarray] = []
    for k, f in enumerate(fam.signals):
        residual = f
        for l in range(k):
            coeff = inner_product(f, residuals[l]) @ inverses[l]
            mu[l, k] = coeff
            residual = sub(residual, left_mul(coeff, residuals[l]))
        gram = inner_product(residual, residual)
        anchor = float(np.linalg.norm(inner_product(f, f)))
        w, v = _residual_eigh(gram, anchor, k, cfg)
        inverses.append((v / w) @ v.conj().T)
        residuals.append(residual)
        step_norms[k] = np.sqrt(np.linalg.norm(gram))
    return GramSchmidtResult(
        ortho=SignalFamily(tuple(residuals)),
        mu=mu,
        step_norms=step_norms,
        mode="orthogonalize",
    )


def expand(
    f: MatrixSignal, basis: SignalFamily, cfg: ToleranceConfig | None = None
) -> np.ndarray:
    """Expansion coefficients F_k = <f, Phi_k> against an orthonormal basis."""
    cfg = cfg or DEFAULT_TOLERANCES
    if f.n != basis.n or f.m != basis.m:
        raise DimensionMismatchError(
            f"signal (n={f.n}, m={f.m}) does not match basis (n={basis.n}, m={basis.m})"
        )
    if not is_orthonormal_set(basis, cfg.ortho_tol):
        raise BasisNotOrthonormalError("expansion basis fails the orthonormal-set test")
    return np.stack([inner_product(f, phi) for phi in basis])


def reconstruct(coeffs, basis: SignalFamily) -> MatrixSignal:
    """sum_k F_k Phi_k from expansion coefficients."""
    arr = np.asarray(coeffs)
    if arr.shape != (basis.k, basis.n, basis.n):
        raise DimensionMismatchError(
            f"expected coefficients of shape ({basis.k}, {basis.n}, {basis.n}), "
            f"got {arr.shape}"
        )
    return MatrixSignal(np.einsum("kij,kmjl->mil", arr, basis.coeffs_array))


def parseval_residual(
    f: MatrixSignal, basis: SignalFamily, cfg: ToleranceConfig | None = None
) -> float:
    """|| <f, f> - sum_k F_k F_k^H ||_F; zero exactly when f lies in the span."""
    coeffs = expand(f, basis, cfg)
    total = np.einsum("kil,kjl->ij", coeffs, coeffs.conj())
    return float(np.linalg.norm(inner_product(f, f) - total))
