"""Degeneracy and linear independence of matrix-valued signal families.

A signal f is degenerate when its self Gram <f, f> is rank deficient;
equivalently (and tested as such) when its N row functions are linearly
dependent as ordinary scalar L2 functions.

A family {f_k} is linearly independent when every left-matrix-coefficient
combination sum_k F_k f_k that comes out degenerate forces null(<f, f>) to sit
inside null(F_k^H) for all k.  That definition quantifies over all coefficient
choices, so it is checked through an equivalent operational form: the K*N row
functions of all members are conventionally independent, i.e. the assembled
KN x KN block Gram matrix has full rank.  verify_independence_witness probes
the definition directly for particular coefficient choices, and
dependent_witness_search reconstructs an explicit violating choice for any
rank-deficient family, so the equivalence is itself cross-validated by the
test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import (
    DEFAULT_TOLERANCES,
    MatrixSignal,
    SignalFamily,
    ToleranceConfig,
    inner_product,
    linear_combination,
    norm_m,
)
from .errors import DimensionMismatchError
from .linalg import null_space_basis, null_space_included, rank_tol

__all__ = [
    "BlockGram",
    "IndependenceReport",
    "row_function_matrix",
    "is_degenerate",
    "rows_linearly_dependent",
    "block_gram",
    "is_linearly_independent",
    "verify_independence_witness",
    "dependent_witness_search",
]


@dataclass(frozen=True, eq=False)
class BlockGram:
    """All pairwise inner products of a family.

    blocks[k, l] = <f_k, f_l>; ``assembled`` is the same data as one Hermitian
    PSD KN x KN matrix whose rank characterizes linear independence.
    """

    blocks: np.ndarray
    assembled: np.ndarray


@dataclass(frozen=True)
class IndependenceReport:
    independent: bool
    block_gram_rank: int
    required_rank: int
    min_eigenvalue: float
    witnesses_checked: int = 0


def row_function_matrix(f: MatrixSignal) -> np.ndarray:
    """The N x (M*N) matrix whose row i concatenates row i of every coefficient.

    Row i is the coefficient vector of the i-th row function of f over the
    scalar basis, so <f, f> equals R @ R^H exactly.
    """
    m, n = f.m, f.n
    return np.transpose(f.coeffs, (1, 0, 2)).reshape(n, m * n)


def is_degenerate(f: MatrixSignal, cfg: ToleranceConfig | None = None) -> bool:
    """True when <f, f> is rank deficient at the configured tolerance."""
    cfg = cfg or DEFAULT_TOLERANCES
    return rank_tol(inner_product(f, f), cfg) < f.n


def rows_linearly_dependent(f: MatrixSignal, cfg: ToleranceConfig | None = None) -> bool:
    """True when the N row functions of f are linearly dependent.

    Decided by the singular values of the stacked row-coefficient matrix; the
    threshold sqrt(rank_rel_tol) * sigma_max matches the eigenvalue threshold
    used on <f, f> = R R^H, so this agrees with is_degenerate while taking an
    independent computational route (SVD of R instead of eigh of the Gram).
    """
    cfg = cfg or DEFAULT_TOLERANCES
    s = np.linalg.svd(row_function_matrix(f), compute_uv=False)
    if s[0] == 0.0:
        return True
    rank = int(np.sum(s > np.sqrt(cfg.rank_rel_tol) * s[0]))
    return rank < f.n


def block_gram(fam: SignalFamily) -> BlockGram:
    coeffs = fam.coeffs_array
    blocks = np.einsum("kmil,qmjl->kqij", coeffs, coeffs.conj())
    k, n = fam.k, fam.n
    assembled = blocks.transpose(0, 2, 1, 3).reshape(k * n, k * n)
    return BlockGram(blocks, assembled)


def is_linearly_independent(
    fam: SignalFamily,
    cfg: ToleranceConfig | None = None,
    witness_probes: int = 0,
    rng: np.random.Generator | None = None,
) -> IndependenceReport:
    """Rank test of the assembled block Gram matrix.

    Optionally runs ``witness_probes`` randomized direct probes of the
    independence definition as a self-check (counted in the report); a probe
    that contradicts the rank verdict raises, since the two criteria are
    mathematically equivalent.
    """
    cfg = cfg or DEFAULT_TOLERANCES
    assembled = block_gram(fam).assembled
    w = np.linalg.eigvalsh((assembled + assembled.conj().T) / 2.0)
    min_eig = float(w[0])
    w = np.clip(w, 0.0, None)
    lam_max = w[-1]
    rank = 0 if lam_max == 0.0 else int(np.sum(w > cfg.rank_rel_tol * lam_max))
    required = fam.k * fam.n
    independent = rank == required

    checked = 0
    if witness_probes > 0:
        rng = rng or np.random.default_rng(0)
        for _ in range(witness_probes):
            coeffs = _random_probe_coeffs(fam, rng)
            ok = verify_independence_witness(fam, coeffs, cfg)
            checked += 1
            if independent and not ok:
                raise AssertionError(
                    "witness probe contradicts the full-rank block Gram verdict"
                )
    return IndependenceReport(independent, rank, required, min_eig, checked)


def _random_probe_coeffs(fam: SignalFamily, rng: np.random.Generator) -> np.ndarray:
    """Mixed coefficient draws: dense, shared-left-vector rank-one, or sparse."""
    k, n = fam.k, fam.n
    kind = rng.integers(3)
    if kind == 0:
        out = rng.standard_normal((k, n, n)) + 1j * rng.standard_normal((k, n, n))
    elif kind == 1:
        # rank-one blocks u v_k^H: the combination is u times one row function,
        # degenerate whenever n >= 2, which exercises the non-vacuous branch
        u = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        out = np.stack(
            [
                np.outer(u, (rng.standard_normal(n) + 1j * rng.standard_normal(n)).conj())
                for _ in range(k)
            ]
        )
    else:
        out = np.zeros((k, n, n), dtype=complex)
        out[rng.integers(k)] = rng.standard_normal((n, n))
    return out


def verify_independence_witness(
    fam: SignalFamily,
    coeffs: Sequence[np.ndarray] | np.ndarray,
    cfg: ToleranceConfig | None = None,
) -> bool:
    """Check the independence condition for one concrete coefficient choice.

    Forms f = sum_k F_k f_k.  If f is nondegenerate the condition is vacuous
    and the result is True; if f vanishes numerically the condition demands
    every F_k vanish; otherwise every null direction of <f, f> must be
    annihilated by every F_k^H.  A False result proves the family dependent.
    """
    cfg = cfg or DEFAULT_TOLERANCES
    arr = np.asarray(coeffs)
    if arr.shape != (fam.k, fam.n, fam.n):
        raise DimensionMismatchError(
            f"expected witness coefficients of shape ({fam.k}, {fam.n}, {fam.n}), "
            f"got {arr.shape}"
        )
    f = linear_combination(fam, arr)

    # "f = 0" needs an external scale: the combination of O(1) inputs that
    # cancels to roundoff must count as zero even though its own largest
    # eigenvalue is positive.
    coeff_scale = max(float(np.linalg.norm(arr[k])) for k in range(fam.k))
    input_scale = max(norm_m(sig) for sig in fam)
    zero_scale = max(1.0, coeff_scale * input_scale)
    if norm_m(f) ** 2 <= cfg.rank_rel_tol * zero_scale**2:
        return coeff_scale <= cfg.rank_rel_tol * max(1.0, coeff_scale)

    gram = inner_product(f, f)
    if rank_tol(gram, cfg) == fam.n:
        return True
    null_b = null_space_basis(gram, cfg)
    return all(null_space_included(arr[k], null_b, cfg) for k in range(fam.k))


def dependent_witness_search(
    fam: SignalFamily, cfg: ToleranceConfig | None = None
) -> np.ndarray | None:
    """Construct coefficients that violate the independence condition, if any exist.

    A null vector w of the assembled block Gram encodes segment vectors
    v_k whose combination sum_k v_k^H f_k vanishes almost everywhere; the
    rank-one coefficients F_k = u v_k^H (u any unit vector) then sum to the
    zero signal while not all being zero, which is exactly a violating
    witness.  Returns the (K, N, N) coefficient stack, or None when the family
    is independent at tolerance.
    """
    cfg = cfg or DEFAULT_TOLERANCES
    k, n = fam.k, fam.n
    assembled = block_gram(fam).assembled
    w, v = np.linalg.eigh((assembled + assembled.conj().T) / 2.0)
    w = np.clip(w, 0.0, None)
    lam_max = w[-1]
    if lam_max == 0.0:
        # every signal is zero: any single nonzero coefficient violates
        out = np.zeros((k, n, n), dtype=complex)
        out[0] = np.eye(n)
        return out
    if w[0] > cfg.rank_rel_tol * lam_max:
        return None
    null_vec = v[:, 0]
    segments = null_vec.reshape(k, n)
    largest = int(np.argmax(np.linalg.norm(segments, axis=1)))
    u = segments[largest] / np.linalg.norm(segments[largest])
    return np.stack([np.outer(u, segments[j].conj()) for j in range(k)])
