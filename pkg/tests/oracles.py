"""Independent numerical oracles used to cross-check the coefficient-space core.

The scalar basis is made concrete here: orthonormalized Legendre polynomials
on (-1, 1).  Signals are synthesized pointwise on a Gauss-Legendre grid and
integrated by quadrature.  Nothing below shares code with the package
internals, so agreement is a genuine two-route check.
"""

from functools import lru_cache

import numpy as np
from numpy.polynomial import legendre


@lru_cache(maxsize=4)
def _gauss_grid(points: int):
    t, w = legendre.leggauss(points)
    t.setflags(write=False)
    w.setflags(write=False)
    return t, w


def orthonormal_legendre_values(count: int, t: np.ndarray) -> np.ndarray:
    """phi_m(t) for the first `count` orthonormalized Legendre polynomials."""
    values = np.empty((count, t.size))
    for mm in range(count):
        c = np.zeros(mm + 1)
        c[mm] = 1.0
        values[mm] = np.sqrt((2 * mm + 1) / 2.0) * legendre.legval(t, c)
    return values


def synthesize(coeffs: np.ndarray, t: np.ndarray) -> np.ndarray:
    """Pointwise matrix values f(t) of the signal with the given coefficients."""
    coeffs = np.asarray(coeffs)
    phi = orthonormal_legendre_values(coeffs.shape[0], t)
    return np.einsum("mij,mp->pij", coeffs, phi)


def quadrature_inner_product(f_coeffs, g_coeffs, points: int = 4096) -> np.ndarray:
    """Integral of f(t) g(t)^H over (-1, 1) by Gauss-Legendre quadrature."""
    t, w = _gauss_grid(points)
    fv = synthesize(f_coeffs, t)
    gv = synthesize(g_coeffs, t)
    return np.einsum("p,pil,pjl->ij", w, fv, gv.conj())


def quadrature_norm_l2(f_coeffs, points: int = 4096) -> float:
    """(integral of ||f(t)||_F^2 dt) ** (1/2) by quadrature."""
    t, w = _gauss_grid(points)
    fv = synthesize(f_coeffs, t)
    return float(np.sqrt(np.einsum("p,pij,pij->", w, fv, fv.conj()).real))


def quadrature_block_gram(family_coeffs, points: int = 4096) -> np.ndarray:
    """KN x KN Gram matrix of all stacked row functions, by quadrature."""
    arr = np.asarray(family_coeffs)
    k, _, n, _ = arr.shape
    t, w = _gauss_grid(points)
    values = np.stack([synthesize(arr[j], t) for j in range(k)])
    rows = values.transpose(0, 2, 1, 3).reshape(k * n, t.size, n)
    return np.einsum("p,apl,bpl->ab", w, rows, rows.conj())
