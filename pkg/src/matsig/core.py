"""Matrix-valued signals and their matrix-valued inner product.

A signal is stored as a finite stack of N x N coefficient matrices over an
implicit orthonormal basis {phi_m} of scalar L2 functions on an interval:

    f(t) = sum_m coeffs[m] * phi_m(t).

Orthonormality of the scalar basis collapses the defining integral

    <f, g> = integral f(t) g(t)^H dt

to the exact finite sum  sum_m C_m D_m^H,  so every identity implemented here
holds to machine precision rather than quadrature precision.  The interval and
the concrete basis never enter a computation; they are carried only as file
metadata (see :mod:`matsig.fileio`).

All values are immutable after construction and every operation is a pure
function, so signals and families may be freely shared between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import DimensionMismatchError

__all__ = [
    "ToleranceConfig",
    "DEFAULT_TOLERANCES",
    "MatrixSignal",
    "SignalFamily",
    "zero_signal",
    "inner_product",
    "norm_m",
    "norm_l2",
    "scalar_inner_product",
    "left_mul",
    "right_mul",
    "add",
    "sub",
    "scale",
    "linear_combination",
    "is_orthogonal_b",
    "is_orthonormal_set",
]


@dataclass(frozen=True)
class ToleranceConfig:
    """Numerical tolerances shared across the library.

    rank_rel_tol  -- eigen/singular values below this fraction of the largest
                     one count as zero when ranking Gram matrices
    ortho_tol     -- Frobenius residual allowed by the orthogonality and
                     orthonormal-set predicates
    hermitian_tol -- relative deviation allowed between P and P^H
    psd_tol       -- how negative (relative to ||P||_F) an eigenvalue may be
                     before a Gram matrix is rejected as indefinite
    """

    rank_rel_tol: float = 1e-10
    ortho_tol: float = 1e-10
    hermitian_tol: float = 1e-12
    psd_tol: float = 1e-12

    def __post_init__(self):
        for name in ("rank_rel_tol", "ortho_tol", "hermitian_tol", "psd_tol"):
            value = getattr(self, name)
            if not (np.isfinite(value) and value >= 0):
                raise ValueError(f"{name} must be finite and nonnegative, got {value!r}")


DEFAULT_TOLERANCES = ToleranceConfig()


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class MatrixSignal:
    """One matrix-valued signal: M coefficient matrices of shape N x N.

    ``field`` is "real" when every entry has exactly zero imaginary part
    (stored as float64) and "complex" otherwise.  Pass ``field=None`` to infer
    the tag from the values.
    """

    coeffs: np.ndarray
    field: str | None = None

    def __post_init__(self):
        arr = np.asarray(self.coeffs)
        if arr.ndim != 3 or arr.shape[1] != arr.shape[2]:
            raise DimensionMismatchError(
                f"coeffs must have shape (M, N, N), got {arr.shape}"
            )
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise DimensionMismatchError("M and N must both be at least 1")
        field = self.field
        if field is None:
            field = "complex" if (np.iscomplexobj(arr) and np.any(arr.imag)) else "real"
        if field == "real":
            if np.iscomplexobj(arr):
                if np.any(arr.imag):
                    raise ValueError("field='real' but coefficients have imaginary parts")
                arr = arr.real
            arr = np.array(arr, dtype=np.float64)
        elif field == "complex":
            arr = np.array(arr, dtype=np.complex128)
        else:
            raise ValueError(f"field must be 'real' or 'complex', got {field!r}")
        object.__setattr__(self, "coeffs", _freeze(arr))
        object.__setattr__(self, "field", field)

    @property
    def n(self) -> int:
        return self.coeffs.shape[1]

    @property
    def m(self) -> int:
        return self.coeffs.shape[0]

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __neg__(self):
        return scale(-1.0, self)

    def __repr__(self):
        return f"MatrixSignal(n={self.n}, m={self.m}, field={self.field!r})"


def zero_signal(n: int, m: int, field: str = "real") -> MatrixSignal:
    shape = (m, n, n)
    dtype = np.float64 if field == "real" else np.complex128
    return MatrixSignal(np.zeros(shape, dtype=dtype), field=field)


@dataclass(frozen=True, eq=False)
class SignalFamily:
    """An ordered set of K signals sharing the same N and M."""

    signals: tuple[MatrixSignal, ...]

    def __post_init__(self):
        signals = tuple(self.signals)
        if len(signals) < 1:
            raise DimensionMismatchError("a family needs at least one signal")
        n, m = signals[0].n, signals[0].m
        for idx, sig in enumerate(signals):
            if not isinstance(sig, MatrixSignal):
                raise TypeError(f"signals[{idx}] is not a MatrixSignal")
            if sig.n != n or sig.m != m:
                raise DimensionMismatchError(
                    f"signals[{idx}] has (n, m)=({sig.n}, {sig.m}), expected ({n}, {m})"
                )
        object.__setattr__(self, "signals", signals)

    @classmethod
    def from_coeffs(cls, coeffs, field: str | None = None) -> "SignalFamily":
        """Build a family from an array of shape (K, M, N, N)."""
        arr = np.asarray(coeffs)
        if arr.ndim != 4:
            raise DimensionMismatchError(
                f"expected a (K, M, N, N) coefficient array, got shape {arr.shape}"
            )
        return cls(tuple(MatrixSignal(arr[k], field=field) for k in range(arr.shape[0])))

    @property
    def k(self) -> int:
        return len(self.signals)

    @property
    def n(self) -> int:
        return self.signals[0].n

    @property
    def m(self) -> int:
        return self.signals[0].m

    @property
    def field(self) -> str:
        return "real" if all(s.field == "real" for s in self.signals) else "complex"

    @property
    def coeffs_array(self) -> np.ndarray:
        """All coefficients stacked into one (K, M, N, N) array."""
        return np.stack([s.coeffs for s in self.signals])

    def __len__(self) -> int:
        return self.k

    def __iter__(self) -> Iterator[MatrixSignal]:
        return iter(self.signals)

    def __getitem__(self, index: int) -> MatrixSignal:
        return self.signals[index]

    def __repr__(self):
        return f"SignalFamily(k={self.k}, n={self.n}, m={self.m}, field={self.field!r})"


def _check_same_shape(f: MatrixSignal, g: MatrixSignal) -> None:
    if f.n != g.n or f.m != g.m:
        raise DimensionMismatchError(
            f"signal shapes differ: (n={f.n}, m={f.m}) vs (n={g.n}, m={g.m})"
        )


def inner_product(f: MatrixSignal, g: MatrixSignal) -> np.ndarray:
    """The N x N matrix <f, g> = integral of f(t) g(t)^H dt.

    Evaluates exactly as sum_m C_m D_m^H.  For g = f the result is Hermitian
    positive semidefinite up to floating-point roundoff.
    """
    _check_same_shape(f, g)
    return np.einsum("mil,mjl->ij", f.coeffs, g.coeffs.conj())


def norm_m(f: MatrixSignal) -> float:
    """Signal norm induced by the inner product: ||<f, f>||_F ** (1/2)."""
    return float(np.sqrt(np.linalg.norm(inner_product(f, f))))


def norm_l2(f: MatrixSignal) -> float:
    """Entrywise energy norm (integral of ||f(t)||_F^2 dt) ** (1/2).

    By orthonormality of the scalar basis this equals the flat 2-norm of the
    coefficient stack.
    """
    return float(np.linalg.norm(f.coeffs))


def scalar_inner_product(f: MatrixSignal, g: MatrixSignal) -> complex:
    """trace(<f, g>): the conventional scalar inner product of the two signals.

    Vanishes exactly when the concatenated row functions of f and g are
    orthogonal as long scalar vectors, a strictly weaker condition than
    <f, g> = 0.
    """
    return complex(np.trace(inner_product(f, g)))


def _square_matrix(a, n: int) -> np.ndarray:
    arr = np.asarray(a)
    if arr.shape != (n, n):
        raise DimensionMismatchError(f"expected a {n}x{n} matrix, got shape {arr.shape}")
    return arr


def left_mul(a, f: MatrixSignal) -> MatrixSignal:
    """The signal (A f)(t) = A f(t), i.e. A applied to every coefficient."""
    arr = _square_matrix(a, f.n)
    return MatrixSignal(np.einsum("ij,mjl->mil", arr, f.coeffs))


def right_mul(f: MatrixSignal, a) -> MatrixSignal:
    """The signal (f A)(t) = f(t) A."""
    arr = _square_matrix(a, f.n)
    return MatrixSignal(np.einsum("mij,jl->mil", f.coeffs, arr))


def add(f: MatrixSignal, g: MatrixSignal) -> MatrixSignal:
    _check_same_shape(f, g)
    return MatrixSignal(f.coeffs + g.coeffs)


def sub(f: MatrixSignal, g: MatrixSignal) -> MatrixSignal:
    _check_same_shape(f, g)
    return MatrixSignal(f.coeffs - g.coeffs)


def scale(c, f: MatrixSignal) -> MatrixSignal:
    return MatrixSignal(np.asarray(c) * f.coeffs)


def linear_combination(fam: SignalFamily, coeffs) -> MatrixSignal:
    """sum_k A_k f_k for a stack of K constant N x N matrices A_k."""
    arr = np.asarray(coeffs)
    if arr.shape != (fam.k, fam.n, fam.n):
        raise DimensionMismatchError(
            f"expected coefficient stack of shape ({fam.k}, {fam.n}, {fam.n}), "
            f"got {arr.shape}"
        )
    return MatrixSignal(np.einsum("kij,kmjl->mil", arr, fam.coeffs_array))


def is_orthogonal_b(f: MatrixSignal, g: MatrixSignal, tol: float = DEFAULT_TOLERANCES.ortho_tol) -> bool:
    """True when <f, g> vanishes as a matrix (every row of f against every row of g).

    The zero test is relative: ||<f, g>||_F <= tol * max(1, ||f||_M ||g||_M).
    """
    gram = inner_product(f, g)
    return bool(np.linalg.norm(gram) <= tol * max(1.0, norm_m(f) * norm_m(g)))


def is_orthonormal_set(family: SignalFamily, tol: float = DEFAULT_TOLERANCES.ortho_tol) -> bool:
    """True when <Phi_k, Phi_l> = delta(k - l) I_N for all pairs, within tol."""
    eye = np.eye(family.n)
    for k in range(family.k):
        for l in range(k, family.k):
            gram = inner_product(family[k], family[l])
            target = eye if k == l else 0.0
            if np.linalg.norm(gram - target) > tol:
                return False
    return True
