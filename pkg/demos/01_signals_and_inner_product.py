"""Matrix-valued signals, their matrix-valued inner product, and the two norms.

A signal here is a small stack of N x N coefficient matrices over an implicit
orthonormal scalar basis, so <f, g> = sum_m C_m D_m^H is an exact N x N
matrix, not a scalar.
"""

import numpy as np

import matsig as ms

rng = np.random.default_rng(1)

# --- build two 2x2 signals with three coefficient matrices each -------------
f = ms.MatrixSignal(rng.standard_normal((3, 2, 2)) + 1j * rng.standard_normal((3, 2, 2)))
g = ms.MatrixSignal(rng.standard_normal((3, 2, 2)) + 1j * rng.standard_normal((3, 2, 2)))

print("f =", f)
print("<f, g> =\n", np.round(ms.inner_product(f, g), 3))
print("<f, f> is Hermitian PSD:\n", np.round(ms.inner_product(f, f), 3))

# conjugate symmetry holds as a matrix identity: <f, g> = <g, f>^H
dev = np.linalg.norm(ms.inner_product(f, g) - ms.inner_product(g, f).conj().T)
print("conjugate-symmetry deviation:", dev)

# constant matrices pull out of the inner product on their own sides
a = rng.standard_normal((2, 2))
b = rng.standard_normal((2, 2))
lhs = ms.inner_product(ms.left_mul(a, f), ms.left_mul(b, g))
rhs = a @ ms.inner_product(f, g) @ b.conj().T
print("factorization deviation:", np.linalg.norm(lhs - rhs))

# --- two norms and the equivalence band --------------------------------------
# norm_m comes from the inner product (||<f,f>||_F ** 1/2); norm_l2 is the
# plain entrywise energy.  They always sit within [n^-1/4, n^1/2] of each other.
for n in (1, 2, 4, 8):
    h = ms.MatrixSignal(rng.standard_normal((3, n, n)))
    lo, hi = n ** -0.25, n ** 0.5
    ratio = ms.norm_m(h) / ms.norm_l2(h)
    print(f"n={n}: norm_m/norm_l2 = {ratio:.4f}  (allowed band [{lo:.4f}, {hi:.4f}])")

# --- the orthogonality hierarchy ---------------------------------------------
# Matrix orthogonality (<f, g> = 0) is stronger than trace orthogonality
# (trace <f, g> = 0).  These two signals carry the same scalar function in
# different rows: the trace cancels, the full matrix does not.
p = ms.MatrixSignal(np.array([[[1.0, 0.0], [0.0, 0.0]]]))
q = ms.MatrixSignal(np.array([[[0.0, 0.0], [1.0, 0.0]]]))
print("\n<p, q> =\n", ms.inner_product(p, q))
print("trace inner product:", ms.scalar_inner_product(p, q))
print("matrix-orthogonal:", ms.is_orthogonal_b(p, q))

# whereas disjoint coefficient supports give full matrix orthogonality,
# which then forces the trace to vanish as well
u = ms.MatrixSignal(np.stack([np.eye(2), np.zeros((2, 2))]))
v = ms.MatrixSignal(np.stack([np.zeros((2, 2)), np.eye(2)]))
print("disjoint supports: matrix-orthogonal =", ms.is_orthogonal_b(u, v),
      ", trace =", ms.scalar_inner_product(u, v))
