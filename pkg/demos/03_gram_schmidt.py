"""Gram-Schmidt with matrix-valued coefficients, expansion, and Parseval.

The recursion looks like the classical one, but every projection coefficient
is an N x N matrix multiplying from the left, and normalization divides by the
Hermitian square root of the residual's Gram matrix.
"""

import numpy as np

import matsig as ms

rng = np.random.default_rng(3)

family = ms.gen_random_family(11, 2, 5, 3, "independent")


def gram_table(signals):
    k = len(signals)
    table = np.empty((k, k))
    for i in range(k):
        for j in range(k):
            table[i, j] = np.linalg.norm(ms.inner_product(signals[i], signals[j]))
    return table


print("pairwise ||<f_i, f_j>||_F before:\n", np.round(gram_table(family), 3))

# --- orthonormalize ------------------------------------------------------------
result = ms.orthonormalize(family)
basis = result.ortho
print("\npairwise ||<g_i, g_j>||_F after:\n", np.round(gram_table(basis), 10))
print("orthonormal set:", ms.is_orthonormal_set(basis))
print("needed a second pass:", result.reorthogonalized)

# spans agree: every input expands exactly in the output basis,
# and triangularly (f_k only uses g_1 ... g_k)
coeffs = ms.expand(family[1], basis)
print("\n||coefficient of f_1 on g_2||:", f"{np.linalg.norm(coeffs[2]):.2e}")
rebuilt = ms.reconstruct(coeffs, basis)
print("reconstruction error:", f"{ms.norm_m(ms.sub(family[1], rebuilt)):.2e}")

# --- expansion and the Parseval identity ----------------------------------------
stack = np.stack([rng.standard_normal((2, 2)) for _ in range(3)])
f = ms.reconstruct(stack, basis)  # a signal built inside the span
print("\nParseval residual in span:", f"{ms.parseval_residual(f, basis):.2e}")

outside = ms.MatrixSignal(rng.standard_normal((5, 2, 2)))
print("Parseval residual off span:", f"{ms.parseval_residual(outside, basis):.2e}",
      "(equals the Gram norm of the orthogonal remainder)")

# --- the orthogonalizing variant keeps residuals and mu coefficients ------------
plain = ms.orthogonalize(family)
print("\nresidual norms per step:", np.round(plain.step_norms, 4))
print("mu[0, 1] =\n", np.round(plain.mu[0, 1], 3))

# feeding a dependent family fails loudly at the offending step
f0 = family[0]
bad = ms.SignalFamily((f0, ms.left_mul(rng.standard_normal((2, 2)), f0)))
try:
    ms.orthonormalize(bad)
except ms.DegenerateStepError as err:
    print("\ndependent input rejected at step", err.step)
