"""Degenerate signals, the block-Gram independence test, and explicit witnesses.

Linear independence with matrix coefficients is subtler than for vectors: a
combination sum_k F_k f_k only needs its Gram null space absorbed by every
F_k^H whenever it degenerates.  The operational test is the rank of the
KN x KN block Gram matrix, and a rank deficit can always be converted into a
concrete violating coefficient choice.
"""

import numpy as np

import matsig as ms

rng = np.random.default_rng(2)

# --- degeneracy = rank-deficient self Gram = dependent row functions ---------
coeffs = rng.standard_normal((3, 2, 2))
coeffs[:, 1, :] = 3.0 * coeffs[:, 0, :]  # second row function = 3 x first
dup = ms.MatrixSignal(coeffs)
print("duplicated-row signal degenerate:", ms.is_degenerate(dup))
print("rows dependent (SVD route):     ", ms.rows_linearly_dependent(dup))
print("self-Gram rank:", ms.rank_tol(ms.inner_product(dup, dup)), "of", dup.n)

# --- the block Gram matrix ----------------------------------------------------
family = ms.gen_random_family(7, 2, 4, 3, "independent")
bg = ms.block_gram(family)
print("\nassembled block Gram shape:", bg.assembled.shape)
report = ms.is_linearly_independent(family)
print("independent:", report.independent,
      "| rank", report.block_gram_rank, "/", report.required_rank,
      "| min eigenvalue", f"{report.min_eigenvalue:.3e}")

# a probe of the definition itself: random coefficients never violate it
# on an independent family
probe = np.stack([rng.standard_normal((2, 2)) for _ in range(3)])
print("random witness consistent:", ms.verify_independence_witness(family, probe))

# --- scaled copies of one signal are always dependent -------------------------
f = ms.MatrixSignal(rng.standard_normal((4, 2, 2)))
a, b = rng.standard_normal((2, 2)), rng.standard_normal((2, 2))
copies = ms.SignalFamily((ms.left_mul(a, f), ms.left_mul(b, f)))
report = ms.is_linearly_independent(copies)
print("\nscaled copies independent:", report.independent)

# the null-space-aligned search rebuilds an explicit violating witness:
# coefficients that sum the family to (numerically) zero without vanishing
witness = ms.dependent_witness_search(copies)
combo = ms.linear_combination(copies, witness)
print("witness found with ||sum_k F_k f_k||_M =", f"{ms.norm_m(combo):.3e}")
print("witness satisfies the definition:", ms.verify_independence_witness(copies, witness))

# the analytic witness from the inverse construction does the same job
analytic = np.stack([b @ np.linalg.inv(a), -np.eye(2)])
print("analytic witness satisfies the definition:",
      ms.verify_independence_witness(copies, analytic))

# --- orthogonality does not imply independence --------------------------------
base = ms.gen_random_family(3, 2, 4, 2, "orthonormal")
flattened = ms.left_mul(np.diag([1.0, 0.0]), base[0])  # degenerate but nonzero
mixed = ms.SignalFamily((flattened, base[1]))
print("\northogonal pair:", ms.is_orthogonal_b(mixed[0], mixed[1]))
print("member 0 degenerate:", ms.is_degenerate(mixed[0]),
      "| family independent:", ms.is_linearly_independent(mixed).independent)
