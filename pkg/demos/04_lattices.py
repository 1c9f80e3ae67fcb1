"""Matrix-valued lattices: integer-matrix combinations of a real basis family.

The determinant multiplies the signal norms of the Gram-Schmidt residuals.
Enumeration and closest-point search are deliberately brute force, for
desk-scale experimentation only.
"""

import numpy as np

import matsig as ms

rng = np.random.default_rng(4)

basis = ms.gen_random_family(21, 2, 4, 2, "independent", field="real")
lattice = ms.build_lattice(basis)

print("lattice over", basis)
print("determinant:", lattice.determinant)
print("residual step norms:", np.round(lattice.gs.step_norms, 4))

# the Gram-splitting identity behind the determinant, and the norm bounds it implies
print("Gram identity residual:", f"{lattice.gram_identity_residual():.2e}")
print("norm inequalities hold:", lattice.norm_inequality_holds())

# an orthonormal basis gives determinant n^(k/4) exactly
k, n = 3, 2
coeffs = np.zeros((k, k, n, n))
for j in range(k):
    coeffs[j, j] = np.eye(n)
ortho_lattice = ms.build_lattice(ms.SignalFamily.from_coeffs(coeffs))
print("\northonormal-basis determinant:", ortho_lattice.determinant,
      "vs n^(k/4) =", n ** (k / 4))

# --- points form a group under coefficient addition ----------------------------
a = rng.integers(-3, 4, size=(2, 2, 2))
b = rng.integers(-3, 4, size=(2, 2, 2))
pa, pb, pab = lattice.point(a), lattice.point(b), lattice.point(a + b)
print("\npoint(a) + point(b) = point(a+b):",
      ms.norm_m(ms.sub(ms.add(pa.signal, pb.signal), pab.signal)) < 1e-12)

# --- enumeration and brute-force closest point ----------------------------------
small = ms.build_lattice(ms.gen_random_family(5, 1, 3, 2, "independent", field="real"))
points = list(small.enumerate_points(2))
print(f"\nenumerated {len(points)} points with entries in [-2, 2]"
      f" (expected {(2 * 2 + 1) ** 2})")

target = ms.MatrixSignal(1.7 * small.basis[0].coeffs + 0.4 * rng.standard_normal((3, 1, 1)))
nearest, distance = small.nearest_point(target, 3)
print("nearest coefficients:", nearest.coeffs.ravel().tolist(), "at distance", round(distance, 4))

# a point of the lattice is recovered exactly
probe = small.point(np.array([[[2]], [[-1]]]))
found, distance = small.nearest_point(probe.signal, 3)
print("lattice point recovered:", found.coeffs.ravel().tolist(), "distance", f"{distance:.1e}")
