"""Lattice construction, determinant, enumeration and brute-force search."""

import numpy as np
import pytest

import matsig as ms


def canonical_orthonormal_basis(k, n):
    coeffs = np.zeros((k, k, n, n))
    for j in range(k):
        coeffs[j, j] = np.eye(n)
    return ms.SignalFamily.from_coeffs(coeffs)


def real_basis(seed, k, n, m):
    return ms.gen_random_family(seed, n, m, k, "independent", field="real")


def test_orthonormal_basis_determinant():
    for k, n in [(1, 2), (3, 2), (2, 3)]:
        lattice = ms.build_lattice(canonical_orthonormal_basis(k, n))
        assert lattice.determinant == pytest.approx(n ** (k / 4), rel=1e-10)


def test_single_signal_determinant_is_its_norm():
    basis = real_basis(0, 1, 2, 3)
    lattice = ms.build_lattice(basis)
    assert lattice.determinant == pytest.approx(ms.norm_m(basis[0]), rel=1e-12)


def test_determinant_matches_recomputed_orthogonalization():
    basis = real_basis(1, 3, 2, 5)
    lattice = ms.build_lattice(basis)
    fresh = ms.orthogonalize(basis)
    expected = float(np.prod([ms.norm_m(h) for h in fresh.ortho]))
    assert lattice.determinant == pytest.approx(expected, rel=1e-10)
    assert lattice.determinant > 0.0
    assert lattice.determinant == pytest.approx(float(np.prod(lattice.gs.step_norms)), rel=1e-10)


def test_build_rejects_complex_basis():
    family = ms.gen_random_family(2, 2, 3, 2, "independent", field="complex")
    with pytest.raises(ms.NotRealError):
        ms.build_lattice(family)


def test_build_rejects_dependent_basis():
    family = ms.gen_random_family(3, 2, 3, 2, "dependent", field="real")
    with pytest.raises(ms.NotIndependentError) as err:
        ms.build_lattice(family)
    assert err.value.report.block_gram_rank < err.value.report.required_rank


def test_zero_point_and_basis_points():
    basis = real_basis(4, 2, 2, 3)
    lattice = ms.build_lattice(basis)
    zero = lattice.point(np.zeros((2, 2, 2), dtype=int))
    assert ms.norm_m(zero.signal) == 0.0
    stack = np.zeros((2, 2, 2), dtype=int)
    stack[0] = np.eye(2, dtype=int)
    first = lattice.point(stack)
    assert ms.norm_m(ms.sub(first.signal, basis[0])) <= 1e-12


def test_point_group_laws():
    rng = np.random.default_rng(5)
    basis = real_basis(5, 2, 2, 3)
    lattice = ms.build_lattice(basis)
    a = rng.integers(-4, 5, size=(2, 2, 2))
    b = rng.integers(-4, 5, size=(2, 2, 2))
    pa, pb, pab = lattice.point(a), lattice.point(b), lattice.point(a + b)
    np.testing.assert_array_equal(pa.coeffs + pb.coeffs, pab.coeffs)
    assert ms.norm_m(ms.sub(ms.add(pa.signal, pb.signal), pab.signal)) <= 1e-12
    neg = lattice.point(-a)
    assert ms.norm_m(ms.add(pa.signal, neg.signal)) <= 1e-12


def test_point_rejects_non_integer():
    lattice = ms.build_lattice(real_basis(6, 1, 2, 2))
    with pytest.raises(ms.NonIntegerCoefficientError):
        lattice.point(np.array([[[0.5, 0.0], [0.0, 0.0]]]))
    with pytest.raises(ms.DimensionMismatchError):
        lattice.point(np.zeros((2, 2, 2), dtype=int))


def test_point_reconstructs_from_coeffs():
    lattice = ms.build_lattice(real_basis(7, 2, 2, 4))
    stack = np.array([[[2, -1], [0, 3]], [[1, 1], [-2, 0]]])
    point = lattice.point(stack)
    manual = ms.linear_combination(lattice.basis, stack.astype(float))
    assert ms.norm_m(ms.sub(point.signal, manual)) <= 1e-10


def test_enumeration_counts_and_uniqueness():
    cases = [(1, 1, 3), (2, 1, 2), (1, 2, 1)]
    for k, n, bound in cases:
        lattice = ms.build_lattice(real_basis(8 + k + n, k, n, k + 1))
        points = list(lattice.enumerate_points(bound))
        assert len(points) == (2 * bound + 1) ** (k * n * n)
        keys = {tuple(p.coeffs.ravel()) for p in points}
        assert len(keys) == len(points)


def test_enumeration_bound_zero_single_point():
    lattice = ms.build_lattice(real_basis(9, 2, 1, 2))
    points = list(lattice.enumerate_points(0))
    assert len(points) == 1
    assert ms.norm_m(points[0].signal) == 0.0


def test_enumeration_is_lexicographic():
    lattice = ms.build_lattice(real_basis(10, 1, 1, 2))
    flat = [int(p.coeffs.ravel()[0]) for p in lattice.enumerate_points(2)]
    assert flat == [-2, -1, 0, 1, 2]


def test_enumeration_distinct_signals_for_independent_basis():
    lattice = ms.build_lattice(real_basis(11, 2, 1, 3))
    signals = [p.signal for p in lattice.enumerate_points(1)]
    assert len(signals) == 9
    for i in range(len(signals)):
        for j in range(i + 1, len(signals)):
            assert ms.norm_m(ms.sub(signals[i], signals[j])) > 1e-8


def test_enumeration_cap():
    lattice = ms.build_lattice(real_basis(12, 2, 2, 3))
    with pytest.raises(ms.EnumerationCapError):
        list(lattice.enumerate_points(10))
    with pytest.raises(ms.EnumerationCapError):
        lattice.nearest_point(lattice.basis[0], 10)


def _scan_oracle(lattice, target, bound):
    """Second, independent enumeration: nested ndindex over shifted entries."""
    k, n = lattice.k, lattice.n
    entries = k * n * n
    best_key, best_distance = None, np.inf
    for idx in np.ndindex(*([2 * bound + 1] * entries)):
        stack = (np.array(idx, dtype=np.int64) - bound).reshape(k, n, n)
        synth = np.einsum("kij,kmjl->mil", stack.astype(float), lattice.basis.coeffs_array)
        diff = target.coeffs - synth
        gram = np.einsum("mil,mjl->ij", diff, diff.conj())
        distance = float(np.sqrt(np.linalg.norm(gram)))
        if distance < best_distance:
            best_key, best_distance = stack, distance
    return best_key, best_distance


def test_nearest_point_recovers_lattice_points():
    lattice = ms.build_lattice(real_basis(13, 2, 1, 3))
    for p in lattice.enumerate_points(1):
        found, distance = lattice.nearest_point(p.signal, 2)
        np.testing.assert_array_equal(found.coeffs, p.coeffs)
        assert distance <= 1e-10


def test_nearest_point_zero_target():
    lattice = ms.build_lattice(real_basis(14, 2, 1, 2))
    point, distance = lattice.nearest_point(ms.zero_signal(1, 2), 2)
    assert distance == 0.0
    assert np.all(point.coeffs == 0)


def test_nearest_point_matches_scan_oracle():
    rng = np.random.default_rng(15)
    lattice = ms.build_lattice(real_basis(15, 2, 1, 3))
    for _ in range(5):
        target = ms.MatrixSignal(rng.standard_normal((3, 1, 1)) * 2.0)
        point, distance = lattice.nearest_point(target, 3)
        oracle_key, oracle_distance = _scan_oracle(lattice, target, 3)
        assert distance == pytest.approx(oracle_distance, rel=1e-12)
        np.testing.assert_array_equal(point.coeffs, oracle_key)


def test_gram_identity_residual_orthogonal_basis():
    lattice = ms.build_lattice(canonical_orthonormal_basis(3, 2))
    assert lattice.gram_identity_residual() <= 1e-12
    assert np.abs(lattice.gs.mu).max() <= 1e-12


def test_gram_identity_residual_random_basis():
    for seed in range(20):
        lattice = ms.build_lattice(real_basis(seed, 4, 2, 6))
        scale = max(np.linalg.norm(ms.inner_product(f, f)) for f in lattice.basis)
        assert lattice.gram_identity_residual() <= 1e-9 * scale
        assert lattice.norm_inequality_holds()


def test_module_level_wrappers():
    lattice = ms.build_lattice(real_basis(16, 2, 2, 4))
    assert ms.verify_gram_identity(lattice) == lattice.gram_identity_residual()
    assert ms.verify_norm_inequality(lattice) is True
