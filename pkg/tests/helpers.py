"""Seeded random construction helpers shared by the test modules."""

import numpy as np

from matsig import MatrixSignal, SignalFamily


def random_coeffs(rng, m, n, field="complex", scale=1.0):
    out = rng.standard_normal((m, n, n)) * scale
    if field == "complex":
        out = out + 1j * rng.standard_normal((m, n, n)) * scale
    return out


def random_signal(rng, n, m, field="complex"):
    return MatrixSignal(random_coeffs(rng, m, n, field))


def random_family(rng, k, n, m, field="complex"):
    return SignalFamily(tuple(random_signal(rng, n, m, field) for _ in range(k)))


def random_matrix(rng, n, field="complex"):
    out = rng.standard_normal((n, n))
    if field == "complex":
        out = out + 1j * rng.standard_normal((n, n))
    return out


def random_unitary(rng, n):
    q, r = np.linalg.qr(random_matrix(rng, n))
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_psd(rng, n, eigenvalues=None):
    if eigenvalues is None:
        eigenvalues = rng.uniform(0.1, 10.0, size=n)
    q = random_unitary(rng, n)
    return (q * eigenvalues) @ q.conj().T


def rank_one(rng, n):
    u = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return np.outer(u, v)
