import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qcolor import linalg


def random_state(d_a, d_b, seed, rank=None):
    rng = np.random.default_rng(seed)
    rank = rank or min(d_a, d_b)
    m = np.zeros((d_a, d_b), dtype=complex)
    for _ in range(rank):
        m += np.outer(rng.normal(size=d_a) + 1j * rng.normal(size=d_a),
                      rng.normal(size=d_b) + 1j * rng.normal(size=d_b))
    v = m.ravel()
    return v / np.linalg.norm(v)


def test_inner_conjugates_first_argument():
    x = np.array([1j, 0.0])
    y = np.array([1.0, 0.0])
    assert linalg.inner(x, y) == pytest.approx(-1j)


def test_is_orthonormal_basis():
    assert linalg.is_orthonormal_basis(np.eye(4))
    tilted = np.array([[1.0, 1.0], [1.0, -1.0]]) / np.sqrt(2)
    assert linalg.is_orthonormal_basis(tilted)
    assert not linalg.is_orthonormal_basis(np.array([[1.0, 0.0], [1.0, 0.0]]))


@given(st.integers(2, 5), st.integers(2, 5), st.integers(0, 50))
@settings(max_examples=40, deadline=None)
def test_schmidt_reconstructs(d_a, d_b, seed):
    psi = random_state(d_a, d_b, seed)
    dec = linalg.schmidt(psi, d_a, d_b)
    assert np.allclose(dec.reconstruct(), psi, atol=1e-10)
    assert np.all(np.diff(dec.coefficients) <= 1e-12)
    assert abs(np.linalg.norm(dec.coefficients) - 1.0) < 1e-10


def test_schmidt_rank_of_product_state():
    psi = np.kron(np.array([1.0, 0.0]), np.array([0.6, 0.8]))
    dec = linalg.schmidt(psi, 2, 2)
    assert dec.rank == 1


def test_schmidt_rank_of_maximally_entangled():
    for d in (2, 3, 4):
        dec = linalg.schmidt(linalg.maximally_entangled(d), d, d)
        assert dec.rank == d
        assert np.allclose(dec.coefficients[:d], 1 / np.sqrt(d))


@given(st.integers(2, 5), st.integers(2, 5), st.integers(0, 50))
@settings(max_examples=40, deadline=None)
def test_partial_trace_against_naive(d_a, d_b, seed):
    psi = random_state(d_a, d_b, seed)
    rho = np.outer(psi, psi.conj())
    got_a = linalg.partial_trace(rho, d_a, d_b, side="B")
    got_b = linalg.partial_trace(rho, d_a, d_b, side="A")
    naive_a = np.zeros((d_a, d_a), dtype=complex)
    naive_b = np.zeros((d_b, d_b), dtype=complex)
    for i in range(d_a):
        for j in range(d_a):
            for k in range(d_b):
                naive_a[i, j] += rho[i * d_b + k, j * d_b + k]
    for i in range(d_b):
        for j in range(d_b):
            for k in range(d_a):
                naive_b[i, j] += rho[k * d_b + i, k * d_b + j]
    assert np.allclose(got_a, naive_a, atol=1e-12)
    assert np.allclose(got_b, naive_b, atol=1e-12)
    assert np.trace(got_a) == pytest.approx(1.0)
    assert np.trace(got_b) == pytest.approx(1.0)


def test_support_projector_idempotent_and_exact():
    v = np.array([1.0, 1.0, 0.0]) / np.sqrt(2)
    m = np.outer(v, v) * 0.3
    p = linalg.support_projector(m)
    assert np.allclose(p @ p, p, atol=1e-12)
    assert np.allclose(p, np.outer(v, v), atol=1e-12)


def test_support_projector_rejects_negative():
    with pytest.raises(ValueError):
        linalg.support_projector(np.diag([1.0, -0.5]))


def test_support_projector_zero_matrix():
    p = linalg.support_projector(np.zeros((3, 3)))
    assert np.allclose(p, 0.0)


def test_matrix_rank_relative_cutoff():
    m = np.diag([1.0, 1e-3, 1e-12])
    assert linalg.matrix_rank(m) == 2
    assert linalg.matrix_rank(m, rank_tol=1e-15) == 3


def test_maximally_entangled_reduction_identity():
    # the reduction <psi| E (x) F |psi> = Tr(E F^T)/d on the maximally
    # entangled state, against a naive computation
    rng = np.random.default_rng(3)
    d = 4
    psi = linalg.maximally_entangled(d)
    for _ in range(10):
        e = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
        f = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
        naive = psi.conj() @ (np.kron(e, f) @ psi)
        assert naive == pytest.approx(np.trace(e @ f.T) / d, abs=1e-12)


def test_hs_inner_matches_trace():
    rng = np.random.default_rng(5)
    a = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    b = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    assert linalg.hs_inner(a, b) == pytest.approx(np.trace(a.conj().T @ b))
