"""Dense complex linear algebra primitives shared by the verifiers.

Conventions, fixed package-wide:

* inner products are conjugate-linear in the FIRST argument;
* tensor indices are row-major with the A system most significant, so a
  bipartite state of local dimensions (dA, dB) reshapes to a dA x dB matrix;
* orthogonality-style checks use an absolute entrywise tolerance
  (default 1e-9), rank decisions a relative cutoff against the largest
  singular / eigen value (default 1e-7).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_TOL = 1e-9
DEFAULT_RANK_TOL = 1e-7


class LinalgError(ValueError):
    pass


def inner(u: np.ndarray, v: np.ndarray) -> complex:
    """<u|v>, conjugating u."""
    u = np.asarray(u, dtype=complex).ravel()
    v = np.asarray(v, dtype=complex).ravel()
    if u.shape != v.shape:
        raise LinalgError(f"dimension mismatch: {u.shape} vs {v.shape}")
    return complex(np.vdot(u, v))


def hs_inner(a: np.ndarray, b: np.ndarray) -> complex:
    """Hilbert-Schmidt inner product Tr(a^dagger b)."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise LinalgError(f"shape mismatch: {a.shape} vs {b.shape}")
    return complex(np.vdot(a, b))


def is_orthonormal_basis(vecs, tol: float = DEFAULT_TOL) -> bool:
    """True iff the vectors number exactly their common dimension and their
    Gram matrix is the identity entrywise within tol."""
    mat = np.asarray(list(vecs), dtype=complex)
    if mat.ndim != 2 or mat.shape[0] == 0:
        raise LinalgError("need a nonempty list of equal-dimension vectors")
    k, d = mat.shape
    if k != d:
        return False
    gram = mat.conj() @ mat.T
    return bool(np.max(np.abs(gram - np.eye(d))) <= tol)


@dataclass(frozen=True)
class SchmidtDecomposition:
    """Schmidt data of a bipartite pure state.

    coefficients are all min(dA,dB) singular values (nonincreasing); rank
    counts those above rank_tol relative to the largest.  left[:, i] and
    right[:, i] are the i-th Schmidt vectors, so the state reconstructs as
    sum_i coefficients[i] * kron(left[:, i], right[:, i]).
    """
    coefficients: np.ndarray
    left: np.ndarray
    right: np.ndarray
    rank: int

    def reconstruct(self) -> np.ndarray:
        terms = self.left[:, None, :] * self.right[None, :, :]  # (dA, dB, k)
        return (terms * self.coefficients).sum(axis=2).ravel()


def schmidt(state: np.ndarray, d_a: int, d_b: int,
            rank_tol: float = DEFAULT_RANK_TOL) -> SchmidtDecomposition:
    state = np.asarray(state, dtype=complex).ravel()
    if d_a * d_b != state.size:
        raise LinalgError(f"state of size {state.size} does not factor as {d_a}x{d_b}")
    nrm = np.linalg.norm(state)
    if nrm == 0:
        raise LinalgError("zero state has no Schmidt decomposition")
    mat = state.reshape(d_a, d_b)
    u, s, vh = np.linalg.svd(mat, full_matrices=False)
    # state = sum_i s[i] * u[:, i] (x) vh[i, :].T  (no conjugation: vh rows
    # are already the B-side kets in this matrix picture)
    rank = int(np.count_nonzero(s > rank_tol * s[0]))
    return SchmidtDecomposition(coefficients=s, left=u, right=vh.T, rank=rank)


def support_projector(a: np.ndarray, rank_tol: float = DEFAULT_RANK_TOL,
                      tol: float = DEFAULT_TOL) -> np.ndarray:
    """Orthogonal projector onto the span of eigenvectors of a PSD matrix with
    eigenvalue above rank_tol relative to the largest."""
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise LinalgError("support requires a square matrix")
    herm_defect = np.max(np.abs(a - a.conj().T)) if a.size else 0.0
    if herm_defect > tol:
        raise LinalgError(f"matrix is not Hermitian (defect {herm_defect:.3e})")
    w, v = np.linalg.eigh((a + a.conj().T) / 2)
    lam_max = w[-1] if w.size else 0.0
    if w.size and w[0] < -tol * max(1.0, lam_max):
        raise LinalgError(f"matrix has a negative eigenvalue {w[0]:.3e}")
    keep = w > rank_tol * max(lam_max, 0.0)
    if lam_max <= 0:
        keep = np.zeros_like(keep)
    vk = v[:, keep]
    return vk @ vk.conj().T


def partial_trace(m: np.ndarray, d_a: int, d_b: int, side: str) -> np.ndarray:
    """Trace out one tensor factor of a (dA*dB)x(dA*dB) matrix.

    side "B" keeps the A system, side "A" keeps the B system.
    """
    m = np.asarray(m, dtype=complex)
    d = d_a * d_b
    if m.shape != (d, d):
        raise LinalgError(f"matrix shape {m.shape} does not factor as ({d_a}x{d_b})^2")
    t = m.reshape(d_a, d_b, d_a, d_b)
    if side == "B":
        return np.einsum("ibjb->ij", t)
    if side == "A":
        return np.einsum("aiaj->ij", t)
    raise LinalgError(f"side must be 'A' or 'B', got {side!r}")


def matrix_rank(a: np.ndarray, rank_tol: float = DEFAULT_RANK_TOL) -> int:
    a = np.asarray(a, dtype=complex)
    if a.size == 0:
        return 0
    s = np.linalg.svd(a, compute_uv=False)
    if s.size == 0 or s[0] == 0:
        return 0
    return int(np.count_nonzero(s > rank_tol * s[0]))


def maximally_entangled(d: int) -> np.ndarray:
    """sum_i |ii> / sqrt(d) as a flat vector of length d*d."""
    return (np.eye(d, dtype=complex) / np.sqrt(d)).ravel()


def outer(v: np.ndarray) -> np.ndarray:
    """|v><v|."""
    v = np.asarray(v, dtype=complex).ravel()
    return np.outer(v, v.conj())
