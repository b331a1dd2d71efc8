"""Orthogonal representations, matrix representations, rank-1/rank-r quantum
colorings, and the bijections between them.

Conventions: an orthogonal representation stores one row per vertex; a matrix
representation stores one unitary per vertex whose column i is the vector of
product vertex (v, i) under the vertex id scheme of cartesian_product (id =
v * c + i).  Upper bounds on the orthogonal rank and on the rank-1 quantum
chromatic number are only ever claimed with a verified witness; search
failure is reported as "not found", never as infeasibility.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .coloring import (DEFAULT_BUDGET, ColoringCertificate, chromatic_number,
                       clique_number, greedy_coloring, is_c_colorable,
                       verify_coloring)
from .graphs import Graph, cartesian_product, complete_graph, complement
from .linalg import (DEFAULT_RANK_TOL, DEFAULT_TOL, is_orthonormal_basis,
                     matrix_rank)


class RepsError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class OrthogonalRepresentation:
    """Nonzero vector per vertex; adjacency means orthogonality (checked by
    the verifier, not the constructor)."""
    dimension: int
    vectors: np.ndarray  # (n, dimension) complex

    def __post_init__(self):
        v = np.asarray(self.vectors, dtype=complex)
        if v.ndim != 2 or v.shape[1] != self.dimension:
            raise RepsError(f"vectors must be (n, {self.dimension}), got {v.shape}")
        object.__setattr__(self, "vectors", v)


@dataclass(frozen=True, eq=False)
class MatrixRepresentation:
    dimension: int
    matrices: np.ndarray  # (n, c, c) complex, one unitary per vertex

    def __post_init__(self):
        m = np.asarray(self.matrices, dtype=complex)
        if m.ndim != 3 or m.shape[1] != self.dimension or m.shape[2] != self.dimension:
            raise RepsError(
                f"matrices must be (n, {self.dimension}, {self.dimension}), got {m.shape}")
        object.__setattr__(self, "matrices", m)


@dataclass(frozen=True, eq=False)
class QuantumColoring:
    """Per-vertex projective measurement with one outcome per color.

    rank-1 colorings are stored as vectors (n, c, d) with each vertex's rows
    an orthonormal basis; general rank-r ones as projectors (n, c, d, d).
    """
    colors: int
    rank: int
    vectors: np.ndarray | None = None
    projectors: np.ndarray | None = None

    def __post_init__(self):
        if (self.vectors is None) == (self.projectors is None):
            raise RepsError("provide exactly one of vectors / projectors")
        if self.vectors is not None:
            v = np.asarray(self.vectors, dtype=complex)
            if v.ndim != 3 or v.shape[1] != self.colors:
                raise RepsError(f"vectors must be (n, {self.colors}, d), got {v.shape}")
            if self.rank != 1:
                raise RepsError("vector form is only for rank-1 colorings")
            object.__setattr__(self, "vectors", v)
        else:
            p = np.asarray(self.projectors, dtype=complex)
            if p.ndim != 4 or p.shape[1] != self.colors or p.shape[2] != p.shape[3]:
                raise RepsError(
                    f"projectors must be (n, {self.colors}, d, d), got {p.shape}")
            object.__setattr__(self, "projectors", p)

    @property
    def n_vertices(self) -> int:
        arr = self.vectors if self.vectors is not None else self.projectors
        return arr.shape[0]

    @property
    def local_dimension(self) -> int:
        if self.vectors is not None:
            return self.vectors.shape[2]
        return self.projectors.shape[2]

    def projector(self, v: int, alpha: int) -> np.ndarray:
        if self.projectors is not None:
            return self.projectors[v, alpha]
        a = self.vectors[v, alpha]
        return np.outer(a, a.conj())


@dataclass(frozen=True, eq=False)
class PSDWitness:
    """Candidate certificate for a minimum-PSD-rank style bound: a PSD matrix
    whose off-diagonal support must match the complement graph."""
    matrix: np.ndarray
    rank: int

    def __post_init__(self):
        a = np.asarray(self.matrix, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise RepsError(f"witness matrix must be square, got {a.shape}")
        object.__setattr__(self, "matrix", a)


def verify_orthogonal_representation(g: Graph, rep: OrthogonalRepresentation,
                                     tol: float = DEFAULT_TOL) -> bool:
    vecs = rep.vectors
    if vecs.shape[0] != g.n:
        raise RepsError(f"representation covers {vecs.shape[0]} vertices, graph has {g.n}")
    if np.any(np.linalg.norm(vecs, axis=1) <= tol):
        return False
    e = g.edge_array
    if e.shape[0] == 0:
        return True
    prods = np.einsum("ec,ec->e", vecs[e[:, 0]].conj(), vecs[e[:, 1]])
    return bool(np.all(np.abs(prods) <= tol))


def verify_matrix_representation(g: Graph, rep: MatrixRepresentation,
                                 tol: float = DEFAULT_TOL) -> bool:
    mats = rep.matrices
    if mats.shape[0] != g.n:
        raise RepsError(f"representation covers {mats.shape[0]} vertices, graph has {g.n}")
    c = rep.dimension
    eye = np.eye(c)
    gram = np.einsum("vij,vik->vjk", mats.conj(), mats)  # U† U per vertex
    if np.max(np.abs(gram - eye[None])) > tol:
        return False
    for u, w in g.edges():
        diag = np.einsum("ij,ij->j", mats[u].conj(), mats[w])  # diag(U_u† U_w)
        if np.max(np.abs(diag)) > tol:
            return False
    return True


def _verify_projective_measurement(ops: np.ndarray, rank: int, tol: float) -> bool:
    # ops: (c, d, d); Hermitian idempotents of trace `rank` summing to identity
    d = ops.shape[-1]
    if np.max(np.abs(ops - ops.conj().transpose(0, 2, 1))) > tol:
        return False
    if np.max(np.abs(np.einsum("aij,ajk->aik", ops, ops) - ops)) > tol:
        return False
    traces = np.einsum("aii->a", ops).real
    if np.max(np.abs(traces - rank)) > d * tol:
        return False
    return np.max(np.abs(ops.sum(axis=0) - np.eye(d))) <= d * tol


def verify_quantum_coloring(g: Graph, qc: QuantumColoring,
                            tol: float = DEFAULT_TOL,
                            edge_chunk: int = 200_000) -> bool:
    """Checks the per-vertex measurement structure and the per-color edge
    orthogonality (rank-1: vector inner products; rank-r: Hilbert-Schmidt
    inner products of the projectors)."""
    if qc.n_vertices != g.n:
        raise RepsError(f"coloring covers {qc.n_vertices} vertices, graph has {g.n}")
    if qc.vectors is not None:
        vecs = qc.vectors
        if vecs.shape[2] != qc.colors:
            # a rank-1 projective measurement with c outcomes lives in C^c
            return False
        gram = np.einsum("vad,vbd->vab", vecs.conj(), vecs)
        if np.max(np.abs(gram - np.eye(qc.colors)[None])) > tol:
            return False
        e = g.edge_array
        # per color, chunked over edges: keeps gathers at O(chunk * d) memory
        # even for graphs with millions of edges
        for alpha in range(qc.colors):
            xa = np.ascontiguousarray(vecs[:, alpha, :])
            for lo in range(0, e.shape[0], edge_chunk):
                chunk = e[lo:lo + edge_chunk]
                prods = np.einsum("ed,ed->e", xa[chunk[:, 0]].conj(),
                                  xa[chunk[:, 1]])
                if np.max(np.abs(prods), initial=0.0) > tol:
                    return False
        return True

    ops = qc.projectors
    d = qc.local_dimension
    if d != qc.rank * qc.colors:
        # c orthogonal rank-r projectors summing to I_d force d = r*c
        return False
    for v in range(g.n):
        if not _verify_projective_measurement(ops[v], qc.rank, tol):
            return False
    for u, w in g.edges():
        hs = np.einsum("aij,aij->a", ops[u].conj(), ops[w])
        if np.max(np.abs(hs)) > tol:
            return False
    return True


def quantum_coloring_from_classical(g: Graph, cert: ColoringCertificate) -> QuantumColoring:
    """Shifted computational bases: vertex with color k gets a_{v,alpha} =
    e_{(alpha+k) mod c}.  The union of all vectors is exactly the
    computational basis of C^c."""
    if not verify_coloring(g, cert):
        raise RepsError("certificate is not a proper coloring")
    c = cert.c
    vecs = np.zeros((g.n, c, c), dtype=complex)
    for v, k in enumerate(cert.colors):
        for alpha in range(c):
            vecs[v, alpha, (alpha + k) % c] = 1.0
    return QuantumColoring(colors=c, rank=1, vectors=vecs)


def orthrep_to_matrixrep(g: Graph, rep: OrthogonalRepresentation,
                         tol: float = DEFAULT_TOL) -> MatrixRepresentation:
    """Representation of G□K_c in dimension c -> matrix representation of G:
    column i of U_v is the normalized vector at product vertex (v, i)."""
    c = rep.dimension
    product = cartesian_product(g, complete_graph(c))
    if not verify_orthogonal_representation(product, rep, tol):
        raise RepsError("input does not verify as a representation of G□K_c")
    mats = np.empty((g.n, c, c), dtype=complex)
    for v in range(g.n):
        block = rep.vectors[v * c:(v + 1) * c]
        mats[v] = (block / np.linalg.norm(block, axis=1, keepdims=True)).T
    out = MatrixRepresentation(dimension=c, matrices=mats)
    if not verify_matrix_representation(g, out, max(tol * c, tol)):
        raise RepsError("internal inconsistency: verified product representation "
                        "did not yield a matrix representation")
    return out


def matrixrep_to_orthrep(g: Graph, rep: MatrixRepresentation,
                         tol: float = DEFAULT_TOL) -> OrthogonalRepresentation:
    """Matrix representation of G -> orthogonal representation of G□K_c;
    the vector at product vertex (v, i) is column i of U_v."""
    if not verify_matrix_representation(g, rep, tol):
        raise RepsError("input does not verify as a matrix representation")
    c = rep.dimension
    vecs = np.empty((g.n * c, c), dtype=complex)
    for v in range(g.n):
        vecs[v * c:(v + 1) * c] = rep.matrices[v].T
    return OrthogonalRepresentation(dimension=c, vectors=vecs)


@dataclass(frozen=True)
class SearchParams:
    seed: int = 0
    iterations: int = 300
    restarts: int = 24
    real: bool = False
    tol: float = DEFAULT_TOL
    polish_sweeps: int = 150
    step: float = 0.6
    # polish only near-feasible points; stalled penalties mean a bad basin
    # (or true infeasibility) and another restart is cheaper than projection
    polish_threshold: float = 1e-3


@dataclass(frozen=True, eq=False)
class SearchResult:
    found: bool
    representation: OrthogonalRepresentation | None
    best_penalty: float
    restarts_tried: int


def _polish(x: np.ndarray, neighbors: list[np.ndarray], sweeps: int,
            tol: float) -> bool:
    """Cyclic projection: repeatedly replace each vector by its component
    orthogonal to the span of its neighbors.  Mutates x; returns success."""
    n = x.shape[0]
    for _ in range(sweeps):
        worst = 0.0
        for u in range(n):
            nb = neighbors[u]
            if nb.size == 0:
                continue
            m = x[nb]
            _, s, vh = np.linalg.svd(m, full_matrices=False)
            basis = vh[s > 1e-12 * max(s[0], 1e-300)]
            xu = x[u] - basis.T @ (basis.conj() @ x[u])
            norm = np.linalg.norm(xu)
            if norm < 1e-8:
                return False
            x[u] = xu / norm
            worst = max(worst, float(np.max(np.abs(m.conj() @ x[u]))))
        if worst <= 0.1 * tol:
            return True
    return False


def search_orthogonal_representation(g: Graph, c: int,
                                     params: SearchParams = SearchParams()) -> SearchResult:
    """Randomized penalty search for an orthogonal representation in C^c.

    Minimizes sum over edges of |<x_u, x_v>|^2 by projected gradient from
    random starts, then polishes by cyclic projection; a result counts as
    found only if the final vectors verify at params.tol.  not_found is not a
    proof of nonexistence.
    """
    if c < 1:
        raise RepsError("dimension must be >= 1")
    e = g.edge_array
    rng = np.random.default_rng(params.seed)
    if e.shape[0] == 0:
        vecs = np.zeros((g.n, c), dtype=complex)
        vecs[:, 0] = 1.0
        rep = OrthogonalRepresentation(c, vecs)
        return SearchResult(True, rep, 0.0, 0)
    neighbors = [np.asarray(g.neighbors(v), dtype=np.int64) for v in range(g.n)]
    e0, e1 = e[:, 0], e[:, 1]
    best_penalty = np.inf
    for restart in range(1, params.restarts + 1):
        x = rng.normal(size=(g.n, c))
        if not params.real:
            x = x + 1j * rng.normal(size=(g.n, c))
        x = x.astype(complex)
        x /= np.linalg.norm(x, axis=1, keepdims=True)
        penalty = np.inf
        for it in range(params.iterations):
            pe = np.einsum("ec,ec->e", x[e0].conj(), x[e1])
            penalty = float(np.sum(np.abs(pe) ** 2))
            if penalty < best_penalty:
                best_penalty = penalty
            if penalty < 1e-6:
                break
            grad = np.zeros_like(x)
            np.add.at(grad, e0, x[e1] * pe.conj()[:, None])
            np.add.at(grad, e1, x[e0] * pe[:, None])
            step = params.step / (1.0 + it / 60.0)
            x = x - step * grad
            x /= np.linalg.norm(x, axis=1, keepdims=True)
        if penalty > params.polish_threshold:
            continue
        if _polish(x, neighbors, params.polish_sweeps, params.tol):
            rep = OrthogonalRepresentation(c, x.copy())
            if verify_orthogonal_representation(g, rep, params.tol):
                return SearchResult(True, rep, 0.0, restart)
    return SearchResult(False, None, best_penalty, params.restarts)


def representation_from_coloring(cert: ColoringCertificate) -> OrthogonalRepresentation:
    """Color-class basis vectors: vertex with color k gets e_k in C^c.  A
    proper coloring makes this a verified orthogonal representation."""
    vecs = np.zeros((len(cert.colors), cert.c), dtype=complex)
    for v, k in enumerate(cert.colors):
        vecs[v, k] = 1.0
    return OrthogonalRepresentation(cert.c, vecs)


@dataclass(frozen=True, eq=False)
class XiBounds:
    lower: int
    upper: int
    upper_witness: OrthogonalRepresentation
    lower_clique: tuple[int, ...]


def xi_bounds(g: Graph, params: SearchParams = SearchParams(),
              budget: int = DEFAULT_BUDGET) -> XiBounds:
    """Certified sandwich for the orthogonal rank: lower = clique number
    (xi >= omega), upper = smallest dimension with a verified representation.

    Candidate witnesses come from the randomized search and, at the greedy
    coloring dimension, from color-class basis vectors (xi <= chi); the upper
    bound always ships with a representation that passed the verifier.
    """
    if g.n == 0:
        raise RepsError("xi bounds of the empty graph are undefined")
    cl = clique_number(g, budget)
    lower = cl.omega
    greedy = greedy_coloring(g)
    upper = greedy.c
    witness = representation_from_coloring(greedy)
    assert verify_orthogonal_representation(g, witness, params.tol)
    for c in range(lower, upper):
        res = search_orthogonal_representation(g, c, params)
        if res.found:
            upper = c
            witness = res.representation
            break
    return XiBounds(lower=lower, upper=upper, upper_witness=witness,
                    lower_clique=cl.clique)


@dataclass(frozen=True, eq=False)
class ChiQ1Result:
    c: int | None  # smallest c <= c_max with a verified witness, else None
    witness: MatrixRepresentation | None
    skipped_infeasible: tuple[int, ...]  # c values ruled out by the clique bound


def chi_q1_upper_via_product(g: Graph, c_max: int,
                             params: SearchParams = SearchParams(),
                             budget: int = DEFAULT_BUDGET) -> ChiQ1Result:
    """Upper bound for the rank-1 quantum chromatic number through the
    product characterization: the smallest c with a verified orthogonal
    representation of G□K_c in dimension c, returned as a matrix
    representation of G.

    c below the clique number is skipped outright: cliques of a Cartesian
    product live inside a single fiber, so omega(G□K_c) = max(omega(G), c)
    and xi(G□K_c) >= omega(G) > c is infeasible.  A proper c-coloring of G,
    when one exists within budget, supplies a deterministic witness (shifted
    bases); otherwise the randomized search runs on the product.  Failure at
    every c <= c_max is not a proof that chi_q1 exceeds c_max.
    """
    if c_max < 1:
        raise RepsError("c_max must be >= 1")
    if g.n == 0:
        raise RepsError("chi_q1 of the empty graph is undefined")
    omega = clique_number(g, budget).omega
    skipped = tuple(c for c in range(1, min(omega, c_max + 1)))
    for c in range(max(omega, 1), c_max + 1):
        col = is_c_colorable(g, c, budget)
        if col.status == "yes":
            qc = quantum_coloring_from_classical(g, col.certificate)
            rep = OrthogonalRepresentation(c, qc.vectors.reshape(g.n * c, c))
            return ChiQ1Result(c, orthrep_to_matrixrep(g, rep, params.tol), skipped)
        product = cartesian_product(g, complete_graph(c))
        res = search_orthogonal_representation(product, c, params)
        if res.found:
            return ChiQ1Result(c, orthrep_to_matrixrep(g, res.representation,
                                                       params.tol), skipped)
    return ChiQ1Result(None, None, skipped)


@dataclass(frozen=True, eq=False)
class PSDCheckResult:
    ok: bool
    reason: str | None
    representation: OrthogonalRepresentation | None


def psd_witness_check(g: Graph, witness: PSDWitness,
                      tol: float = DEFAULT_TOL,
                      rank_tol: float = DEFAULT_RANK_TOL) -> PSDCheckResult:
    """Accepts a PSD matrix whose off-diagonal support equals the complement
    graph's edges and whose rank is at most the claimed rank; on acceptance
    the top-rank Gram factor is returned as a verified orthogonal
    representation of g (checks run in the order: PSD, pattern, rank, zero
    Gram vector)."""
    a = witness.matrix
    n = g.n
    if a.shape[0] != n:
        raise RepsError(f"matrix is {a.shape[0]}x{a.shape[0]}, graph has {n} vertices")
    if np.max(np.abs(a - a.conj().T)) > tol:
        raise RepsError("witness matrix is not Hermitian")
    evals, evecs = np.linalg.eigh(a)
    if evals[0] < -tol:
        return PSDCheckResult(False, "not PSD", None)
    comp = complement(g)
    want = np.zeros((n, n), dtype=bool)
    ce = comp.edge_array
    want[ce[:, 0], ce[:, 1]] = True
    want[ce[:, 1], ce[:, 0]] = True
    have = np.abs(a) > tol
    np.fill_diagonal(have, False)
    if not np.array_equal(want, have):
        return PSDCheckResult(False, "wrong pattern", None)
    r = witness.rank
    if matrix_rank(a, rank_tol) > r:
        return PSDCheckResult(False, "rank too high", None)
    if np.any(np.abs(np.diag(a)) <= tol):
        return PSDCheckResult(False, "zero Gram vector", None)
    top = evals[-r:]
    factor = evecs[:, -r:] * np.sqrt(np.clip(top, 0.0, None))
    rep = OrthogonalRepresentation(r, factor.conj())
    if not verify_orthogonal_representation(g, rep, tol):
        return PSDCheckResult(False, "Gram factor failed edge verification", None)
    return PSDCheckResult(True, None, rep)


def hadamard_quantum_coloring(n_bits: int) -> QuantumColoring:
    """Fourier/sign rank-1 quantum N-coloring of the Hadamard graph: vertex u
    gets a_{u,alpha}[j] = (-1)^{u_j} omega^{j*alpha} / sqrt(N) with omega the
    primitive N-th root of unity.

    Per vertex the a_{u,alpha} form an orthonormal basis (geometric sums);
    across an edge, <a_{u,alpha}, a_{v,alpha}> = (N - 2*d(u,v))/N = 0 exactly
    at Hamming distance N/2.
    """
    if n_bits < 2 or n_bits % 2:
        raise RepsError(f"Hadamard coloring needs even N >= 2, got {n_bits}")
    size = 1 << n_bits
    j = np.arange(n_bits)
    u = np.arange(size, dtype=np.uint64)
    bits = ((u[:, None] >> j[None, :].astype(np.uint64)) & 1).astype(np.int8)
    signs = 1.0 - 2.0 * bits  # (-1)^{u_j}
    omega = np.exp(2j * np.pi / n_bits)
    phase = omega ** np.outer(j, np.arange(n_bits))  # [j, alpha]
    vecs = (signs[:, None, :] * phase.T[None, :, :]) / np.sqrt(n_bits)
    return QuantumColoring(colors=n_bits, rank=1, vectors=vecs)
