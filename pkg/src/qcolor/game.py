"""The two-player coloring game: referee asks Alice vertex v and Bob vertex w
(equal or adjacent); they win when equal vertices get equal colors and
adjacent vertices different ones.

The referee's question distribution is not part of the game's definition;
winning with certainty is independent of it as long as every legal pair has
positive probability.  The DEFAULT used throughout is uniform over
{(v, v) : v in V} union {(v, w), (w, v) : (v, w) in E}.  Distributions carry
exact rational weights so classical probabilities are exact fractions.

normalize_strategy implements the constructive normal-form transformation for
winning strategies: Schmidt restriction, support replacement, conjugation
identity, Schmidt flattening, rank padding.  Every stage re-checks its
post-conditions and aborts with the stage name on failure; the output uses
projective rank-r measurements, a maximally entangled state of local
dimension r*c, Bob = entrywise conjugate of Alice, and per-color
Hilbert-Schmidt orthogonality across edges.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .graphs import Graph
from .linalg import DEFAULT_RANK_TOL, DEFAULT_TOL, maximally_entangled
from .reps import QuantumColoring


class GameError(ValueError):
    pass


class NormalFormError(GameError):
    """Raised when a normal-form stage's post-condition fails; .stage names
    the pipeline stage, .detail carries the offending quantity."""

    def __init__(self, stage: str, message: str, detail=None):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage
        self.detail = detail


# ---------------------------------------------------------------------------
# questions and strategies


@dataclass(frozen=True)
class QuestionDistribution:
    """Probability over ordered question pairs; weights are exact fractions
    summing to 1, support restricted to v == w or (v, w) an edge."""
    pairs: tuple[tuple[int, int], ...]
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.pairs) != len(self.weights):
            raise GameError("pairs and weights differ in length")
        if any(w < 0 for w in self.weights):
            raise GameError("negative question weight")
        if sum(self.weights, Fraction(0)) != 1:
            raise GameError("question weights must sum to 1")

    def validate_support(self, g: Graph) -> None:
        for v, w in self.pairs:
            if not (0 <= v < g.n and 0 <= w < g.n):
                raise GameError(f"question ({v},{w}) out of range")
            if v != w and not g.has_edge(v, w):
                raise GameError(f"question ({v},{w}) is neither diagonal nor an edge")


def uniform_questions(g: Graph) -> QuestionDistribution:
    """Uniform over all diagonal pairs and both orientations of each edge."""
    pairs = [(v, v) for v in range(g.n)]
    for u, v in g.edges():
        pairs.append((u, v))
        pairs.append((v, u))
    if not pairs:
        raise GameError("no legal questions on the empty graph")
    w = Fraction(1, len(pairs))
    return QuestionDistribution(tuple(pairs), tuple(w for _ in pairs))


@dataclass(frozen=True)
class ClassicalStrategy:
    colors: int
    alice: tuple[int, ...]
    bob: tuple[int, ...]

    def __post_init__(self):
        for side in (self.alice, self.bob):
            if any(not 0 <= a < self.colors for a in side):
                raise GameError("strategy answers outside the color range")


@dataclass(frozen=True, eq=False)
class POVMStrategy:
    """Shared state plus per-vertex POVMs: alice is (n, c, dA, dA), bob is
    (n, c, dB, dB), state is a vector of length dA*dB (A-major)."""
    colors: int
    dim_a: int
    dim_b: int
    state: np.ndarray
    alice: np.ndarray
    bob: np.ndarray

    def __post_init__(self):
        st = np.asarray(self.state, dtype=complex).ravel()
        a = np.asarray(self.alice, dtype=complex)
        b = np.asarray(self.bob, dtype=complex)
        if st.shape[0] != self.dim_a * self.dim_b:
            raise GameError(f"state has length {st.shape[0]}, expected "
                            f"{self.dim_a}*{self.dim_b}")
        if a.ndim != 4 or a.shape[1:] != (self.colors, self.dim_a, self.dim_a):
            raise GameError(f"alice operators must be (n, {self.colors}, "
                            f"{self.dim_a}, {self.dim_a}), got {a.shape}")
        if b.shape != (a.shape[0], self.colors, self.dim_b, self.dim_b):
            raise GameError(f"bob operators must match alice vertex count with "
                            f"local dimension {self.dim_b}, got {b.shape}")
        object.__setattr__(self, "state", st)
        object.__setattr__(self, "alice", a)
        object.__setattr__(self, "bob", b)

    @property
    def n_vertices(self) -> int:
        return self.alice.shape[0]

    def state_matrix(self) -> np.ndarray:
        return self.state.reshape(self.dim_a, self.dim_b)


def validate_strategy(s: POVMStrategy, tol: float = 1e-8) -> None:
    """POVM sanity: normalized state, PSD elements, per-vertex sums = identity."""
    if abs(np.linalg.norm(s.state) - 1.0) > tol:
        raise GameError(f"state norm {np.linalg.norm(s.state):.6g} != 1")
    for name, ops, d in (("alice", s.alice, s.dim_a), ("bob", s.bob, s.dim_b)):
        herm = np.max(np.abs(ops - ops.conj().transpose(0, 1, 3, 2)))
        if herm > tol:
            raise GameError(f"{name} POVM element not Hermitian (defect {herm:.3g})")
        evals = np.linalg.eigvalsh(ops.reshape(-1, d, d))
        if float(evals.min()) < -tol:
            raise GameError(f"{name} POVM element not PSD "
                            f"(eigenvalue {float(evals.min()):.3g})")
        defect = np.max(np.abs(ops.sum(axis=1) - np.eye(d)))
        if defect > d * tol:
            raise GameError(f"{name} POVM does not sum to identity "
                            f"(defect {defect:.3g})")


def strategy_from_quantum_coloring(qc: QuantumColoring) -> POVMStrategy:
    """Normal-form strategy of a quantum coloring: maximally entangled state
    of the coloring's local dimension, Alice the projectors, Bob their
    entrywise conjugates."""
    d = qc.local_dimension
    n = qc.n_vertices
    if qc.projectors is not None:
        ops = np.asarray(qc.projectors, dtype=complex)
    else:
        v = qc.vectors
        ops = np.einsum("vai,vaj->vaij", v, v.conj())
    return POVMStrategy(colors=qc.colors, dim_a=d, dim_b=d,
                        state=maximally_entangled(d),
                        alice=ops, bob=ops.conj())


# ---------------------------------------------------------------------------
# exact probabilities


def classical_win_probability(g: Graph, s: ClassicalStrategy,
                              q: QuestionDistribution | None = None) -> Fraction:
    """Exact q-mass of the question pairs the deterministic pair answers
    correctly."""
    if len(s.alice) != g.n or len(s.bob) != g.n:
        raise GameError("strategy does not cover the vertex set")
    if q is None:
        q = uniform_questions(g)
    q.validate_support(g)
    total = Fraction(0)
    for (v, w), weight in zip(q.pairs, q.weights):
        if v == w:
            if s.alice[v] == s.bob[w]:
                total += weight
        elif s.alice[v] != s.bob[w]:
            total += weight
    return total


def best_classical_win_probability(g: Graph, colors: int,
                                   q: QuestionDistribution | None = None):
    """Exhaustive maximum over all deterministic strategy pairs (c^n x c^n);
    returns (best probability as an exact Fraction, best strategy)."""
    import itertools

    if q is None:
        q = uniform_questions(g)
    best = Fraction(-1)
    best_s = None
    for alice in itertools.product(range(colors), repeat=g.n):
        for bob in itertools.product(range(colors), repeat=g.n):
            s = ClassicalStrategy(colors, alice, bob)
            p = classical_win_probability(g, s, q)
            if p > best:
                best, best_s = p, s
                if best == 1:
                    return best, best_s
    return best, best_s


def _products(s: POVMStrategy):
    """X[v,a] = E_va @ Psi and Z[w,b] = conj(Psi) @ F_wb; then
    <psi| E_va (x) F_wb |psi> = sum(X[v,a] * Z[w,b])."""
    psi = s.state_matrix()
    x = np.einsum("vaij,jk->vaik", s.alice, psi)
    z = np.einsum("jk,vbkl->vbjl", psi.conj(), s.bob)
    return x, z


def _pair_color_values(x: np.ndarray, z: np.ndarray, vs: np.ndarray,
                       ws: np.ndarray, edge_chunk: int) -> np.ndarray:
    """Per-pair equal-color values: out[e, a] = <psi|E_{vs[e],a} (x)
    F_{ws[e],a}|psi>.  Dense pair sets go through one BLAS product per color;
    sparse ones through chunked gathers."""
    n, c = x.shape[0], x.shape[1]
    dd = x.shape[2] * x.shape[3]
    x2 = x.reshape(n, c, dd)
    z2 = z.reshape(n, c, dd)
    out = np.empty((len(vs), c))
    if n * n <= 4 * len(vs):
        for a in range(c):
            t = x2[:, a] @ z2[:, a].T
            out[:, a] = t[vs, ws].real
    else:
        for lo in range(0, len(vs), edge_chunk):
            sl = slice(lo, lo + edge_chunk)
            out[sl] = np.einsum("eak,eak->ea", x2[vs[sl]], z2[ws[sl]]).real
    return out


def quantum_outcome_distribution(s: POVMStrategy, v: int, w: int,
                                 tol: float = 1e-8) -> np.ndarray:
    """P[alpha, beta] = <psi| E_{v,alpha} (x) F_{w,beta} |psi> as a real
    (c, c) array.  Entries of a valid strategy are >= -1e-12 and sum to 1."""
    validate_strategy(s, tol)
    if not (0 <= v < s.n_vertices and 0 <= w < s.n_vertices):
        raise GameError(f"vertex pair ({v},{w}) out of range")
    psi = s.state_matrix()
    x = np.einsum("aij,jk->aik", s.alice[v], psi)
    z = np.einsum("jk,bkl->bjl", psi.conj(), s.bob[w])
    return np.einsum("aij,bij->ab", x, z).real


def quantum_win_probability(g: Graph, s: POVMStrategy,
                            q: QuestionDistribution | None = None,
                            edge_chunk: int = 50_000) -> float:
    """Exact (up to float arithmetic) winning probability: diagonal questions
    win on equal outcomes, edge questions on differing outcomes."""
    if s.n_vertices != g.n:
        raise GameError("strategy does not cover the vertex set")
    if q is None:
        q = uniform_questions(g)
    q.validate_support(g)
    x, z = _products(s)
    sum_x = x.sum(axis=1)  # (n, dA, dB): (sum_a E_va) @ Psi
    sum_z = z.sum(axis=1)
    pairs = np.array(q.pairs)
    weights = np.array([float(w) for w in q.weights])
    diag = pairs[:, 0] == pairs[:, 1]
    total = 0.0
    if np.any(diag):
        vals = _pair_color_values(x, z, pairs[diag, 0], pairs[diag, 1],
                                  edge_chunk)
        total += float(weights[diag] @ vals.sum(axis=1))
    if np.any(~diag):
        vs, ws = pairs[~diag, 0], pairs[~diag, 1]
        agree = _pair_color_values(x, z, vs, ws, edge_chunk).sum(axis=1)
        full = _pair_color_values(sum_x[:, None], sum_z[:, None], vs, ws,
                                  edge_chunk)[:, 0]
        total += float(weights[~diag] @ (full - agree))
    return total


@dataclass(frozen=True)
class Violation:
    kind: str  # "vertex" (equal answers required) | "edge" (differing answers)
    v: int
    w: int
    alpha: int
    beta: int
    value: float


@dataclass(frozen=True)
class ConsistencyReport:
    ok: bool
    violations: tuple[Violation, ...]


def check_consistency(s: POVMStrategy, g: Graph, tol: float = DEFAULT_TOL,
                      edge_chunk: int = 50_000,
                      max_violations: int = 1000) -> ConsistencyReport:
    """Winning-strategy conditions: on every vertex the off-diagonal outcome
    mass vanishes; across every edge the equal-color mass vanishes.  Lists
    each (v, alpha, beta) and (v, w, alpha) whose probability exceeds tol."""
    if s.n_vertices != g.n:
        raise GameError("strategy does not cover the vertex set")
    x, z = _products(s)
    violations: list[Violation] = []
    per_vertex = np.einsum("vaij,vbij->vab", x, z).real
    c = s.colors
    off = ~np.eye(c, dtype=bool)
    bad = np.abs(per_vertex) > tol
    bad &= off[None, :, :]
    for v, a, b in zip(*np.nonzero(bad)):
        if len(violations) >= max_violations:
            break
        violations.append(Violation("vertex", int(v), int(v), int(a), int(b),
                                    float(per_vertex[v, a, b])))
    e = g.edge_array
    if e.shape[0]:
        for (vs, ws) in ((e[:, 0], e[:, 1]), (e[:, 1], e[:, 0])):
            if len(violations) >= max_violations:
                break
            vals = _pair_color_values(x, z, vs, ws, edge_chunk)
            bad_e = np.abs(vals) > tol
            for ei, a in zip(*np.nonzero(bad_e)):
                if len(violations) >= max_violations:
                    break
                violations.append(Violation("edge", int(vs[ei]), int(ws[ei]),
                                            int(a), int(a), float(vals[ei, a])))
    return ConsistencyReport(ok=not violations, violations=tuple(violations))


# ---------------------------------------------------------------------------
# normal form


@dataclass(frozen=True, eq=False)
class NormalizationTrace:
    schmidt_coefficients: tuple[float, ...]  # of the input state, descending
    support_projector: np.ndarray  # in the rotated (Schmidt) basis
    rho: np.ndarray  # reduced state after restriction, renormalized
    stages: tuple[tuple[str, POVMStrategy], ...]


@dataclass(frozen=True, eq=False)
class NormalFormResult:
    normal: POVMStrategy
    trace: NormalizationTrace


def _guarded_support(m: np.ndarray, rank_tol: float, stage: str) -> np.ndarray:
    """Orthogonal projector onto the column space of a PSD matrix; rejects
    eigenvalues within a factor 10 of the rank cutoff as ambiguous."""
    herm = np.max(np.abs(m - m.conj().T))
    if herm > 1e-8:
        raise NormalFormError(stage, f"support input not Hermitian (defect {herm:.3g})")
    w, vecs = np.linalg.eigh(m)
    top = float(w[-1])
    if top <= 0.0:
        return np.zeros_like(m)
    if w[0] < -1e-8 * top:
        raise NormalFormError(stage, f"support input not PSD (eigenvalue {w[0]:.3g})")
    cut = rank_tol * top
    band = (w > cut / 10) & (w < cut * 10)
    if np.any(band):
        raise NormalFormError(stage, "ambiguous support eigenvalue near the "
                              f"rank cutoff {cut:.3g}",
                              detail=float(w[band][0]))
    keep = vecs[:, w > cut]
    return keep @ keep.conj().T


def _stage_consistency(s: POVMStrategy, g: Graph, stage: str, tol: float) -> None:
    report = check_consistency(s, g, tol)
    if not report.ok:
        worst = max(abs(v.value) for v in report.violations)
        raise NormalFormError(stage, f"consistency violated after this stage "
                              f"(worst {worst:.3g}, {len(report.violations)} "
                              "entries)", detail=report.violations[:10])


def normalize_strategy(s: POVMStrategy, g: Graph, tol: float = DEFAULT_TOL,
                       rank_tol: float = DEFAULT_RANK_TOL,
                       check_tol: float = 1e-7) -> NormalFormResult:
    """Transform a winning strategy into normal form.

    Stages, each with post-condition checks that abort with the stage name:
    1. schmidt restriction: rotate both sides to the Schmidt basis, drop zero
       Schmidt coefficients, compress the POVMs to the support.
    2. support replacement: E <- supp(sqrt(rho) conj(F) sqrt(rho)) and
       symmetrically for Bob; makes every element a projector.
    3. conjugation identity: verify E = conj(F) elementwise, then enforce it.
    4. schmidt flattening: replace the state by the maximally entangled one.
    5. rank padding: tensor a maximally entangled c-register and cyclically
       combine colors, making all projectors rank r on local dimension r*c.

    The output satisfies: projective rank-r measurements, maximally entangled
    state of local dimension r*c, Bob = conj(Alice), and zero Hilbert-Schmidt
    inner products per color across edges -- all within tol -- and still wins
    with probability 1.  Inputs that are not winning strategies are rejected
    up front with their violation list.
    """
    validate_strategy(s, check_tol)
    pre = check_consistency(s, g, check_tol)
    if not pre.ok:
        raise NormalFormError("precondition", "input is not a winning strategy "
                              f"({len(pre.violations)} consistency violations)",
                              detail=pre.violations[:10])
    stages: list[tuple[str, POVMStrategy]] = [("input", s)]

    # stage 1: schmidt restriction ------------------------------------------
    stage = "schmidt restriction"
    psi_mat = s.state_matrix()
    u_full, coeffs, vh_full = np.linalg.svd(psi_mat)
    top = float(coeffs[0])
    cut = rank_tol * top
    band = (coeffs > cut / 10) & (coeffs < cut * 10)
    if np.any(band):
        raise NormalFormError(stage, "ambiguous Schmidt coefficient near the "
                              f"rank cutoff {cut:.3g}",
                              detail=float(coeffs[band][0]))
    d = int(np.sum(coeffs > cut))
    if d == 0:
        raise NormalFormError(stage, "state has no Schmidt support")
    lam = coeffs[:d] / np.linalg.norm(coeffs[:d])
    # rotate: A-side by U^dagger, B-side by conj(Vh); the state matrix becomes
    # diag(lambda) on the kept d-dimensional corner
    alice2 = np.einsum("pi,vaij,jq->vapq", u_full.conj().T, s.alice, u_full)[:, :, :d, :d]
    bob2 = np.einsum("pi,vbij,jq->vbpq", vh_full.conj(), s.bob, vh_full.T)[:, :, :d, :d]
    state2 = np.zeros((d, d), dtype=complex)
    np.fill_diagonal(state2, lam)
    s2 = POVMStrategy(s.colors, d, d, state2.ravel(), alice2, bob2)
    validate_strategy(s2, check_tol)
    _stage_consistency(s2, g, stage, check_tol)
    support = np.zeros((s.dim_a, s.dim_a), dtype=complex)
    support[np.arange(d), np.arange(d)] = 1.0
    rho = np.diag(lam.astype(complex) ** 2)
    stages.append((stage, s2))

    # stage 2: support replacement ------------------------------------------
    stage = "support replacement"
    sqrt_rho = np.diag(lam.astype(complex))
    n, c = s2.n_vertices, s2.colors
    alice1 = np.empty_like(s2.alice)
    bob1 = np.empty_like(s2.bob)
    for v in range(n):
        for a in range(c):
            alice1[v, a] = _guarded_support(
                sqrt_rho @ s2.bob[v, a].conj() @ sqrt_rho, rank_tol, stage)
            bob1[v, a] = _guarded_support(
                sqrt_rho @ s2.alice[v, a].conj() @ sqrt_rho, rank_tol, stage)
    for name, ops in (("alice", alice1), ("bob", bob1)):
        cross = np.einsum("vaij,vbjk->vabik", ops, ops)
        cross[:, np.arange(c), np.arange(c)] = 0.0
        worst = float(np.max(np.abs(cross))) if cross.size else 0.0
        if worst > check_tol:
            raise NormalFormError(stage, f"{name} supports are not mutually "
                                  f"orthogonal (worst product {worst:.3g})")
        defect = float(np.max(np.abs(ops.sum(axis=1) - np.eye(d))))
        if defect > check_tol:
            raise NormalFormError(stage, f"{name} supports do not resolve the "
                                  f"identity (defect {defect:.3g})")
    s1 = POVMStrategy(c, d, d, s2.state, alice1, bob1)
    _stage_consistency(s1, g, stage, check_tol)
    stages.append((stage, s1))

    # stage 3: conjugation identity -----------------------------------------
    stage = "conjugation identity"
    defect = float(np.max(np.abs(s1.alice - s1.bob.conj())))
    if defect > check_tol:
        raise NormalFormError(stage, "E != conj(F) after support replacement "
                              f"(defect {defect:.3g})", detail=defect)
    bob_conj = s1.alice.conj()
    s1c = POVMStrategy(c, d, d, s1.state, s1.alice, bob_conj)
    _stage_consistency(s1c, g, stage, check_tol)
    stages.append((stage, s1c))

    # stage 4: schmidt flattening -------------------------------------------
    stage = "schmidt flattening"
    s_flat = POVMStrategy(c, d, d, maximally_entangled(d), s1c.alice, s1c.bob)
    _stage_consistency(s_flat, g, stage, check_tol)
    stages.append((stage, s_flat))

    # stage 5: rank padding --------------------------------------------------
    stage = "rank padding"
    dd = d * c
    alice_pad = np.zeros((n, c, dd, dd), dtype=complex)
    for v in range(n):
        for a in range(c):
            blocks = [s_flat.alice[v, (a + i) % c] for i in range(c)]
            for i, blk in enumerate(blocks):
                alice_pad[v, a, i * d:(i + 1) * d, i * d:(i + 1) * d] = blk
    # careful: the block layout above is (register, support) = A2-major; the
    # paper's E' (x) |i><i| is A1-major.  Reorder to A1-major indexing so the
    # maximally entangled state on C^{dc} matches kron semantics.
    perm = np.arange(dd).reshape(c, d).T.ravel()
    alice_pad = alice_pad[:, :, perm[:, None], perm[None, :]]
    final = POVMStrategy(c, dd, dd, maximally_entangled(dd), alice_pad,
                         alice_pad.conj())
    validate_strategy(final, check_tol)
    _stage_consistency(final, g, stage, check_tol)
    flags = normal_form_properties(final, g, tol)
    failed = [k for k, ok in flags.items() if not ok]
    if failed:
        raise NormalFormError(stage, f"final properties failed: {failed}")
    stages.append((stage, final))

    trace = NormalizationTrace(
        schmidt_coefficients=tuple(float(x) for x in coeffs),
        support_projector=support, rho=rho, stages=tuple(stages))
    return NormalFormResult(normal=final, trace=trace)


def normal_form_properties(s: POVMStrategy, g: Graph,
                           tol: float = DEFAULT_TOL) -> dict[str, bool]:
    """The four normal-form properties as booleans: projective equal-rank
    measurements, maximally entangled state of local dimension rank*colors,
    Bob = conj(Alice), per-color edge orthogonality in the Hilbert-Schmidt
    inner product."""
    c, d = s.colors, s.dim_a
    ops = s.alice
    herm = float(np.max(np.abs(ops - ops.conj().transpose(0, 1, 3, 2))))
    idem = float(np.max(np.abs(np.einsum("vaij,vajk->vaik", ops, ops) - ops)))
    traces = np.einsum("vaii->va", ops).real
    r = float(np.mean(traces))
    projective = (herm <= tol and idem <= tol
                  and float(np.max(np.abs(traces - round(r)))) <= d * tol
                  and round(r) >= 1)
    rank = int(round(r))
    mes = maximally_entangled(d)
    state_ok = (s.dim_a == s.dim_b
                and float(np.max(np.abs(s.state - mes))) <= tol
                and d == rank * c)
    conj_ok = float(np.max(np.abs(s.bob - s.alice.conj()))) <= tol
    e = g.edge_array
    if e.shape[0]:
        hs = np.einsum("eaij,eaij->ea", ops[e[:, 0]].conj(), ops[e[:, 1]])
        edge_ok = float(np.max(np.abs(hs))) <= c * tol
    else:
        edge_ok = True
    return {"projective_equal_rank": projective,
            "maximally_entangled_rc": state_ok,
            "bob_is_conjugate": conj_ok,
            "edge_hs_orthogonality": edge_ok}


# ---------------------------------------------------------------------------
# simulation


def simulate_game(g: Graph, strategy, q: QuestionDistribution | None = None,
                  rounds: int = 10_000, seed: int = 0) -> float:
    """Monte-Carlo win rate under the question distribution; reproducible for
    a fixed seed.  Accepts a ClassicalStrategy or a POVMStrategy."""
    if rounds < 1:
        raise GameError("rounds must be >= 1")
    if q is None:
        q = uniform_questions(g)
    q.validate_support(g)
    rng = np.random.default_rng(seed)
    weights = np.array([float(w) for w in q.weights])
    weights = weights / weights.sum()
    picks = rng.choice(len(q.pairs), size=rounds, p=weights)
    wins = 0
    if isinstance(strategy, ClassicalStrategy):
        for k in picks:
            v, w = q.pairs[k]
            a, b = strategy.alice[v], strategy.bob[w]
            wins += (a == b) if v == w else (a != b)
        return float(wins / rounds)
    if not isinstance(strategy, POVMStrategy):
        raise GameError(f"unsupported strategy type {type(strategy).__name__}")
    validate_strategy(strategy)
    cache: dict[tuple[int, int], np.ndarray] = {}
    c = strategy.colors
    for k in picks:
        v, w = q.pairs[k]
        if (v, w) not in cache:
            p = quantum_outcome_distribution(strategy, v, w)
            p = np.clip(p, 0.0, None).ravel()
            cache[(v, w)] = p / p.sum()
        outcome = int(rng.choice(c * c, p=cache[(v, w)]))
        a, b = divmod(outcome, c)
        wins += (a == b) if v == w else (a != b)
    return float(wins / rounds)
