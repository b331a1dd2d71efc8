"""Kochen-Specker style decision procedures on finite vector sets.

A set of rays is KS when no {0,1} labeling gives every orthonormal basis
(drawn from the set itself) exactly one 1.  It is weak KS when every labeling
that does satisfy the exactly-one-per-basis condition is forced to put 1 on
two orthogonal rays.  Every KS set is weak KS; the converse fails.

Bases are found exhaustively as d-cliques of the orthogonality graph (d
mutually orthogonal unit vectors in C^d always form a basis).  The decision
itself is a small backtracking solver with unit propagation on the
exactly-one constraints, plus an independent brute-force oracle for sets of
at most 25 rays.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graphs import Graph, orthogonality_graph
from .linalg import DEFAULT_TOL

BRUTE_FORCE_LIMIT = 25


class KSError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class VectorSet:
    """Canonicalized rays: unit norm, first nonzero coordinate real positive,
    duplicates up to global phase merged (merged_ids records the originals)."""
    dimension: int
    vectors: np.ndarray  # (k, d) complex
    labels: tuple[str, ...]
    merged_ids: tuple[tuple[int, ...], ...] = field(default=())

    @property
    def size(self) -> int:
        return self.vectors.shape[0]


@dataclass(frozen=True)
class KSDecision:
    is_ks: bool
    is_weak_ks: bool
    witness: tuple[int, ...] | None  # labeling over rays, present iff not KS
    method: str  # backtracking | brute_force


def canonicalize(raw_vectors, tol: float = DEFAULT_TOL, labels=None) -> VectorSet:
    """Normalize, fix global phases, and merge phase-duplicates.

    Raises on zero vectors and ragged/mismatched dimensions.  Order of first
    occurrence is preserved, so ray indices are stable across runs.
    """
    vecs = [np.asarray(v, dtype=complex).ravel() for v in raw_vectors]
    if not vecs:
        raise KSError("empty vector set")
    d = vecs[0].shape[0]
    for i, v in enumerate(vecs):
        if v.shape[0] != d:
            raise KSError(f"vector {i} has dimension {v.shape[0]}, expected {d}")
    if labels is None:
        labels = [f"r{i}" for i in range(len(vecs))]
    elif len(labels) != len(vecs):
        raise KSError("label count does not match vector count")

    canon = []
    for i, v in enumerate(vecs):
        norm = np.linalg.norm(v)
        if norm <= tol:
            raise KSError(f"vector {i} ('{labels[i]}') is zero")
        v = v / norm
        nz = np.flatnonzero(np.abs(v) > tol)[0]
        v = v * (np.conj(v[nz]) / np.abs(v[nz]))
        canon.append(v)

    kept: list[np.ndarray] = []
    kept_labels: list[str] = []
    merged: list[list[int]] = []
    for i, v in enumerate(canon):
        for j, u in enumerate(kept):
            if abs(np.vdot(u, v)) >= 1.0 - tol:
                merged[j].append(i)
                break
        else:
            kept.append(v)
            kept_labels.append(str(labels[i]))
            merged.append([i])
    mat = np.array(kept, dtype=complex)
    mat.flags.writeable = False
    return VectorSet(dimension=d, vectors=mat, labels=tuple(kept_labels),
                     merged_ids=tuple(tuple(g) for g in merged))


def enumerate_bases(s: VectorSet, tol: float = DEFAULT_TOL) -> list[tuple[int, ...]]:
    """All orthonormal bases inside s, i.e. all d-cliques of its orthogonality
    graph, each a sorted index tuple; the list is sorted lexicographically."""
    g = orthogonality_graph(s.vectors, tol=tol)
    d = s.dimension
    adj = [set(int(u) for u in g.neighbors(v)) for v in range(g.n)]
    bases: list[tuple[int, ...]] = []

    def extend(clique: list[int], cand: list[int]):
        if len(clique) == d:
            bases.append(tuple(clique))
            return
        need = d - len(clique)
        for idx, v in enumerate(cand):
            if len(cand) - idx < need:
                return
            extend(clique + [v], [u for u in cand[idx + 1:] if u in adj[v]])

    extend([], list(range(g.n)))
    return bases


def _orthogonal_pairs(s: VectorSet, tol: float) -> list[tuple[int, int]]:
    g = orthogonality_graph(s.vectors, tol=tol)
    return [(int(u), int(v)) for u, v in g.edges()]


def verify_ks_witness(s: VectorSet, witness, weak: bool = False,
                      tol: float = DEFAULT_TOL) -> bool:
    """Mechanical validation: exactly one 1 per enumerated basis, and (for the
    weak condition) no orthogonal pair labeled 1-1."""
    f = list(witness)
    if len(f) != s.size or any(x not in (0, 1) for x in f):
        raise KSError("witness must assign 0/1 to every ray")
    if any(sum(f[r] for r in b) != 1 for b in enumerate_bases(s, tol)):
        return False
    if weak and any(f[u] and f[v] for u, v in _orthogonal_pairs(s, tol)):
        return False
    return True


def _search_labeling(n: int, bases: list[tuple[int, ...]],
                     neighbor_sets: list[set[int]] | None) -> list[int] | None:
    """Exhaustive backtracking for a labeling with exactly one 1 per basis.

    neighbor_sets, when given, additionally forbids two 1s on orthogonal rays.
    Branch order: rays by decreasing basis-membership count (ties by index),
    label 0 tried before 1.  Returns the first labeling found, or None.
    """
    membership: list[list[int]] = [[] for _ in range(n)]
    for bi, b in enumerate(bases):
        for r in b:
            membership[r].append(bi)
    order = sorted(range(n), key=lambda r: (-len(membership[r]), r))
    assign = [-1] * n
    ones = [0] * len(bases)
    zeros = [0] * len(bases)
    trail: list[int] = []

    def set_val(root: int, val: int) -> bool:
        queue = [(root, val)]
        while queue:
            r, v = queue.pop()
            if assign[r] == v:
                continue
            if assign[r] == 1 - v:
                return False
            assign[r] = v
            trail.append(r)
            # counters first, checks second: a conflict return must leave the
            # counters matching the trail exactly or undo() would desync them
            for bi in membership[r]:
                if v == 1:
                    ones[bi] += 1
                else:
                    zeros[bi] += 1
            for bi in membership[r]:
                b = bases[bi]
                if v == 1:
                    if ones[bi] > 1:
                        return False
                    for u in b:
                        if assign[u] == -1:
                            queue.append((u, 0))
                elif ones[bi] == 0:
                    free = [u for u in b if assign[u] == -1]
                    if not free:
                        return False
                    if len(free) == 1:
                        queue.append((free[0], 1))
            if v == 1 and neighbor_sets is not None:
                for u in neighbor_sets[r]:
                    if assign[u] != 0:
                        queue.append((u, 0))
        return True

    def undo(mark: int):
        while len(trail) > mark:
            r = trail.pop()
            v = assign[r]
            assign[r] = -1
            for bi in membership[r]:
                if v == 1:
                    ones[bi] -= 1
                else:
                    zeros[bi] -= 1

    def dfs(pos: int) -> bool:
        while pos < n and assign[order[pos]] != -1:
            pos += 1
        if pos == n:
            return True
        r = order[pos]
        for v in (0, 1):
            mark = len(trail)
            if set_val(r, v) and dfs(pos + 1):
                return True
            undo(mark)
        return False

    return list(assign) if dfs(0) else None


def _decide(s: VectorSet, tol: float, method: str,
            searcher) -> KSDecision:
    bases = enumerate_bases(s, tol)
    n = s.size
    if not bases:
        # Any labeling vacuously satisfies the basis condition, including the
        # all-zero one, which also has no orthogonal 1-1 pair.
        return KSDecision(False, False, (0,) * n, method)
    weak_witness = searcher(bases, independent=True)
    if weak_witness is not None:
        return KSDecision(False, False, tuple(weak_witness), method)
    ks_witness = searcher(bases, independent=False)
    if ks_witness is None:
        return KSDecision(True, True, None, method)
    return KSDecision(False, True, tuple(ks_witness), method)


def ks_check(s: VectorSet, tol: float = DEFAULT_TOL) -> KSDecision:
    """Decide whether s is a KS set (and, along the way, whether it is weak
    KS); exhaustive, so both answers are definitive."""
    pairs = _orthogonal_pairs(s, tol)
    neighbor_sets = [set() for _ in range(s.size)]
    for u, v in pairs:
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)

    def searcher(bases, independent):
        return _search_labeling(s.size, bases,
                                neighbor_sets if independent else None)

    return _decide(s, tol, "backtracking", searcher)


def weak_ks_check(s: VectorSet, tol: float = DEFAULT_TOL) -> KSDecision:
    """Decide whether s is a weak KS set.  Same exhaustive engine as ks_check;
    both flags of the returned decision are settled."""
    return ks_check(s, tol)


def brute_force_ks(s: VectorSet, mode: str = "ks",
                   tol: float = DEFAULT_TOL) -> KSDecision:
    """Oracle by enumerating all 2^k labelings (k <= 25).

    mode is "ks" or "weak"; either way both decision flags are computed, the
    parameter only mirrors the two check entry points it cross-validates.
    """
    if mode not in ("ks", "weak"):
        raise KSError(f"mode must be 'ks' or 'weak', got {mode!r}")
    k = s.size
    if k > BRUTE_FORCE_LIMIT:
        raise KSError(f"brute force limited to {BRUTE_FORCE_LIMIT} rays, got {k}")
    bases = enumerate_bases(s, tol)
    if not bases:
        return KSDecision(False, False, (0,) * k, "brute_force")
    pairs = _orthogonal_pairs(s, tol)

    first_ks: np.ndarray | None = None
    first_weak: np.ndarray | None = None
    chunk = 1 << 20
    for start in range(0, 1 << k, chunk):
        idx = np.arange(start, min(start + chunk, 1 << k), dtype=np.int64)
        bits = ((idx[:, None] >> np.arange(k)) & 1).astype(np.int8)
        ok = np.ones(len(idx), dtype=bool)
        for b in bases:
            ok &= bits[:, list(b)].sum(axis=1) == 1
        if first_ks is None and ok.any():
            first_ks = bits[int(np.argmax(ok))].copy()
        okw = ok.copy()
        for u, v in pairs:
            okw &= ~((bits[:, u] == 1) & (bits[:, v] == 1))
        if first_weak is None and okw.any():
            first_weak = bits[int(np.argmax(okw))].copy()
        if first_weak is not None:
            break  # weak witness settles both flags
    if first_weak is not None:
        return KSDecision(False, False, tuple(int(x) for x in first_weak),
                          "brute_force")
    if first_ks is not None:
        return KSDecision(False, True, tuple(int(x) for x in first_ks),
                          "brute_force")
    return KSDecision(True, True, None, "brute_force")
