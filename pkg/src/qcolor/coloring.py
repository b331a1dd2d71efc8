"""Exact classical graph parameters: c-colorability, chromatic number, clique
number, plus certificate verification.

The decision solver is DSATUR-style branch and bound: a greedy clique is
pre-colored for symmetry breaking, the next vertex is always one of maximum
saturation (ties broken toward the lowest id for deterministic runs), and at
most one fresh color may be introduced per branch.  "no" answers are
exhaustive.  Budgets count node expansions, not wall time, so runs are
reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph

DEFAULT_BUDGET = 5_000_000

YES = "yes"
NO = "no"
BUDGET_EXCEEDED = "budget_exceeded"


class ColoringError(ValueError):
    pass


class _BudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class ColoringCertificate:
    """A total color assignment; properness is checked by verify_coloring."""
    c: int
    colors: tuple[int, ...]


@dataclass(frozen=True)
class ColoringResult:
    status: str  # yes | no | budget_exceeded
    certificate: ColoringCertificate | None
    nodes: int


@dataclass(frozen=True)
class CliqueResult:
    omega: int
    clique: tuple[int, ...]
    status: str  # exact | budget_exceeded (omega is then only a lower bound)
    nodes: int


@dataclass(frozen=True)
class ChromaticResult:
    chi: int | None
    certificate: ColoringCertificate | None
    lower: int
    upper: int
    status: str  # exact | budget_exceeded
    nodes: int
    clique: tuple[int, ...]


def verify_coloring(g: Graph, cert: ColoringCertificate) -> bool:
    if len(cert.colors) != g.n:
        raise ColoringError(
            f"certificate colors {len(cert.colors)} vertices, graph has {g.n}")
    for v, col in enumerate(cert.colors):
        if not 0 <= col < cert.c:
            raise ColoringError(f"vertex {v} has out-of-range color {col} (c={cert.c})")
    return all(cert.colors[u] != cert.colors[v] for u, v in g.edges())


def greedy_clique(g: Graph) -> list[int]:
    """Highest-degree-first greedy clique; deterministic, used for seeding."""
    if g.n == 0:
        return []
    cand = set(range(g.n))
    clique: list[int] = []
    while cand:
        v = max(cand, key=lambda x: (g.degree(x), -x))
        clique.append(v)
        cand &= set(int(u) for u in g.neighbors(v))
    return sorted(clique)


def clique_number(g: Graph, budget: int = DEFAULT_BUDGET) -> CliqueResult:
    """Exact maximum clique by branch and bound with a greedy-coloring bound."""
    n = g.n
    if n == 0:
        return CliqueResult(0, (), "exact", 0)
    adj = [0] * n
    for u, v in g.edges():
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    seed = greedy_clique(g)
    state = {"best": len(seed), "best_clique": list(seed), "nodes": 0}
    current: list[int] = []

    def color_sort(pmask: int):
        # vertices of pmask in nondecreasing greedy-color order
        order: list[int] = []
        bounds: list[int] = []
        k = 0
        rem = pmask
        while rem:
            k += 1
            cand = rem
            while cand:
                b = cand & -cand
                v = b.bit_length() - 1
                cand &= ~(adj[v] | b)
                rem &= ~b
                order.append(v)
                bounds.append(k)
        return order, bounds

    def expand(pmask: int):
        order, bounds = color_sort(pmask)
        for i in range(len(order) - 1, -1, -1):
            if len(current) + bounds[i] <= state["best"]:
                return
            v = order[i]
            state["nodes"] += 1
            if state["nodes"] > budget:
                raise _BudgetExceeded
            current.append(v)
            sub = pmask & adj[v]
            if sub:
                expand(sub)
            elif len(current) > state["best"]:
                state["best"] = len(current)
                state["best_clique"] = current.copy()
            current.pop()
            pmask &= ~(1 << v)

    try:
        expand((1 << n) - 1)
        status = "exact"
    except _BudgetExceeded:
        status = BUDGET_EXCEEDED
    return CliqueResult(state["best"], tuple(sorted(state["best_clique"])),
                        status, state["nodes"])


def greedy_coloring(g: Graph) -> ColoringCertificate:
    """DSATUR greedy (no backtracking); an upper-bound certificate."""
    n = g.n
    colors = [-1] * n
    neigh_colors: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = max((u for u in range(n) if colors[u] < 0),
                key=lambda u: (len(neigh_colors[u]), g.degree(u), -u))
        col = 0
        while col in neigh_colors[v]:
            col += 1
        colors[v] = col
        for w in g.neighbors(v):
            neigh_colors[w].add(col)
    c = max(colors) + 1 if n else 0
    return ColoringCertificate(c=max(c, 1) if n else 0, colors=tuple(colors))


def is_c_colorable(g: Graph, c: int, budget: int = DEFAULT_BUDGET) -> ColoringResult:
    """Decide whether g admits a proper c-coloring.

    "yes" carries a certificate that passes verify_coloring; "no" is the
    result of an exhaustive search (up to color-class symmetry, which the
    clique pre-coloring and fresh-color rule break soundly).
    """
    if c < 1:
        raise ColoringError(f"color count must be >= 1, got {c}")
    n = g.n
    if n == 0:
        return ColoringResult(YES, ColoringCertificate(c, ()), 0)
    clique = greedy_clique(g)
    if len(clique) > c:
        return ColoringResult(NO, None, 0)

    colors = [-1] * n
    neigh_colors: list[set[int]] = [set() for _ in range(n)]
    for i, v in enumerate(clique):
        colors[v] = i
        for w in g.neighbors(v):
            neigh_colors[w].add(i)
    uncolored = set(range(n)) - set(clique)
    state = {"nodes": 0}

    def backtrack(k_used: int) -> bool:
        if not uncolored:
            return True
        v = max(uncolored, key=lambda u: (len(neigh_colors[u]), -u))
        state["nodes"] += 1
        if state["nodes"] > budget:
            raise _BudgetExceeded
        uncolored.discard(v)
        for col in range(min(k_used + 1, c)):
            if col in neigh_colors[v]:
                continue
            colors[v] = col
            touched = []
            for w in g.neighbors(v):
                if colors[w] < 0 and col not in neigh_colors[w]:
                    neigh_colors[w].add(col)
                    touched.append(w)
            if backtrack(max(k_used, col + 1)):
                return True
            for w in touched:
                neigh_colors[w].discard(col)
            colors[v] = -1
        uncolored.add(v)
        return False

    try:
        sat = backtrack(max(len(clique), 1) if clique else 0)
    except _BudgetExceeded:
        return ColoringResult(BUDGET_EXCEEDED, None, state["nodes"])
    if not sat:
        return ColoringResult(NO, None, state["nodes"])
    cert = ColoringCertificate(c, tuple(colors))
    assert verify_coloring(g, cert)
    return ColoringResult(YES, cert, state["nodes"])


def chromatic_number(g: Graph, budget: int = DEFAULT_BUDGET) -> ChromaticResult:
    """Exact chromatic number with a proper coloring certificate.

    On success every value below chi has been refuted exhaustively (the value
    immediately below is re-refuted explicitly, which is instant thanks to the
    clique seed).  If the budget runs out the result carries the best-known
    bounds instead.
    """
    if g.n == 0:
        return ChromaticResult(0, ColoringCertificate(0, ()), 0, 0, "exact", 0, ())
    clique = greedy_clique(g)
    lower = max(len(clique), 1)
    upper_cert = greedy_coloring(g)
    upper = upper_cert.c
    nodes = 0
    best_cert = upper_cert
    for c in range(lower, upper):
        res = is_c_colorable(g, c, budget)
        nodes += res.nodes
        if res.status == YES:
            assert res.certificate is not None
            return _finish(g, c, res.certificate, lower, nodes, clique, budget)
        if res.status == BUDGET_EXCEEDED:
            return ChromaticResult(None, best_cert, c, upper, BUDGET_EXCEEDED,
                                   nodes, tuple(clique))
    return _finish(g, upper, best_cert, lower, nodes, clique, budget)


def _finish(g: Graph, chi: int, cert: ColoringCertificate, lower: int,
            nodes: int, clique: list[int], budget: int) -> ChromaticResult:
    if chi > 1:
        refute = is_c_colorable(g, chi - 1, budget)
        nodes += refute.nodes
        if refute.status == BUDGET_EXCEEDED:
            return ChromaticResult(None, cert, lower, chi, BUDGET_EXCEEDED,
                                   nodes, tuple(clique))
        assert refute.status == NO
    return ChromaticResult(chi, cert, chi, chi, "exact", nodes, tuple(clique))
