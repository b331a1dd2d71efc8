"""File formats: DIMACS graphs, JSON vector sets, strategies, certificates.

Complex scalars are serialized as [re, im] pairs; matrices as row-major flat
lists of such pairs.  NaN and infinities are rejected on input everywhere.
"""
from __future__ import annotations

import json
import math
import warnings
from pathlib import Path

import numpy as np

from . import __version__
from .game import POVMStrategy
from .graphs import Graph, make_graph
from .ks import VectorSet

CERTIFICATE_KINDS = ("coloring", "orthrep", "matrixrep", "qcoloring",
                     "ks-witness", "psd-witness")


class FormatError(ValueError):
    pass


# ---------------------------------------------------------------------------
# DIMACS graphs


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS 'p edge n m' format with 1-indexed 'e u v' lines.
    Malformed lines raise with their line number; an edge count differing
    from the header only warns."""
    n = None
    declared_m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise FormatError(f"line {lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise FormatError(f"line {lineno}: malformed problem line {raw!r}")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer sizes in {raw!r}")
            if n < 0 or declared_m < 0:
                raise FormatError(f"line {lineno}: negative sizes in {raw!r}")
        elif parts[0] == "e":
            if n is None:
                raise FormatError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise FormatError(f"line {lineno}: malformed edge line {raw!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer endpoints in {raw!r}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(f"line {lineno}: endpoint out of range in {raw!r}")
            if u == v:
                raise FormatError(f"line {lineno}: loop edge {raw!r}")
            edges.append((min(u, v) - 1, max(u, v) - 1))
        else:
            raise FormatError(f"line {lineno}: unrecognized line {raw!r}")
    if n is None:
        raise FormatError("missing problem line")
    g = make_graph(n, sorted(set(edges)))
    if g.edge_array.shape[0] != declared_m:
        warnings.warn(f"DIMACS header declares {declared_m} edges but "
                      f"{g.edge_array.shape[0]} distinct edges were read",
                      stacklevel=2)
    return g


def write_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.edge_array.shape[0]}"]
    for u, v in g.edges():
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    return parse_dimacs(Path(path).read_text())


# ---------------------------------------------------------------------------
# complex packing


def _check_real(x, what: str) -> float:
    x = float(x)
    if math.isnan(x) or math.isinf(x):
        raise FormatError(f"{what} contains a non-finite value")
    return x


def _unpack_scalar(pair, what: str) -> complex:
    if not isinstance(pair, (list, tuple)) or len(pair) != 2:
        raise FormatError(f"{what} must be [re, im] pairs")
    return complex(_check_real(pair[0], what), _check_real(pair[1], what))


def _unpack_vector(pairs, what: str) -> np.ndarray:
    return np.array([_unpack_scalar(p, what) for p in pairs], dtype=complex)


def _unpack_matrix(pairs, d: int, what: str) -> np.ndarray:
    flat = _unpack_vector(pairs, what)
    if flat.shape[0] != d * d:
        raise FormatError(f"{what} has {flat.shape[0]} entries, expected {d * d}")
    return flat.reshape(d, d)


def _pack_vector(vec) -> list:
    return [[float(z.real), float(z.imag)] for z in np.asarray(vec).ravel()]


# ---------------------------------------------------------------------------
# vector sets


def vector_set_to_dict(s: VectorSet, tolerance: float | None = None) -> dict:
    out = {"dimension": s.dimension,
           "vectors": [{"id": s.labels[i], "coords": _pack_vector(s.vectors[i])}
                       for i in range(s.size)]}
    if tolerance is not None:
        out["tolerance"] = float(tolerance)
    return out


def vector_set_from_dict(data: dict) -> tuple[VectorSet, float | None]:
    if not isinstance(data, dict):
        raise FormatError("vector set must be a JSON object")
    try:
        d = int(data["dimension"])
        entries = data["vectors"]
    except (KeyError, TypeError, ValueError) as err:
        raise FormatError(f"vector set missing or malformed field: {err}")
    tolerance = None
    if "tolerance" in data and data["tolerance"] is not None:
        tolerance = _check_real(data["tolerance"], "tolerance")
        if tolerance <= 0:
            raise FormatError("tolerance must be positive")
    vectors, labels = [], []
    for k, entry in enumerate(entries):
        if not isinstance(entry, dict) or "coords" not in entry:
            raise FormatError(f"vector {k} must be an object with 'coords'")
        vec = _unpack_vector(entry["coords"], f"vector {k}")
        if vec.shape[0] != d:
            raise FormatError(f"vector {k} has dimension {vec.shape[0]}, "
                              f"expected {d}")
        vectors.append(vec)
        labels.append(str(entry.get("id", f"r{k}")))
    if not vectors:
        raise FormatError("vector set is empty")
    return VectorSet(dimension=d, vectors=np.array(vectors),
                     labels=tuple(labels)), tolerance


def read_vector_set(path) -> tuple[VectorSet, float | None]:
    return vector_set_from_dict(_load_json(path))


def write_vector_set(s: VectorSet, path, tolerance: float | None = None) -> None:
    _dump_json(vector_set_to_dict(s, tolerance), path)


# ---------------------------------------------------------------------------
# strategies


def strategy_to_dict(s: POVMStrategy) -> dict:
    return {
        "colors": s.colors,
        "dim_a": s.dim_a,
        "dim_b": s.dim_b,
        "state": _pack_vector(s.state),
        "alice": [[_pack_vector(s.alice[v, a]) for a in range(s.colors)]
                  for v in range(s.n_vertices)],
        "bob": [[_pack_vector(s.bob[v, a]) for a in range(s.colors)]
                for v in range(s.n_vertices)],
    }


def strategy_from_dict(data: dict) -> POVMStrategy:
    if not isinstance(data, dict):
        raise FormatError("strategy must be a JSON object")
    try:
        c = int(data["colors"])
        da = int(data["dim_a"])
        db = int(data["dim_b"])
        state = _unpack_vector(data["state"], "state")
        alice_raw = data["alice"]
        bob_raw = data["bob"]
    except (KeyError, TypeError, ValueError) as err:
        raise FormatError(f"strategy missing or malformed field: {err}")
    if len(alice_raw) != len(bob_raw):
        raise FormatError("alice and bob cover different vertex counts")
    n = len(alice_raw)
    alice = np.zeros((n, c, da, da), dtype=complex)
    bob = np.zeros((n, c, db, db), dtype=complex)
    for v in range(n):
        if len(alice_raw[v]) != c or len(bob_raw[v]) != c:
            raise FormatError(f"vertex {v} does not list exactly {c} operators")
        for a in range(c):
            alice[v, a] = _unpack_matrix(alice_raw[v][a], da,
                                         f"alice operator ({v},{a})")
            bob[v, a] = _unpack_matrix(bob_raw[v][a], db,
                                       f"bob operator ({v},{a})")
    try:
        return POVMStrategy(c, da, db, state, alice, bob)
    except ValueError as err:
        raise FormatError(str(err))


def read_strategy(path) -> POVMStrategy:
    return strategy_from_dict(_load_json(path))


def write_strategy(s: POVMStrategy, path) -> None:
    _dump_json(strategy_to_dict(s), path)


# ---------------------------------------------------------------------------
# certificates


def make_metadata(tol: float, rank_tol: float, seed: int | None = None) -> dict:
    meta = {"tool": "qcolor", "version": __version__,
            "tol": float(tol), "rank_tol": float(rank_tol)}
    if seed is not None:
        meta["seed"] = int(seed)
    return meta


def certificate_to_dict(kind: str, payload: dict, metadata: dict) -> dict:
    if kind not in CERTIFICATE_KINDS:
        raise FormatError(f"unknown certificate kind {kind!r}")
    return {"kind": kind, "payload": payload, "metadata": metadata}


def certificate_from_dict(data: dict) -> tuple[str, dict, dict]:
    if not isinstance(data, dict):
        raise FormatError("certificate must be a JSON object")
    kind = data.get("kind")
    if kind not in CERTIFICATE_KINDS:
        raise FormatError(f"unknown certificate kind {kind!r}")
    payload = data.get("payload")
    if not isinstance(payload, dict):
        raise FormatError("certificate payload must be an object")
    metadata = data.get("metadata", {})
    if not isinstance(metadata, dict):
        raise FormatError("certificate metadata must be an object")
    return kind, payload, metadata


def read_certificate(path) -> tuple[str, dict, dict]:
    return certificate_from_dict(_load_json(path))


def write_certificate(path, kind: str, payload: dict, metadata: dict) -> None:
    _dump_json(certificate_to_dict(kind, payload, metadata), path)


# ---------------------------------------------------------------------------
# json plumbing


def _load_json(path):
    try:
        text = Path(path).read_text()
    except OSError as err:
        raise FormatError(f"cannot read {path}: {err}")
    try:
        # reject NaN/Infinity literals outright rather than letting them leak
        return json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as err:
        raise FormatError(f"{path}: invalid JSON: {err}")


def _reject_constant(name: str):
    raise FormatError(f"non-finite JSON constant {name!r} is not allowed")


def _dump_json(data, path) -> None:
    Path(path).write_text(json.dumps(data, indent=1, allow_nan=False) + "\n")
