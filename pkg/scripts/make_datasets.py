#!/usr/bin/env python3
"""Regenerate the bundled ray sets from their arithmetic definitions.

Writes JSON vector-set files into src/qcolor/data/.  Run from anywhere; the
output location is resolved relative to this script.  See data/README.md for
the provenance of each construction.
"""
from __future__ import annotations

import sys
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from qcolor.io import write_vector_set  # noqa: E402
from qcolor.ks import canonicalize  # noqa: E402

OUT = ROOT / "src" / "qcolor" / "data"

# 18 rays in R^4 arranged in 9 bases, every ray appearing in exactly two
# (Cabello, Estebaranz, Garcia-Alcaine 1996).
CABELLO_BASES = [
    [(0, 0, 0, 1), (0, 0, 1, 0), (1, 1, 0, 0), (1, -1, 0, 0)],
    [(0, 0, 0, 1), (0, 1, 0, 0), (1, 0, 1, 0), (1, 0, -1, 0)],
    [(1, -1, 1, -1), (1, -1, -1, 1), (1, 1, 0, 0), (0, 0, 1, 1)],
    [(1, -1, 1, -1), (1, 1, 1, 1), (1, 0, -1, 0), (0, 1, 0, -1)],
    [(0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 1), (1, 0, 0, -1)],
    [(1, -1, -1, 1), (1, 1, 1, 1), (1, 0, 0, -1), (0, 1, -1, 0)],
    [(1, 1, -1, 1), (1, 1, 1, -1), (1, -1, 0, 0), (0, 0, 1, 1)],
    [(1, 1, -1, 1), (-1, 1, 1, 1), (1, 0, 1, 0), (0, 1, 0, -1)],
    [(1, 1, 1, -1), (-1, 1, 1, 1), (1, 0, 0, 1), (0, 1, -1, 0)],
]

# 13 rays in R^3 (Yu, Oh 2012): not KS, not even weak KS, yet their
# orthogonality graph needs four colors.
YU_OH = [
    (0, 0, 1), (0, 1, 0), (1, 0, 0),
    (0, 1, -1), (1, 0, -1), (1, -1, 0),
    (0, 1, 1), (1, 0, 1), (1, 1, 0),
    (-1, 1, 1), (1, -1, 1), (1, 1, -1), (1, 1, 1),
]


def coord_token(x: float) -> str:
    table = {0.0: "0", 1.0: "1", -1.0: "-1",
             np.sqrt(2.0): "r2", -np.sqrt(2.0): "-r2"}
    for val, tok in table.items():
        if abs(x - val) < 1e-12:
            return tok
    return f"{x:.6g}"


def label(vec) -> str:
    return "(" + ",".join(coord_token(float(x)) for x in vec) + ")"


def peres_rays() -> list[tuple]:
    """33 rays in R^3 (Peres 1991): all coordinate permutations and sign
    patterns of (1,0,0), (1,1,0), (sqrt2,1,0), (sqrt2,1,1), deduplicated up
    to overall sign."""
    from itertools import permutations, product

    s = np.sqrt(2.0)
    seeds = [(1.0, 0.0, 0.0), (1.0, 1.0, 0.0), (s, 1.0, 0.0), (s, 1.0, 1.0)]
    seen = {}
    for seed in seeds:
        for perm in permutations(range(3)):
            base = tuple(seed[p] for p in perm)
            for signs in product((1.0, -1.0), repeat=3):
                v = np.array([b * sg for b, sg in zip(base, signs)])
                v = v / np.linalg.norm(v)
                nz = np.flatnonzero(np.abs(v) > 1e-12)[0]
                if v[nz] < 0:
                    v = -v
                key = tuple(np.round(v, 12))
                if key not in seen:
                    seen[key] = tuple(float(x) for x in v * np.linalg.norm(
                        np.array(base)))
    # stable order: by seed shape then lexicographic on the rounded ray
    return [seen[k] for k in sorted(seen)]


def build(name: str, raw, labels) -> None:
    vs = canonicalize(raw, labels=labels)
    write_vector_set(vs, OUT / f"{name}.json", tolerance=1e-9)
    print(f"{name}: {vs.size} rays in dimension {vs.dimension}")


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)

    cab_raw, cab_labels, seen = [], [], set()
    for basis in CABELLO_BASES:
        for vec in basis:
            if vec not in seen:
                seen.add(vec)
                cab_raw.append(np.array(vec, dtype=float))
                cab_labels.append(label(vec))
    build("cabello-18", cab_raw, cab_labels)

    per = peres_rays()
    build("peres-33", [np.array(v) for v in per], [label(v) for v in per])

    build("yu-oh-13", [np.array(v, dtype=float) for v in YU_OH],
          [label(v) for v in YU_OH])


if __name__ == "__main__":
    main()
