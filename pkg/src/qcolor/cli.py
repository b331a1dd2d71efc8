"""Command-line interface.

Every run prints a JSON report to stdout and a one-line human summary to
stderr.  Exit codes: 0 the queried property holds (or the computation
succeeded), 1 it fails or no witness was found, 2 malformed input, 3 budget
exceeded.  The global --tol/--rank-tol/--seed/--budget flags are recorded in
the report metadata.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__, coloring, datasets, game, graphs, io, ks, reps
from .graphs import GraphError
from .linalg import DEFAULT_RANK_TOL, DEFAULT_TOL

EXIT_YES = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

INPUT_ERRORS = (io.FormatError, ks.KSError, reps.RepsError, game.GameError,
                coloring.ColoringError, GraphError, OSError)


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol", type=float, default=None,
                   help=f"absolute tolerance (default {DEFAULT_TOL})")
    p.add_argument("--rank-tol", type=float, default=None,
                   help=f"relative rank tolerance (default {DEFAULT_RANK_TOL})")
    p.add_argument("--seed", type=int, default=None,
                   help="seed for randomized searches and simulation (default 0)")
    p.add_argument("--budget", type=int, default=None,
                   help=f"search node budget (default {coloring.DEFAULT_BUDGET})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcolor",
        description="chromatic and quantum chromatic bounds, Kochen-Specker "
                    "checks, and coloring-game analysis")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, **kw):
        p = sub.add_parser(name, help=help_, **kw)
        _common_flags(p)
        return p

    p = add("chi", "exact chromatic number with a coloring certificate")
    p.add_argument("graph", help="DIMACS graph file")
    p.add_argument("-o", "--output", help="write the certificate to this file")

    p = add("colorable", "decide c-colorability")
    p.add_argument("graph")
    p.add_argument("-c", "--colors", type=int, required=True)
    p.add_argument("-o", "--output")

    p = add("xi-bounds", "certified bounds on the orthogonal rank")
    p.add_argument("graph")
    p.add_argument("-o", "--output")

    p = add("chiq1", "rank-1 quantum chromatic number via the product "
                     "characterization")
    p.add_argument("graph")
    p.add_argument("--cmax", type=int, required=True,
                   help="largest color count to try")
    p.add_argument("-o", "--output")

    p = add("verify-rep", "verify a coloring / orthrep / matrixrep certificate")
    p.add_argument("graph")
    p.add_argument("certificate")

    p = add("verify-qcoloring", "verify a quantum coloring certificate")
    p.add_argument("graph")
    p.add_argument("certificate")

    p = add("psd-witness", "check a PSD complement-pattern witness and "
                           "extract an orthogonal representation")
    p.add_argument("graph")
    p.add_argument("witness", help="certificate file of kind psd-witness")
    p.add_argument("-o", "--output",
                   help="write the extracted orthrep certificate here")

    p = add("hadamard-coloring", "quantum coloring of the order-N Hadamard graph")
    p.add_argument("-N", "--bits", type=int, required=True)
    p.add_argument("-o", "--output")

    p = add("ks-check", "decide the Kochen-Specker property of a vector set")
    p.add_argument("set", help="vector set JSON file or bundled name "
                               f"({', '.join(datasets.BUNDLED)})")
    p.add_argument("--weak", action="store_true",
                   help="exit code reflects the weak KS property instead")
    p.add_argument("--oracle", action="store_true",
                   help="use the brute-force oracle (<= 25 rays)")

    pg = sub.add_parser("game", help="coloring-game analysis")
    gsub = pg.add_subparsers(dest="game_command", required=True)

    def gadd(name, help_):
        q = gsub.add_parser(name, help=help_)
        _common_flags(q)
        q.add_argument("graph")
        q.add_argument("strategy", help="strategy JSON file")
        return q

    gadd("exact", "exact winning probability of a POVM strategy")
    q = gadd("simulate", "Monte-Carlo estimate of the winning probability")
    q.add_argument("--rounds", type=int, default=10_000)
    q = gadd("normalize", "transform a winning strategy into normal form")
    q.add_argument("-o", "--output", help="write the normal-form strategy here")
    gadd("check", "winning-strategy consistency conditions")

    return parser


# ---------------------------------------------------------------------------
# helpers


def _resolve(args) -> dict:
    return {"tol": DEFAULT_TOL if args.tol is None else args.tol,
            "rank_tol": DEFAULT_RANK_TOL if args.rank_tol is None else args.rank_tol,
            "seed": 0 if args.seed is None else args.seed,
            "budget": coloring.DEFAULT_BUDGET if args.budget is None else args.budget}


def _metadata(opts: dict) -> dict:
    return {"tool": "qcolor", "version": __version__, **opts}


def _emit_certificate(report: dict, args, kind: str, payload: dict,
                      opts: dict) -> None:
    cert = io.certificate_to_dict(kind, payload, io.make_metadata(
        opts["tol"], opts["rank_tol"], opts["seed"]))
    out = getattr(args, "output", None)
    if out:
        io._dump_json(cert, out)
        report["certificate"] = None
        report["written_to"] = out
    else:
        report["certificate"] = cert
        report["written_to"] = None


def _coloring_payload(cert: coloring.ColoringCertificate) -> dict:
    return {"colors": cert.c, "assignment": list(cert.colors)}


def _orthrep_payload(rep: reps.OrthogonalRepresentation) -> dict:
    return {"dimension": rep.dimension,
            "vectors": [io._pack_vector(v) for v in rep.vectors]}


def _matrixrep_payload(rep: reps.MatrixRepresentation) -> dict:
    return {"dimension": rep.dimension,
            "matrices": [io._pack_vector(m) for m in rep.matrices]}


def _qcoloring_payload(qc: reps.QuantumColoring) -> dict:
    out = {"colors": qc.colors, "rank": qc.rank}
    if qc.vectors is not None:
        out["vectors"] = [[io._pack_vector(qc.vectors[v, a])
                           for a in range(qc.colors)]
                          for v in range(qc.n_vertices)]
    else:
        out["projectors"] = [[io._pack_vector(qc.projectors[v, a])
                              for a in range(qc.colors)]
                             for v in range(qc.n_vertices)]
    return out


def _coloring_cert_from_payload(payload: dict) -> coloring.ColoringCertificate:
    try:
        return coloring.ColoringCertificate(
            c=int(payload["colors"]),
            colors=tuple(int(x) for x in payload["assignment"]))
    except (KeyError, TypeError, ValueError) as err:
        raise io.FormatError(f"malformed coloring payload: {err}")


def _orthrep_from_payload(payload: dict) -> reps.OrthogonalRepresentation:
    try:
        d = int(payload["dimension"])
        vecs = np.array([io._unpack_vector(row, f"vector {i}")
                         for i, row in enumerate(payload["vectors"])])
        if vecs.ndim != 2 or vecs.shape[1] != d:
            raise io.FormatError(f"vectors must be rows of length {d}")
        return reps.OrthogonalRepresentation(d, vecs)
    except (KeyError, TypeError, ValueError) as err:
        raise io.FormatError(f"malformed orthrep payload: {err}")


def _matrixrep_from_payload(payload: dict) -> reps.MatrixRepresentation:
    try:
        d = int(payload["dimension"])
        mats = np.array([io._unpack_matrix(m, d, f"matrix {i}")
                         for i, m in enumerate(payload["matrices"])])
        return reps.MatrixRepresentation(d, mats)
    except (KeyError, TypeError, ValueError) as err:
        raise io.FormatError(f"malformed matrixrep payload: {err}")


def _qcoloring_from_payload(payload: dict) -> reps.QuantumColoring:
    try:
        c = int(payload["colors"])
        r = int(payload["rank"])
        if "vectors" in payload:
            vecs = np.array([[io._unpack_vector(payload["vectors"][v][a],
                                                f"vector ({v},{a})")
                              for a in range(c)]
                             for v in range(len(payload["vectors"]))])
            return reps.QuantumColoring(c, r, vectors=vecs)
        d = r * c
        projs = np.array([[io._unpack_matrix(payload["projectors"][v][a], d,
                                             f"projector ({v},{a})")
                           for a in range(c)]
                          for v in range(len(payload["projectors"]))])
        return reps.QuantumColoring(c, r, projectors=projs)
    except (KeyError, TypeError, ValueError, IndexError) as err:
        raise io.FormatError(f"malformed qcoloring payload: {err}")


def _psd_witness_from_payload(payload: dict) -> reps.PSDWitness:
    try:
        r = int(payload["rank"])
        flat = io._unpack_vector(payload["matrix"], "witness matrix")
        n = int(round(np.sqrt(flat.shape[0])))
        if n * n != flat.shape[0]:
            raise io.FormatError("witness matrix is not square")
        return reps.PSDWitness(flat.reshape(n, n), r)
    except (KeyError, TypeError, ValueError) as err:
        raise io.FormatError(f"malformed psd-witness payload: {err}")


# ---------------------------------------------------------------------------
# command handlers: each returns (report, exit_code, summary)


def _cmd_chi(args, opts):
    g = io.read_graph(args.graph)
    res = coloring.chromatic_number(g, budget=opts["budget"])
    report = {"n": g.n, "m": int(g.edge_array.shape[0]), "chi": res.chi,
              "lower": res.lower, "upper": res.upper, "status": res.status,
              "nodes": res.nodes}
    if res.status == coloring.BUDGET_EXCEEDED:
        return report, EXIT_BUDGET, (f"budget exceeded: "
                                     f"{res.lower} <= chi <= {res.upper}")
    _emit_certificate(report, args, "coloring",
                      _coloring_payload(res.certificate), opts)
    return report, EXIT_YES, f"chi = {res.chi}"


def _cmd_colorable(args, opts):
    g = io.read_graph(args.graph)
    res = coloring.is_c_colorable(g, args.colors, budget=opts["budget"])
    report = {"n": g.n, "colors": args.colors, "status": res.status,
              "nodes": res.nodes}
    if res.status == coloring.BUDGET_EXCEEDED:
        return report, EXIT_BUDGET, "budget exceeded: undecided"
    if res.status == coloring.NO:
        report["certificate"] = None
        return report, EXIT_NO, f"not {args.colors}-colorable (exhaustive)"
    _emit_certificate(report, args, "coloring",
                      _coloring_payload(res.certificate), opts)
    return report, EXIT_YES, f"{args.colors}-colorable"


def _cmd_xi_bounds(args, opts):
    g = io.read_graph(args.graph)
    params = reps.SearchParams(seed=opts["seed"], tol=opts["tol"])
    xb = reps.xi_bounds(g, params, budget=opts["budget"])
    report = {"n": g.n, "lower": xb.lower, "upper": xb.upper,
              "clique": list(xb.lower_clique)}
    _emit_certificate(report, args, "orthrep",
                      _orthrep_payload(xb.upper_witness), opts)
    return report, EXIT_YES, f"{xb.lower} <= xi <= {xb.upper}"


def _cmd_chiq1(args, opts):
    g = io.read_graph(args.graph)
    params = reps.SearchParams(seed=opts["seed"], tol=opts["tol"])
    res = reps.chi_q1_upper_via_product(g, args.cmax, params,
                                        budget=opts["budget"])
    report = {"n": g.n, "cmax": args.cmax, "c": res.c,
              "skipped_infeasible": list(res.skipped_infeasible)}
    if res.c is None:
        report["certificate"] = None
        return report, EXIT_NO, (f"no rank-1 witness found for c <= {args.cmax} "
                                 "(not a lower-bound proof)")
    _emit_certificate(report, args, "matrixrep",
                      _matrixrep_payload(res.witness), opts)
    return report, EXIT_YES, f"chi_q1 <= {res.c} (witnessed)"


def _cmd_verify_rep(args, opts):
    g = io.read_graph(args.graph)
    kind, payload, _ = io.read_certificate(args.certificate)
    if kind == "coloring":
        valid = coloring.verify_coloring(g, _coloring_cert_from_payload(payload))
    elif kind == "orthrep":
        valid = reps.verify_orthogonal_representation(
            g, _orthrep_from_payload(payload), opts["tol"])
    elif kind == "matrixrep":
        valid = reps.verify_matrix_representation(
            g, _matrixrep_from_payload(payload), opts["tol"])
    else:
        raise io.FormatError(f"verify-rep cannot handle kind {kind!r}")
    report = {"kind": kind, "valid": bool(valid)}
    return (report, EXIT_YES if valid else EXIT_NO,
            f"{kind} certificate {'verifies' if valid else 'FAILS'}")


def _cmd_verify_qcoloring(args, opts):
    g = io.read_graph(args.graph)
    kind, payload, _ = io.read_certificate(args.certificate)
    if kind != "qcoloring":
        raise io.FormatError(f"expected a qcoloring certificate, got {kind!r}")
    qc = _qcoloring_from_payload(payload)
    valid = reps.verify_quantum_coloring(g, qc, opts["tol"])
    report = {"kind": kind, "colors": qc.colors, "rank": qc.rank,
              "valid": bool(valid)}
    return (report, EXIT_YES if valid else EXIT_NO,
            f"quantum coloring {'verifies' if valid else 'FAILS'}")


def _cmd_psd_witness(args, opts):
    g = io.read_graph(args.graph)
    kind, payload, _ = io.read_certificate(args.witness)
    if kind != "psd-witness":
        raise io.FormatError(f"expected a psd-witness certificate, got {kind!r}")
    w = _psd_witness_from_payload(payload)
    res = reps.psd_witness_check(g, w, opts["tol"], opts["rank_tol"])
    report = {"rank": w.rank, "ok": res.ok, "reason": res.reason}
    if not res.ok:
        return report, EXIT_NO, f"witness rejected: {res.reason}"
    _emit_certificate(report, args, "orthrep",
                      _orthrep_payload(res.representation), opts)
    return report, EXIT_YES, (f"witness accepted: xi <= {w.rank} with a "
                              "verified representation")


def _cmd_hadamard(args, opts):
    qc = reps.hadamard_quantum_coloring(args.bits)
    g = graphs.hadamard_graph(args.bits)
    valid = reps.verify_quantum_coloring(g, qc, opts["tol"])
    report = {"bits": args.bits, "n": g.n, "m": int(g.edge_array.shape[0]),
              "colors": qc.colors, "rank": qc.rank, "verified": bool(valid)}
    if not valid:  # cannot happen for valid N; defensive
        return report, EXIT_NO, "construction failed verification"
    _emit_certificate(report, args, "qcoloring", _qcoloring_payload(qc), opts)
    return report, EXIT_YES, (f"Hadamard graph N={args.bits}: verified "
                              f"{qc.colors}-coloring of rank {qc.rank}")


def _cmd_ks_check(args, opts):
    vs_raw, file_tol = datasets.load_vector_set(args.set)
    tol = opts["tol"] if args.tol is not None else (file_tol or DEFAULT_TOL)
    s = ks.canonicalize(vs_raw.vectors, tol=tol, labels=vs_raw.labels)
    if args.oracle:
        dec = ks.brute_force_ks(s, tol=tol)
    else:
        dec = ks.ks_check(s, tol=tol)
    bases = ks.enumerate_bases(s, tol)
    report = {"rays": s.size, "dimension": s.dimension, "bases": len(bases),
              "merged": len(s.merged_ids), "is_ks": dec.is_ks,
              "is_weak_ks": dec.is_weak_ks, "method": dec.method,
              "property": "weak-ks" if args.weak else "ks",
              "witness": None}
    if dec.witness is not None:
        assert ks.verify_ks_witness(s, dec.witness, weak=not dec.is_weak_ks,
                                    tol=tol)
        report["witness"] = list(dec.witness)
    holds = dec.is_weak_ks if args.weak else dec.is_ks
    name = "weak KS" if args.weak else "KS"
    return (report, EXIT_YES if holds else EXIT_NO,
            f"{args.set}: {'is' if holds else 'is NOT'} a {name} set "
            f"({dec.method})")


def _load_game_inputs(args):
    g = io.read_graph(args.graph)
    s = io.read_strategy(args.strategy)
    if s.n_vertices != g.n:
        raise io.FormatError(f"strategy covers {s.n_vertices} vertices, "
                             f"graph has {g.n}")
    return g, s


def _cmd_game(args, opts):
    if args.game_command == "exact":
        g, s = _load_game_inputs(args)
        wp = game.quantum_win_probability(g, s)
        perfect = abs(wp - 1.0) <= opts["tol"]
        report = {"win_probability": wp, "questions": "uniform",
                  "perfect": perfect}
        return (report, EXIT_YES if perfect else EXIT_NO,
                f"win probability {wp:.12f}")
    if args.game_command == "simulate":
        g, s = _load_game_inputs(args)
        rate = game.simulate_game(g, s, rounds=args.rounds, seed=opts["seed"])
        report = {"rounds": args.rounds, "win_rate": rate,
                  "questions": "uniform"}
        return report, EXIT_YES, f"simulated win rate {rate:.4f} ({args.rounds} rounds)"
    if args.game_command == "check":
        g, s = _load_game_inputs(args)
        rep = game.check_consistency(s, g, opts["tol"])
        report = {"ok": rep.ok,
                  "violations": [{"kind": v.kind, "v": v.v, "w": v.w,
                                  "alpha": v.alpha, "beta": v.beta,
                                  "value": v.value}
                                 for v in rep.violations[:100]]}
        return (report, EXIT_YES if rep.ok else EXIT_NO,
                "consistent" if rep.ok
                else f"{len(rep.violations)} violations (first 100 listed)")
    if args.game_command == "normalize":
        g, s = _load_game_inputs(args)
        try:
            res = game.normalize_strategy(s, g, opts["tol"], opts["rank_tol"])
        except game.NormalFormError as err:
            report = {"normalized": False, "rejected_stage": err.stage,
                      "message": str(err)}
            return report, EXIT_NO, f"rejected at stage: {err.stage}"
        nf = res.normal
        report = {"normalized": True,
                  "stages": [name for name, _ in res.trace.stages],
                  "schmidt_coefficients": list(res.trace.schmidt_coefficients),
                  "colors": nf.colors, "local_dimension": nf.dim_a,
                  "rank": nf.dim_a // nf.colors,
                  "properties": game.normal_form_properties(nf, g, opts["tol"]),
                  "win_probability": game.quantum_win_probability(g, nf)}
        out = getattr(args, "output", None)
        if out:
            io.write_strategy(nf, out)
            report["strategy"] = None
            report["written_to"] = out
        else:
            report["strategy"] = io.strategy_to_dict(nf)
            report["written_to"] = None
        return report, EXIT_YES, (f"normal form: {nf.colors} colors, rank "
                                  f"{report['rank']}, local dimension {nf.dim_a}")
    raise io.FormatError(f"unknown game command {args.game_command!r}")


HANDLERS = {
    "chi": _cmd_chi,
    "colorable": _cmd_colorable,
    "xi-bounds": _cmd_xi_bounds,
    "chiq1": _cmd_chiq1,
    "verify-rep": _cmd_verify_rep,
    "verify-qcoloring": _cmd_verify_qcoloring,
    "psd-witness": _cmd_psd_witness,
    "hadamard-coloring": _cmd_hadamard,
    "ks-check": _cmd_ks_check,
    "game": _cmd_game,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    opts = _resolve(args)
    name = args.command if args.command != "game" else f"game {args.game_command}"
    try:
        report, code, summary = HANDLERS[args.command](args, opts)
    except INPUT_ERRORS as err:
        report = {"command": name, "metadata": _metadata(opts),
                  "error": str(err)}
        print(json.dumps(report, indent=1))
        print(f"qcolor {name}: error: {err}", file=sys.stderr)
        return EXIT_INPUT
    full = {"command": name, "metadata": _metadata(opts), **report}
    print(json.dumps(full, indent=1))
    print(f"qcolor {name}: {summary} [exit {code}]", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
