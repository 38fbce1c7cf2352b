"""Command-line interface: JSON certificates on stdout.

Exit codes: 0 success, 2 input parse error, 3 precondition violation,
4 budget exceeded. Output is deterministic: identical inputs, flags, and
seeds produce byte-identical JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .acyclic import solve_acyclic
from .cover import (
    CoverCertificate,
    best_cover,
    condition_report,
    cover_is_valid,
    cover_via_bipartite,
    cover_via_fes,
    cover_via_fvs,
)
from .cyclebreak import feedback_vertex_set, fes_size_bound, is_acyclic, minimal_fes
from .errors import (
    BudgetExceededError,
    CyclicInputError,
    EmptyHyperedgeError,
    GraphFormatError,
    IsolatedVertexError,
    NotLinearError,
    NotThreeUniformError,
    TricoverError,
)
from .experiment import ExperimentSpec, run_experiment, write_csv
from .hypergraph import delete_hyperedges, delete_vertices, is_k_uniform, is_linear, triangle_hypergraph
from .io import parse_graph, parse_hypergraph

SCHEMA = 1

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_BUDGET = 4

_PRECONDITION_ERRORS = (
    NotLinearError,
    NotThreeUniformError,
    CyclicInputError,
    EmptyHyperedgeError,
    IsolatedVertexError,
    ValueError,
)


def _frac(x: Fraction | None) -> str | None:
    return None if x is None else str(x)


def _read(path: str) -> str:
    try:
        with open(path, "r") as fh:
            return fh.read()
    except OSError as ex:
        raise GraphFormatError(f"cannot read {path}: {ex.strerror}") from ex


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _edge_labels(g, labels, edge_ids) -> list[list[str]]:
    return [[labels[u], labels[v]] for u, v in (g.edge_pair(e) for e in sorted(edge_ids))]


def _cmd_cover(args) -> int:
    g, labels = parse_graph(_read(args.graph_file))
    strategies = {
        "fvs": cover_via_fvs,
        "fes": cover_via_fes,
        "bipartite": cover_via_bipartite,
        "best": best_cover,
    }
    cert: CoverCertificate = strategies[args.strategy](g)
    payload = {
        "schema": SCHEMA,
        "command": "cover",
        "requested_strategy": args.strategy,
        "strategy": cert.strategy,
        "num_vertices": g.n,
        "num_edges": g.num_edges,
        "cover_size": cert.size,
        "cover": _edge_labels(g, labels, cert.cover),
        "claimed_bound": _frac(cert.claimed_bound),
        "bound_holds": cert.size <= cert.claimed_bound,
        "valid": cover_is_valid(g, cert.cover),
    }
    if cert.strategy_sizes is not None:
        payload["strategy_sizes"] = {k: cert.strategy_sizes[k] for k in ("fvs", "fes", "bipartite")}
    if args.explain:
        explain: dict = {
            "breaker_edges": _edge_labels(g, labels, cert.breaker),
        }
        if cert.trace is not None:
            explain["trace"] = [{"rule": rule, "elements": list(elems)} for rule, elems in cert.trace]
            explain["edge_legend"] = {
                str(e): [labels[u], labels[v]] for e, (u, v) in enumerate(g.edges)
            }
        if cert.fes_hyperedges is not None:
            explain["dropped_triangles"] = [
                _edge_labels(g, labels, triple) for triple in _fes_triples(g, cert)
            ]
        if cert.residual_pair is not None:
            explain["residual_transversal"] = _edge_labels(g, labels, cert.residual_pair.transversal)
            explain["residual_matching_size"] = len(cert.residual_pair.matching)
        payload["explain"] = explain
    _emit(payload)
    return EXIT_OK


def _fes_triples(g, cert: CoverCertificate):
    """Dropped hyperedges of the fes strategy as sorted edge-id triples."""
    hg = triangle_hypergraph(g)
    return [sorted(hg.hyperedge(f)) for f in sorted(cert.fes_hyperedges or ())]


def _cmd_analyze(args) -> int:
    g, _labels = parse_graph(_read(args.graph_file))
    report = condition_report(g, use_oracle=args.oracle)
    payload = {
        "schema": SCHEMA,
        "command": "analyze",
        "num_edges": report.num_edges,
        "num_triangles": report.num_triangles,
        "num_irreducible_edges": report.num_irreducible_edges,
        "nu_lower": report.nu_lower,
        "nu_exact": report.nu_exact,
        "nu_upper": report.nu_upper,
        "nu_upper_note": "min cover size; bounds the packing number via packing <= cover",
        "cover_sizes": {k: report.cover_sizes[k] for k in ("fvs", "fes", "bipartite")},
        "ratios": {k: _frac(v) for k, v in report.ratios.items()},
        "conditions": {"i": report.cond_i, "ii": report.cond_ii, "iii": report.cond_iii},
    }
    _emit(payload)
    return EXIT_OK


def _cmd_fvs(args) -> int:
    h, labels = parse_hypergraph(_read(args.hypergraph_file))
    if not is_k_uniform(h, 3):
        raise NotThreeUniformError("not 3-uniform")
    if not is_linear(h):
        raise NotLinearError("not linear")
    result = feedback_vertex_set(h)
    residual = delete_vertices(h, result.removed_vertices)
    bound = h.num_hyperedges // 3
    payload = {
        "schema": SCHEMA,
        "command": "fvs",
        "num_vertices": len(h.vertices),
        "num_hyperedges": h.num_hyperedges,
        "fvs": [labels[v] for v in sorted(result.removed_vertices)],
        "fvs_size": len(result.removed_vertices),
        "bound": bound,
        "bound_holds": len(result.removed_vertices) <= bound,
        "residual_acyclic": is_acyclic(residual),
    }
    _emit(payload)
    return EXIT_OK


def _cmd_fes(args) -> int:
    h, _labels = parse_hypergraph(_read(args.hypergraph_file))
    result = minimal_fes(h)
    residual = delete_hyperedges(h, result.removed_hyperedges)
    minimal = all(
        not is_acyclic(delete_hyperedges(h, result.removed_hyperedges - {f}))
        for f in result.removed_hyperedges
    )
    payload = {
        "schema": SCHEMA,
        "command": "fes",
        "num_vertices": len(h.vertices),
        "num_hyperedges": h.num_hyperedges,
        "fes": sorted(result.removed_hyperedges),
        "fes_size": len(result.removed_hyperedges),
        "residual_acyclic": is_acyclic(residual),
        "minimal": minimal,
    }
    if is_k_uniform(h, 3) and is_linear(h):
        bound = fes_size_bound(h)
        payload["bound"] = bound
        payload["bound_holds"] = len(result.removed_hyperedges) <= bound
    else:
        payload["bound"] = None
        payload["bound_holds"] = None
    _emit(payload)
    return EXIT_OK


def _cmd_solve_acyclic(args) -> int:
    h, labels = parse_hypergraph(_read(args.hypergraph_file))
    pair = solve_acyclic(h)
    payload = {
        "schema": SCHEMA,
        "command": "solve-acyclic",
        "num_vertices": len(h.vertices),
        "num_hyperedges": h.num_hyperedges,
        "transversal": [labels[v] for v in sorted(pair.transversal)],
        "matching": sorted(pair.matching),
        "transversal_size": len(pair.transversal),
        "matching_size": len(pair.matching),
        "sizes_equal": len(pair.transversal) == len(pair.matching),
    }
    _emit(payload)
    return EXIT_OK


def _cmd_random_experiment(args) -> int:
    spec = ExperimentSpec(n=args.n, p=args.p, trials=args.trials, seed=args.seed, estimator=args.estimator)
    result = run_experiment(spec)
    if args.csv:
        write_csv(result, args.csv)
    payload = {
        "schema": SCHEMA,
        "command": "random-experiment",
        "spec": {
            "n": spec.n,
            "p": spec.p,
            "trials": spec.trials,
            "seed": spec.seed,
            "estimator": spec.estimator,
        },
        "records": [
            {
                "trial": r.index,
                "seed": r.seed,
                "edges": r.num_edges,
                "steiner_survivors": r.steiner_survivors,
                "packing_lower": r.packing_lower,
                "cover_size": r.cover_size,
                "packing_over_edges": r.packing_over_edges,
                "cover_over_packing": r.cover_over_packing,
                "packing_ge_quarter_edges": r.packing_ge_quarter_edges,
                "cover_le_twice_packing": r.cover_le_twice_packing,
            }
            for r in result.records
        ],
        "aggregates": {
            "applicable_trials": result.applicable_trials,
            "packing_ge_quarter_count": result.packing_ok_count,
            "cover_le_twice_count": result.cover_ok_count,
            "fraction_packing_ge_quarter": result.fraction_packing_ge_quarter,
            "fraction_cover_le_twice": result.fraction_cover_le_twice,
        },
    }
    _emit(payload)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tricover",
        description="Certified small triangle covers of graphs, and feedback-set tools "
        "for linear 3-uniform hypergraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cover", help="compute a certified triangle cover of a graph")
    p.add_argument("graph_file")
    p.add_argument("--strategy", choices=("fvs", "fes", "bipartite", "best"), default="best")
    p.add_argument("--explain", action="store_true", help="include the cycle-breaking audit trail")
    p.set_defaults(func=_cmd_cover)

    p = sub.add_parser("analyze", help="report triangle/edge ratios and condition statuses")
    p.add_argument("graph_file")
    p.add_argument("--oracle", action="store_true", help="compute the exact packing number (small inputs)")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("fvs", help="feedback vertex set of a linear 3-uniform hypergraph")
    p.add_argument("hypergraph_file")
    p.set_defaults(func=_cmd_fvs)

    p = sub.add_parser("fes", help="minimal feedback edge set of a hypergraph")
    p.add_argument("hypergraph_file")
    p.set_defaults(func=_cmd_fes)

    p = sub.add_parser("solve-acyclic", help="minimum transversal and maximum matching of an acyclic hypergraph")
    p.add_argument("hypergraph_file")
    p.set_defaults(func=_cmd_solve_acyclic)

    p = sub.add_parser("random-experiment", help="packing/cover statistics over random graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--estimator", choices=("greedy", "steiner-seeded"), default="greedy")
    p.add_argument("--csv", metavar="PATH", help="also write per-trial records as CSV")
    p.set_defaults(func=_cmd_random_experiment)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GraphFormatError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceededError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_BUDGET
    except _PRECONDITION_ERRORS as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_PRECONDITION
    except TricoverError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
