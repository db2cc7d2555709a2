"""Command line interface.

Subcommands: generate, metrics, spectrum, sweep, verify.  All output is
deterministic: identical inputs give byte-identical bytes, floats are
printed with 12 significant digits, and there are no timestamps.

Exit codes: 0 success, 1 verification or comparison failure, 2 usage
error (including invalid parameters).
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import metrics as metrics_mod
from . import oracle, spectra, verification
from .exceptions import InvalidParameterError, NumericFailureError, SizeLimitError
from .graphs import generalized_core_satellite
from .io import format_graph
from .params import GeneralizedParams

__all__ = ["main"]

GENERATE_NODE_LIMIT = 10**6


def _fmt(x: float) -> str:
    return format(x, ".12g")


def _round12(x: float) -> float:
    return float(_fmt(x))


def _parse_satellites(text: str) -> list[tuple[int, int]]:
    """Parse `size:count[,size:count...]`."""
    pairs = []
    for chunk in text.split(","):
        parts = chunk.split(":")
        if len(parts) != 2:
            raise argparse.ArgumentTypeError(
                f"bad satellite spec {chunk!r}; expected size:count"
            )
        try:
            size, count = int(parts[0]), int(parts[1])
        except ValueError:
            raise argparse.ArgumentTypeError(
                f"bad satellite spec {chunk!r}; expected integers"
            ) from None
        pairs.append((size, count))
    return pairs


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(chunk) for chunk in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from None


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="ascii") as handle:
            handle.write(text)


def _params_json(params: GeneralizedParams) -> dict:
    return {
        "core": params.core,
        "satellites": [
            {"size": cls.size, "count": cls.count} for cls in params.classes
        ],
        "n": params.n,
        "m": params.m,
    }


def _report_json(rep: metrics_mod.MetricsReport) -> dict:
    return {
        "triangles": rep.triangles,
        "p1": rep.p1,
        "p2": rep.p2,
        "p3": rep.p3,
        "s13": rep.s13,
        "avg_clustering": _round12(rep.avg_clustering),
        "transitivity": _round12(rep.transitivity),
        "assortativity": None if rep.assortativity is None else _round12(rep.assortativity),
        "assortativity_estrada": None
        if rep.assortativity_estrada is None
        else _round12(rep.assortativity_estrada),
    }


def _reports_agree(
    direct: metrics_mod.MetricsReport, closed: metrics_mod.MetricsReport, tol: float
) -> bool:
    if (direct.n, direct.m, direct.triangles, direct.p1, direct.p2, direct.p3, direct.s13) != (
        closed.n,
        closed.m,
        closed.triangles,
        closed.p1,
        closed.p2,
        closed.p3,
        closed.s13,
    ):
        return False
    for a, b in (
        (direct.avg_clustering, closed.avg_clustering),
        (direct.transitivity, closed.transitivity),
        (direct.assortativity, closed.assortativity),
        (direct.assortativity_estrada, closed.assortativity_estrada),
    ):
        if (a is None) != (b is None):
            return False
        if a is not None and abs(a - b) > tol:
            return False
    return True


def _cmd_generate(args: argparse.Namespace) -> int:
    params = GeneralizedParams(args.core, args.satellites)
    if params.n > GENERATE_NODE_LIMIT:
        raise InvalidParameterError(
            f"n={params.n} exceeds the generation limit {GENERATE_NODE_LIMIT}"
        )
    g = generalized_core_satellite(params)
    _emit(format_graph(g, args.format), args.out)
    summary = f"n={g.n} m={g.m}\n"
    if args.out is None:
        sys.stderr.write(summary)
    else:
        sys.stdout.write(summary)
    return 0


def _cmd_metrics(args: argparse.Namespace) -> int:
    params = GeneralizedParams(args.core, args.satellites)
    if params.n > GENERATE_NODE_LIMIT:
        raise InvalidParameterError(
            f"n={params.n} exceeds the generation limit {GENERATE_NODE_LIMIT}"
        )
    g = generalized_core_satellite(params)
    direct = metrics_mod.compute_metrics(g)
    payload = _params_json(params)
    payload["direct"] = _report_json(direct)
    if params.class_count == 1:
        closed = metrics_mod.analytic_metrics(params.to_core_satellite())
        payload["analytic"] = _report_json(closed)
        agreement = _reports_agree(direct, closed, args.tol)
    else:
        payload["analytic"] = None
        agreement = True
    payload["agreement"] = agreement
    payload["tolerance"] = args.tol
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    if not agreement:
        sys.stderr.write("metrics: analytic and direct values disagree\n")
        return 1
    return 0


def _spectrum_block(
    analytic: spectra.SpectrumResult | None,
    numeric,
    tol: float,
) -> tuple[dict, bool]:
    block: dict = {"analytic": None, "numeric": None, "max_abs_deviation": None}
    ok = True
    if analytic is not None:
        block["analytic"] = [
            [_round12(value), mult] for value, mult in analytic.eigenpairs
        ]
    if numeric is not None:
        block["numeric"] = [_round12(float(v)) for v in numeric]
    if analytic is not None and numeric is not None:
        deviation = spectra.max_spectrum_deviation(analytic, numeric)
        block["max_abs_deviation"] = _round12(deviation)
        ok = deviation <= tol
    return block, ok


def _cmd_spectrum(args: argparse.Namespace) -> int:
    params = GeneralizedParams(args.core, args.satellites)
    payload = _params_json(params)
    payload["method"] = args.method
    payload["tolerance"] = args.tol

    adjacency_analytic = laplacian_analytic = None
    adjacency_numeric = laplacian_numeric = None
    if args.method in ("analytic", "both"):
        adjacency_analytic = spectra.adjacency_spectrum_gcs(params)
        laplacian_analytic = spectra.laplacian_spectrum_gcs(params)
    if args.method in ("numeric", "both"):
        g = generalized_core_satellite(params)
        adjacency_numeric = oracle.eigenvalues_symmetric(
            oracle.adjacency_matrix(g, args.dense_limit)
        )
        laplacian_numeric = oracle.eigenvalues_symmetric(
            oracle.laplacian_matrix(g, args.dense_limit)
        )

    adjacency_block, adjacency_ok = _spectrum_block(
        adjacency_analytic, adjacency_numeric, args.tol
    )
    laplacian_block, laplacian_ok = _spectrum_block(
        laplacian_analytic, laplacian_numeric, args.tol
    )
    payload["adjacency"] = adjacency_block
    payload["laplacian"] = laplacian_block

    indices = spectra.spectral_indices(params)
    payload["spectral_radius"] = _round12(indices.spectral_radius)
    if params.satellite_total >= 2:
        lower, upper = spectra.spectral_radius_bounds(params)
        payload["bounds"] = {"lower": lower, "upper": upper}
    else:
        payload["bounds"] = None
    payload["infection_threshold"] = _round12(indices.infection_threshold)
    payload["sync_index"] = _round12(indices.sync_index)
    payload["algebraic_connectivity"] = _round12(indices.algebraic_connectivity)
    payload["degenerate"] = params.satellite_total == 1

    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    if not (adjacency_ok and laplacian_ok):
        sys.stderr.write("spectrum: analytic and numeric spectra disagree\n")
        return 1
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    lines = ["c,p,n,m,avg_clustering,transitivity,assortativity"]
    for core in args.cores:
        for p in range(1, args.pmax + 1):
            params = GeneralizedParams(core, [(size, p) for size in args.sizes])
            g = generalized_core_satellite(params)
            rep = metrics_mod.compute_metrics(g)
            r = "" if rep.assortativity is None else _fmt(rep.assortativity)
            lines.append(
                f"{core},{p},{rep.n},{rep.m},"
                f"{_fmt(rep.avg_clustering)},{_fmt(rep.transitivity)},{r}"
            )
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    results = verification.run_checks(
        tol=args.tol,
        dense_limit=args.dense_limit,
        max_enum_n=args.max_n,
        triangle_sign_fault=args.fault_triangle_sign,
    )
    width = max(len(r.name) for r in results)
    lines = []
    for r in results:
        status = "pass" if r.passed else "FAIL"
        detail = f"  {r.detail}" if r.detail else ""
        lines.append(f"{r.name:<{width}}  {status}{detail}")
    ok = all(r.passed for r in results)
    lines.append(f"{'overall':<{width}}  {'pass' if ok else 'FAIL'}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--tol",
        type=float,
        default=1e-9,
        help="comparison tolerance (default 1e-9)",
    )
    common.add_argument(
        "--dense-limit",
        type=int,
        default=oracle.DEFAULT_DENSE_LIMIT,
        help=f"max n for dense numeric work (default {oracle.DEFAULT_DENSE_LIMIT})",
    )
    common.add_argument("-o", "--out", default=None, help="output file (default stdout)")

    family = argparse.ArgumentParser(add_help=False)
    family.add_argument("--core", type=int, required=True, help="core clique size")
    family.add_argument(
        "--satellites",
        type=_parse_satellites,
        required=True,
        metavar="SIZE:COUNT[,SIZE:COUNT...]",
        help="satellite classes",
    )

    parser = argparse.ArgumentParser(
        prog="coresat",
        description="Core-satellite graphs: generation, metrics, spectra, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser(
        "generate", parents=[common, family], help="write a graph to a file or stdout"
    )
    p_gen.add_argument(
        "--format", choices=sorted(format_names()), default="edgelist"
    )
    p_gen.set_defaults(func=_cmd_generate)

    p_met = sub.add_parser(
        "metrics", parents=[common, family], help="metrics as JSON, direct and analytic"
    )
    p_met.set_defaults(func=_cmd_metrics)

    p_spec = sub.add_parser(
        "spectrum", parents=[common, family], help="adjacency/Laplacian spectra as JSON"
    )
    p_spec.add_argument(
        "--method", choices=["analytic", "numeric", "both"], default="both"
    )
    p_spec.set_defaults(func=_cmd_spectrum)

    p_sweep = sub.add_parser(
        "sweep", parents=[common], help="CSV of metrics over a replication sweep"
    )
    p_sweep.add_argument("--cores", type=_parse_int_list, default=[3, 5, 10])
    p_sweep.add_argument("--sizes", type=_parse_int_list, default=[3, 5, 7])
    p_sweep.add_argument("--pmax", type=int, default=100)
    p_sweep.set_defaults(func=_cmd_sweep)

    p_ver = sub.add_parser(
        "verify", parents=[common], help="run the self-verification battery"
    )
    p_ver.add_argument(
        "--max-n",
        type=int,
        default=14,
        help="largest n for exhaustive-enumeration checks (default 14)",
    )
    p_ver.add_argument(
        "--fault-triangle-sign",
        action="store_true",
        help="debug: inject a sign fault into the closed-form triangle count "
        "(negative control; verification must fail)",
    )
    p_ver.set_defaults(func=_cmd_verify)

    return parser


def format_names() -> list[str]:
    from .io import GRAPH_FORMATS

    return list(GRAPH_FORMATS)


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidParameterError, SizeLimitError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except NumericFailureError as exc:
        sys.stderr.write(f"numeric failure: {exc}\n")
        return 1
    except OSError as exc:
        sys.stderr.write(f"error: cannot write output: {exc}\n")
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
