"""Command-line interface: classify, compare, tables, validate, cluster,
serve.

Exit codes: 0 success, 1 environment error, 2 input error.  Percentages are
printed to 2 decimals; JSON output carries full double precision.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys

from . import __version__
from .classifier import (
    PARTITION_PRESETS,
    PROFILE_CSV_COLUMNS,
    diversity_table,
    profile_csv_row,
    profile_to_dict,
    skewed_table,
    symmetric_table,
)
from .cluster import DistanceParams, choose_k, distance_matrix, dissimilarity, l1_shape, location_distance, pam, sorensen
from .divergence import MEASURES
from .errors import OrdinalError, PortInUse, UnknownRegion
from .homogeneity import HomogeneityConfig, hi_equal_abundance, value_validity
from .ingest import aggregate, parse_subunit_csv
from .pipeline import build_profiles

log = logging.getLogger("ordinal_peer")

EXIT_OK = 0
EXIT_ENV = 1
EXIT_INPUT = 2


def _fmt_pct(x: float) -> str:
    return f"{100.0 * x:.2f}"


def _load_profiles(args):
    records, issues = parse_subunit_csv(args.input, args.n)
    for line in issues:
        print(line, file=sys.stderr)
    dataset = aggregate(records, args.n)
    cfg = HomogeneityConfig(alpha=args.alpha)
    partition = PARTITION_PRESETS[args.preset]
    return build_profiles(dataset, cfg, partition, workers=args.workers), dataset


def _emit_table(headers, rows, out):
    widths = [max(len(str(h)), *(len(str(r[i])) for r in rows)) if rows else len(str(h)) for i, h in enumerate(headers)]
    out.write("  ".join(str(h).ljust(w) for h, w in zip(headers, widths)).rstrip() + "\n")
    for r in rows:
        out.write("  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")


def cmd_classify(args) -> int:
    profiles, _ = _load_profiles(args)
    if args.format == "json":
        print(json.dumps([profile_to_dict(p) for p in profiles], indent=2, sort_keys=True))
        return EXIT_OK
    rows = [profile_csv_row(p) for p in profiles]
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(PROFILE_CSV_COLUMNS)
        writer.writerows(rows)
    else:
        _emit_table(PROFILE_CSV_COLUMNS, rows, sys.stdout)
    return EXIT_OK


def cmd_compare(args) -> int:
    profiles, _ = _load_profiles(args)
    by_id = {p.region_id: p for p in profiles}
    try:
        a, b = by_id[args.region_a], by_id[args.region_b]
    except KeyError as exc:
        raise UnknownRegion(f"unknown region {exc.args[0]!r}") from exc
    params = DistanceParams(*args.weights)
    terms = {
        "size": sorensen(a.distribution.p * a.population, b.distribution.p * b.population),
        "shape": l1_shape(a.distribution, b.distribution),
        "location": location_distance(a.distribution, b.distribution),
    }
    total = dissimilarity(a, b, params)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "a": profile_to_dict(a),
                    "b": profile_to_dict(b),
                    "distance_terms": terms,
                    "total_distance": total,
                },
                indent=2,
                sort_keys=True,
            )
        )
        return EXIT_OK
    headers = ["metric", a.region_id, b.region_id]
    rows = [
        ["population", a.population, b.population],
        ["ci_pct", _fmt_pct(a.ci), _fmt_pct(b.ci)],
        ["di_pct", _fmt_pct(a.di), _fmt_pct(b.di)],
        ["hi_pct", _fmt_pct(a.hi), _fmt_pct(b.hi)],
        ["s", f"{a.s:.4f}", f"{b.s:.4f}"],
        ["li", a.li, b.li],
        ["group", a.group.label, b.group.label],
        ["class", a.equivalence.label, b.equivalence.label],
    ]
    _emit_table(headers, rows, sys.stdout)
    print()
    for name, value in terms.items():
        print(f"{name}_distance: {value:.4f}")
    print(f"total_distance: {total:.4f}")
    return EXIT_OK


def cmd_tables(args) -> int:
    if args.which in (3, 4) and args.n != 10:
        raise OrdinalError("tables 3 and 4 are defined for n = 10 only")
    out = sys.stdout
    if args.which == 2:
        rows = [[f"[{c.i},{c.k}]", f"{100 * c.ci:.2f}", f"{c.s:.2f}"] for c in diversity_table(args.n)]
        _emit_table(["class", "ci_pct", "s"], rows, out)
    elif args.which in (3, 4):
        table = skewed_table(args.n, args.alpha) if args.which == 3 else symmetric_table(args.n, args.alpha)
        rows = [
            [c.label, c.typology.value, f"{c.lam:.4f}", f"{100 * c.d1:.2f}", f"{100 * c.hi:.2f}"]
            for c in table
        ]
        _emit_table(["class", "typology", "lambda", "d1_pct", "hi_pct"], rows, out)
    else:
        cfg = HomogeneityConfig(alpha=args.alpha)
        th = {s: hi_equal_abundance(args.n, s, cfg) for s in (4, 5, 6)}
        rows = [
            ["A", f"{100 * th[4]:.2f} <= HI <= 100", "acceptably homogeneous"],
            ["B", f"{100 * th[5]:.2f} <= HI < {100 * th[4]:.2f}", "marginal heterogeneity"],
            ["C", f"{100 * th[6]:.2f} <= HI < {100 * th[5]:.2f}", "judgment required"],
            ["D", f"HI < {100 * th[6]:.2f}", "likely heterogeneous"],
        ]
        _emit_table(["group", "interval", "decision"], rows, out)
    return EXIT_OK


def cmd_validate(args) -> int:
    measure = MEASURES.get(args.measure)
    if measure is None:
        raise OrdinalError(f"unknown measure {args.measure!r}; pick from {sorted(MEASURES)}")
    report = value_validity(measure, args.n, args.s)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "measure": report.measure,
                    "hi_two_point": report.hi_two_point,
                    "delta_m_abs": report.delta_m_abs,
                    "loss_hi": report.loss_hi,
                    "loss_superior": report.loss_superior,
                    "c1": report.c1_pass,
                    "value_validity": report.value_validity_pass,
                },
                indent=2,
                sort_keys=True,
            )
        )
        return EXIT_OK
    print(f"measure: {report.measure}")
    print(f"HI(two-point): {report.hi_two_point:.2f}")
    print(f"|delta_m|: {report.delta_m_abs:.2f}")
    print(f"L(D,HI): {report.loss_hi:.1f}")
    print(f"L(D,S): {report.loss_superior:.2f}")
    print(f"C1: {'YES' if report.c1_pass else 'NO'}")
    print(f"value_validity: {'YES' if report.value_validity_pass else 'NO'}")
    return EXIT_OK


def cmd_cluster(args) -> int:
    profiles, _ = _load_profiles(args)
    params = DistanceParams(*args.weights)
    matrix = distance_matrix(profiles, params)
    ks = [k for k in args.k]
    best, scores = choose_k(matrix, ks)
    chosen = pam(matrix, best, args.seed)
    payload = {
        "candidates": {str(k): scores[k] for k in ks},
        "best_k": best,
        "medoids": list(chosen.medoid_ids(matrix)),
        "assignment": {
            rid: matrix.ids[chosen.medoids[chosen.assignment[i]]]
            for i, rid in enumerate(matrix.ids)
        },
        "cost": chosen.cost,
        "avg_silhouette": chosen.avg_silhouette,
    }
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
        return EXIT_OK
    for k in ks:
        print(f"k={k}: avg_silhouette={scores[k]:.4f}")
    print(f"best_k: {best}")
    rows = [[rid, payload["assignment"][rid]] for rid in matrix.ids]
    _emit_table(["region", "medoid"], rows, sys.stdout)
    return EXIT_OK


def cmd_serve(args) -> int:
    import socket

    import uvicorn

    from .service import create_app

    with socket.socket() as probe:
        try:
            probe.bind((args.host, args.port))
        except OSError as exc:
            raise PortInUse(f"port {args.port} unavailable: {exc}") from exc
    app = create_app()
    if args.input:
        records, _ = parse_subunit_csv(args.input, args.n)
        app.state.container.load(aggregate(records, args.n))
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def _add_common(p: argparse.ArgumentParser, needs_input: bool = True):
    if needs_input:
        p.add_argument("--input", required=True, help="subunit CSV path")
    p.add_argument("--n", type=int, default=10, help="category count (default 10)")
    p.add_argument("--alpha", type=float, default=1.0, help="polarization sensitivity")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument("--preset", choices=tuple(PARTITION_PRESETS), default="thesis")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--weights",
        type=_weights,
        default=(1 / 3, 1 / 3, 1 / 3),
        help="size,shape,location term weights (comma separated)",
    )
    p.add_argument("--workers", type=int, default=1, help="profile computation threads")


def _weights(text: str) -> tuple[float, float, float]:
    parts = [float(x) for x in text.split(",")]
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("need exactly three weights")
    return tuple(parts)  # type: ignore[return-value]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ordinal-peer", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="profile every region in a subunit CSV")
    _add_common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("compare", help="side-by-side report for two regions")
    p.add_argument("region_a")
    p.add_argument("region_b")
    _add_common(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("tables", help="render a classification table")
    p.add_argument("which", type=int, choices=(2, 3, 4, 5))
    _add_common(p, needs_input=False)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("validate", help="value-validity report for a measure")
    p.add_argument("measure", help="gjsd | lov | var")
    p.add_argument("n", type=int)
    p.add_argument("s", type=float)
    _add_common(p, needs_input=False)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("cluster", help="peer-group regions with PAM")
    p.add_argument("--k", type=int, nargs="+", required=True, help="candidate cluster counts")
    _add_common(p)
    p.set_defaults(func=cmd_cluster)

    p = sub.add_parser("serve", help="run the JSON service")
    p.add_argument("--port", type=int, default=8720)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--input", help="optional subunit CSV to preload")
    p.add_argument("--n", type=int, default=10)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=os.environ.get("ORDINAL_PEER_LOG", "WARNING").upper())
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PortInUse as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ENV
    except OrdinalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ENV


if __name__ == "__main__":
    sys.exit(main())
