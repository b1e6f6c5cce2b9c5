"""Command-line front end: construct, certify, simulate, experiment, bounds.

Exit codes: 0 when the subcommand's success condition holds, 1 when a run
completes but its property fails (simulate without agreement+validity), and
2 for input or usage errors.  Machine-readable artifacts are written before
property-failure exits so a red run still leaves its data behind.

The environment variable ROBUSTNET_MAX_N overrides the default certifier
capability limit of 16 vertices (the hard library limit is 20).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path

import numpy as np

from .construct import ConstructionRecipe, KINDS, TREE_SHAPES, build
from .consensus import ThreatModel, check_validity, simulate, write_trace
from .experiment import (
    DEFAULT_MAX_N,
    ExperimentConfig,
    records_to_csv_text,
    run_experiment,
    summary_to_csv_text,
)
from .graph import load_graph, write_edge_list
from .robustness import check_structural_lemmas, edge_lower_bound, max_robustness


def _max_n() -> int:
    raw = os.environ.get("ROBUSTNET_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"ROBUSTNET_MAX_N must be an integer, got {raw!r}")
    if value < 1:
        raise ValueError(f"ROBUSTNET_MAX_N must be positive, got {value}")
    return value


def _say(args, message: str) -> None:
    if not args.quiet:
        print(message)


def _default_graph_name(recipe: ConstructionRecipe) -> str:
    parts = [recipe.kind]
    if recipe.r is not None:
        parts.append(f"r{recipe.r}")
    if recipe.n is not None:
        parts.append(f"n{recipe.n}")
    if recipe.p is not None:
        parts.append(f"p{recipe.p}")
    if recipe.seed is not None:
        parts.append(f"seed{recipe.seed}")
    if recipe.tree_shape is not None:
        parts.append(recipe.tree_shape)
    return "-".join(parts) + ".edges"


def cmd_construct(args) -> int:
    recipe = ConstructionRecipe(
        kind=args.kind, r=args.r, n=args.n, p=args.p,
        seed=args.seed, tree_shape=args.tree_shape,
    )
    g = build(recipe)
    out = Path(args.output) if args.output else Path(_default_graph_name(recipe))
    write_edge_list(g, out)
    _say(args, f"wrote {out}")
    _say(args, f"n={g.n} edges={g.edge_count}")
    if recipe.kind in ("sparsest-odd", "sparsest-even", "f-elemental"):
        report = edge_lower_bound(g.n, recipe.r)
        _say(args, f"edge lower bound for {recipe.r}-robust on n={g.n}: {report.bound} ({report.kind})")
    return 0


def cmd_certify(args) -> int:
    g = load_graph(args.graph)
    limit = _max_n()
    if g.n > limit:
        raise ValueError(
            f"graph has {g.n} nodes; exact certification is capped at {limit} "
            f"(override with ROBUSTNET_MAX_N)"
        )
    cert = max_robustness(g)
    report_path = Path(args.output) if args.output else Path(f"{args.graph}.cert.json")
    report_path.write_text(json.dumps(cert.to_json_dict(), indent=2) + "\n")
    ceiling = (g.n + 1) // 2
    _say(args, f"r_max={cert.r_max} (ceiling {ceiling} for n={g.n})")
    if g.n == 1:
        _say(args, "single-vertex convention: r_max=1, no witness pair exists")
    if cert.witness is not None:
        s1, s2 = cert.witness
        _say(args, f"witness: s1={sorted(s1)} s2={sorted(s2)}")
    if cert.r_max >= 1:
        bound = edge_lower_bound(g.n, cert.r_max)
        _say(
            args,
            f"edges={g.edge_count} vs lower bound {bound.bound} ({bound.kind}), "
            f"slack {g.edge_count - bound.bound}",
        )
        if g.n in (2 * cert.r_max - 1, 2 * cert.r_max):
            structure = check_structural_lemmas(g, cert.r_max)
            for check in structure.checks:
                status = "pass" if check.passed else "FAIL"
                _say(
                    args,
                    f"structure {check.name}: found {check.found}, "
                    f"required {check.required}: {status}",
                )
    _say(args, f"pairs examined: {cert.pairs_examined}")
    _say(args, f"certificate written to {report_path}")
    return 0


def cmd_simulate(args) -> int:
    g = load_graph(args.graph)
    threat = ThreatModel.from_json_dict(json.loads(Path(args.threat).read_text()))
    threat.validate(g)
    rng = random.Random(args.seed if args.seed is not None else 0)
    initial = np.zeros(g.n)
    for i in range(g.n):
        if i not in threat.malicious:
            initial[i] = rng.uniform(-100.0, 100.0)
    for m in sorted(threat.malicious):
        initial[m] = threat.behaviors[m](0)
    trace = simulate(g, threat, initial, max_steps=args.steps, tol=args.tol)
    csv_path, sidecar_path = write_trace(trace, args.out_prefix)
    verdict = check_validity(trace)
    verdict_path = Path(f"{args.out_prefix}.verdict.json")
    verdict_path.write_text(json.dumps(verdict.to_json_dict(), indent=2) + "\n")
    _say(args, f"trace written to {csv_path} (sidecar {sidecar_path}, verdict {verdict_path})")
    _say(args, f"agreement={verdict.agreement} validity={verdict.validity}")
    _say(args, f"converged_at={trace.converged_at} consensus_value={trace.consensus_value}")
    lo, hi = trace.safety_interval
    _say(args, f"safety interval [{lo}, {hi}], final disagreement {verdict.final_disagreement}")
    return 0 if verdict.agreement and verdict.validity else 1


def _parse_int_list(text: str) -> tuple[int, ...]:
    return tuple(int(part) for part in text.split(",") if part.strip())


def _parse_float_list(text: str) -> tuple[float, ...]:
    return tuple(float(part) for part in text.split(",") if part.strip())


def cmd_experiment(args) -> int:
    if args.config:
        config = ExperimentConfig.from_json_dict(json.loads(Path(args.config).read_text()))
    else:
        master = args.master_seed if args.master_seed is not None else (args.seed or 0)
        config = ExperimentConfig(
            r_values=_parse_int_list(args.r_values),
            samples_per_p=args.samples_per_p,
            p_values=_parse_float_list(args.p_values),
            node_offsets=tuple(part.strip() for part in args.node_offsets.split(",") if part.strip()),
            master_seed=master,
            max_attempts=args.max_attempts,
            output_dir=args.output_dir or ".",
        )
    out_dir = Path(args.output_dir if args.output_dir is not None else config.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    records, summary = run_experiment(config, max_n=_max_n())
    records_path = out_dir / "records.csv"
    summary_path = out_dir / "summary.csv"
    records_path.write_text(records_to_csv_text(records))
    summary_path.write_text(summary_to_csv_text(summary))
    for row in summary:
        min_edges = "-" if row.min_edges_found is None else row.min_edges_found
        gap = "-" if row.gap is None else row.gap
        flag = "  SHORTFALL" if row.shortfall else ""
        _say(
            args,
            f"r={row.r} n={row.n:2d}: min_edges={min_edges} bound={row.bound} gap={gap} "
            f"accepted {row.accepted}/{row.requested}{flag}",
        )
    _say(args, f"records written to {records_path}, summary to {summary_path}")
    return 0


def cmd_bounds(args) -> int:
    if args.r_min < 1 or args.r_max < args.r_min:
        raise ValueError(f"need 1 <= r-min <= r-max, got {args.r_min}..{args.r_max}")
    reports = []
    for r in range(args.r_min, args.r_max + 1):
        reports.append(edge_lower_bound(2 * r - 1, r))
        reports.append(edge_lower_bound(2 * r, r))
    if args.format == "json":
        text = json.dumps(
            [{"r": b.r, "n": b.n, "bound": b.bound, "kind": b.kind} for b in reports],
            indent=2,
        ) + "\n"
    elif args.format == "csv":
        lines = ["r,n,bound,kind"]
        lines.extend(f"{b.r},{b.n},{b.bound},{b.kind}" for b in reports)
        text = "\n".join(lines) + "\n"
    else:
        lines = [f"{'r':>3} {'n':>4} {'bound':>7}  kind"]
        lines.extend(f"{b.r:>3} {b.n:>4} {b.bound:>7}  {b.kind}" for b in reports)
        text = "\n".join(lines) + "\n"
    if args.output:
        Path(args.output).write_text(text)
        _say(args, f"bounds written to {args.output}")
    else:
        print(text, end="")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="random seed where applicable")
    common.add_argument("--output", default=None, help="output file path")
    common.add_argument("--format", choices=("csv", "json"), default=None,
                        help="machine-readable output format")
    common.add_argument("--quiet", action="store_true", help="suppress informational output")

    parser = argparse.ArgumentParser(
        prog="robustnet",
        description="Construct, certify, and exercise maximally robust communication graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_construct = sub.add_parser("construct", parents=[common],
                                 help="build a graph and write its edge list")
    p_construct.add_argument("--kind", required=True, choices=KINDS)
    p_construct.add_argument("--r", type=int, default=None, help="robustness target (extremal kinds)")
    p_construct.add_argument("--n", type=int, default=None, help="vertex count (random kinds)")
    p_construct.add_argument("--p", type=float, default=None, help="edge probability (erdos-renyi)")
    p_construct.add_argument("--tree-shape", choices=TREE_SHAPES, default=None)
    p_construct.set_defaults(func=cmd_construct)

    p_certify = sub.add_parser("certify", parents=[common],
                               help="certify exact maximum robustness of a graph file")
    p_certify.add_argument("graph", help="edge-list or JSON graph file")
    p_certify.set_defaults(func=cmd_certify)

    p_sim = sub.add_parser("simulate", parents=[common],
                           help="run W-MSR consensus under a threat model")
    p_sim.add_argument("graph", help="edge-list or JSON graph file")
    p_sim.add_argument("--threat", required=True, help="threat model JSON file")
    p_sim.add_argument("--steps", type=int, default=500, help="maximum update steps")
    p_sim.add_argument("--tol", type=float, default=1e-6, help="convergence spread tolerance")
    p_sim.add_argument("--out-prefix", default="simulation", help="prefix for trace/verdict files")
    p_sim.set_defaults(func=cmd_simulate)

    p_exp = sub.add_parser("experiment", parents=[common],
                           help="run the bound-tightness random-graph sweep")
    p_exp.add_argument("--config", default=None, help="experiment config JSON file")
    p_exp.add_argument("--r-values", default="1,2,3,4,5,6")
    p_exp.add_argument("--samples-per-p", type=int, default=10)
    p_exp.add_argument("--p-values", default="0.7,0.75,0.8,0.85,0.9")
    p_exp.add_argument("--node-offsets", default="2r-1,2r")
    p_exp.add_argument("--master-seed", type=int, default=None)
    p_exp.add_argument("--max-attempts", type=int, default=5000)
    p_exp.add_argument("--output-dir", default=None)
    p_exp.set_defaults(func=cmd_experiment)

    p_bounds = sub.add_parser("bounds", parents=[common],
                              help="print the edge lower-bound table for a range of r")
    p_bounds.add_argument("--r-min", type=int, default=1)
    p_bounds.add_argument("--r-max", type=int, default=10)
    p_bounds.set_defaults(func=cmd_bounds)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
