"""Command-line driver for seasonal immunization experiments.

    python app.py run --config experiments.cfg --strategy dynamical --out results/dyn.csv
    python app.py threshold --beta 0.1 --strategy uniform --tol 0.01
    python app.py gen-ba --n 1000 --m 10 --seed 1 --out data/networks/ba_1000.txt
"""
import argparse
import json
import logging
import sys

import numpy as np
import pandas as pd

from experiments.config import ExperimentConfig, load_network
from experiments.ensemble import run_ensemble
from experiments.presets import PRESETS, PresetOptions, run_preset
from experiments.report import emit_csv, meanfield_frame, meanfield_path, write_frame
from experiments.threshold import CEILING, estimate_threshold, estimates_frame, sweep_coverage
from immunization.seasons import STRATEGY_IDS
from meanfield.analytic import closed_form_prevalence, uniform_threshold
from meanfield.solver import DEFAULT_HORIZON, DEFAULT_STEP, run_meanfield_seasons
from memory.store import RunStore
from network.generators import generate_ba
from network.graph import write_edge_list
from network.structure import DegreeDistribution, degree_stats
from utils.errors import ImmunizationError, NumericError
from utils.log import configure_logging

logger = logging.getLogger(__name__)

RUN_FIELDS = ("network", "strategy", "beta", "v", "seasons", "replicas", "seed", "out", "workers", "i0")
THRESHOLD_SEASONS = 5


def _say(quiet, message):
    if not quiet:
        print(message)


def _config_from_args(args):
    config = ExperimentConfig.from_file(args.config) if args.config else ExperimentConfig.from_env()
    overrides = {name: getattr(args, name, None) for name in RUN_FIELDS}
    if getattr(args, "profile", False):
        overrides["profile"] = True
    return config.with_overrides(**overrides).validate()


def _float_list(text):
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def cmd_run(args, store):
    config = _config_from_args(args)
    _say(args.quiet, f"🚀 Running {config.strategy} on {config.network} "
                     f"({config.seasons} seasons x {config.replicas} replicas)")
    net = load_network(config.network)
    report = run_ensemble(config, net=net, progress=not args.quiet)
    files = emit_csv(report, config.out)
    mean, stderr = report.final_prevalence()
    summary = {"r_inf_final_mean": mean, "r_inf_final_stderr": stderr}
    _say(args.quiet, f"✅ r_inf(S={config.seasons}) = {mean:.5f} ± {stderr:.5f}")
    if config.i0 is not None:
        series = run_meanfield_seasons(DegreeDistribution.from_network(net), config.beta, config.v,
                                       config.i0, config.seasons)
        files.append(write_frame(meanfield_frame(report, series), meanfield_path(config.out)))
        summary["r_inf_meanfield_final"] = float(series.prevalences[-1])
        _say(args.quiet, f"📈 mean-field r_inf(S={config.seasons}) = {series.prevalences[-1]:.5f} "
                         f"(i0={config.i0:g})")
    for path in files:
        _say(args.quiet, f"✅ Wrote {path}")
    store.record_run({
        "command": "run",
        "config": config.as_dict(),
        "outputs": [str(p) for p in files],
        "summary": summary,
    })


def cmd_threshold(args, store):
    config = _config_from_args(args)
    net = load_network(config.network)
    _say(args.quiet, f"🚀 Bisecting v_c for {config.strategy} at beta={config.beta}")
    seasons = THRESHOLD_SEASONS if args.seasons is None else args.seasons
    estimate = estimate_threshold(net, config.strategy, config.beta, seasons=seasons,
                                  replicas=config.replicas, tolerance=args.tol, seed=config.seed,
                                  workers=config.workers, ceiling=args.ceiling)
    if estimate.saturated:
        _say(args.quiet, f"⚠️ Criterion unmet at v={estimate.lower}: threshold saturated")
    else:
        _say(args.quiet, f"✅ v_c = {estimate.v_c:.4f} (bracket {estimate.lower:.4f} .. {estimate.upper:.4f}, "
                         f"{len(estimate.evaluations)} evaluations)")
    outputs = []
    if args.out:
        outputs.append(str(write_frame(estimates_frame([estimate]), args.out)))
        _say(args.quiet, f"✅ Wrote {args.out}")
    store.record_run({
        "command": "threshold",
        "config": {**config.as_dict(), "seasons": seasons},
        "outputs": outputs,
        "summary": estimate.as_row(),
    })


def cmd_sweep(args, store):
    config = _config_from_args(args)
    net = load_network(config.network)
    frames = [
        sweep_coverage(net, config.strategy, beta, args.v_grid, seasons=config.seasons,
                       replicas=config.replicas, seed=config.seed, workers=config.workers)
        for beta in args.betas
    ]
    frame = pd.concat(frames, ignore_index=True)
    path = write_frame(frame, config.out)
    _say(args.quiet, f"✅ Wrote {len(frame)} sweep points to {path}")
    store.record_run({
        "command": "sweep",
        "config": {**config.as_dict(), "betas": args.betas, "v_grid": args.v_grid},
        "outputs": [str(path)],
        "summary": {"points": len(frame)},
    })


def cmd_gen_ba(args, store):
    net = generate_ba(args.n, args.m, args.seed)
    write_edge_list(net, args.out)
    _say(args.quiet, f"✅ BA graph N={net.node_count}, E={net.edge_count} written to {args.out}")


def cmd_stats(args, store):
    net = load_network(args.network)
    stats = degree_stats(net)
    print(f"📊 {args.network}")
    print(f"   N={stats.node_count}  E={stats.edge_count}  <C>={stats.clustering:.3f}  "
          f"<k>={stats.mean_degree:.2f}  <k^2>={stats.mean_sq_degree:.1f}  k_max={stats.max_degree}")
    for beta in args.betas:
        threshold = uniform_threshold(stats.mean_degree, stats.mean_sq_degree, beta)
        marker = "✅" if threshold.needs_immunization else "⚠️"
        print(f"   {marker} beta={beta:g}: uniform v_c = {threshold.v_c:.3f}")


def cmd_meanfield(args, store):
    i0 = args.i0
    if args.dist:
        dist = DegreeDistribution.from_file(args.dist)
        source = args.dist
        i0 = 1e-4 if i0 is None else i0
    else:
        net = load_network(args.network)
        dist = DegreeDistribution.from_network(net)
        source = args.network
        i0 = 1.0 / net.node_count if i0 is None else i0
    series = run_meanfield_seasons(dist, args.beta, args.v, i0, args.seasons,
                                   h=args.step, horizon=args.horizon, method=args.method)
    try:
        closed = closed_form_prevalence(dist, args.beta, args.v)
    except NumericError as exc:
        closed = None
        logger.warning("Closed-form prevalence unavailable: %s", exc)
    frame = pd.DataFrame({
        "season": np.arange(1, args.seasons + 1),
        "r_inf": series.prevalences,
        "converged": [solution.converged for solution in series.solutions],
        "degenerate_profile": [profile.degenerate for profile in series.profiles],
    })
    print(f"📈 Mean-field on {source}: <k>={dist.mean:.3f}, <k^2>={dist.second_moment:.2f}")
    if closed is None:
        print("   ⚠️ closed-form season-1 r_inf unavailable")
    else:
        print(f"   closed-form season-1 r_inf = {closed:.6f}")
    for row in frame.itertuples(index=False):
        flag = "" if row.converged else "  ⚠️ horizon reached"
        print(f"   S={row.season}: r_inf = {row.r_inf:.6f}{flag}")
    if args.out:
        write_frame(frame, args.out)
        print(f"✅ Wrote {args.out}")


def cmd_preset(args, store):
    options = PresetOptions(network=args.network, replicas=args.replicas, seasons=args.seasons,
                            seed=args.seed, workers=args.workers or ExperimentConfig.from_env().workers,
                            out_dir=args.out_dir, progress=not args.quiet, i0=args.i0)
    _say(args.quiet, f"🚀 Preset {args.name} -> {args.out_dir}")
    result = run_preset(args.name, options)
    for path in result.files:
        _say(args.quiet, f"✅ Wrote {path}")
    _say(args.quiet, json.dumps(result.summary, indent=2, default=str))
    store.record_run({
        "command": f"preset {args.name}",
        "config": {key: value for key, value in vars(options).items() if value is not None},
        "outputs": [str(p) for p in result.files],
        "summary": result.summary,
    })


def cmd_history(args, store):
    if args.clear:
        store.clear_runs()
        print("✅ Run ledger cleared")
        return
    filters = {"strategy": args.strategy} if args.strategy else {}
    runs = store.find_runs(**filters)[: args.limit]
    if not runs:
        print("⚠️ No recorded runs")
        return
    for run in runs:
        config = run.get("config", {})
        print(f"{run['timestamp']}  {run['id'][:8]}  {run['command']:<28} "
              f"{config.get('strategy', '-'):<12} beta={config.get('beta', '-')} v={config.get('v', '-')}")


def _add_experiment_flags(parser, with_out=True):
    parser.add_argument("--config", help="flat key=value config file")
    parser.add_argument("--network", help="edge-list path or ba:n=N,m=M,seed=S")
    parser.add_argument("--strategy", choices=STRATEGY_IDS)
    parser.add_argument("--beta", type=float)
    parser.add_argument("--v", type=float)
    parser.add_argument("--seasons", type=int)
    parser.add_argument("--replicas", type=int)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--workers", type=int)
    if with_out:
        parser.add_argument("--out")


def build_parser():
    parser = argparse.ArgumentParser(prog="immunize", description="Seasonal immunization experiments")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING (default: $IMMUNIZE_LOG_LEVEL or INFO)")
    parser.add_argument("--quiet", action="store_true", help="no status lines or progress bar")
    parser.add_argument("--run-log", help="JSON run ledger (default: $IMMUNIZE_RUN_LOG)")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="ensemble of season histories -> CSV")
    _add_experiment_flags(run)
    run.add_argument("--i0", type=float, help="also integrate the mean-field model from this initial density")
    run.add_argument("--profile", action="store_true", help="record vaccinated-set structure per season")
    run.set_defaults(handler=cmd_run)

    threshold = sub.add_parser("threshold", help="Monte Carlo immunization threshold",
                               description="The criterion is read at season --seasons (default 5).")
    _add_experiment_flags(threshold)
    threshold.add_argument("--tol", type=float, default=0.01)
    threshold.add_argument("--ceiling", type=float, default=CEILING)
    threshold.set_defaults(handler=cmd_threshold)

    sweep = sub.add_parser("sweep", help="r_inf against coverage v")
    _add_experiment_flags(sweep)
    sweep.add_argument("--betas", type=_float_list, default=[0.1])
    sweep.add_argument("--v-grid", type=_float_list, default=[round(0.1 * i, 1) for i in range(10)])
    sweep.set_defaults(handler=cmd_sweep)

    gen = sub.add_parser("gen-ba", help="write a Barabasi-Albert edge list")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--m", type=int, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", required=True)
    gen.set_defaults(handler=cmd_gen_ba)

    stats = sub.add_parser("stats", help="degree moments and analytic uniform threshold")
    stats.add_argument("--network", required=True)
    stats.add_argument("--betas", type=_float_list, default=[0.1, 0.05])
    stats.set_defaults(handler=cmd_stats)

    meanfield = sub.add_parser("meanfield", help="degree-class mean-field seasons")
    source = meanfield.add_mutually_exclusive_group(required=True)
    source.add_argument("--network")
    source.add_argument("--dist", help="two-column 'k P(k)' file")
    meanfield.add_argument("--beta", type=float, required=True)
    meanfield.add_argument("--v", type=float, default=0.1)
    meanfield.add_argument("--seasons", type=int, default=10)
    meanfield.add_argument("--i0", type=float)
    meanfield.add_argument("--step", type=float, default=DEFAULT_STEP)
    meanfield.add_argument("--horizon", type=float, default=DEFAULT_HORIZON)
    meanfield.add_argument("--method", choices=("rk4", "rk45"), default="rk4")
    meanfield.add_argument("--out")
    meanfield.set_defaults(handler=cmd_meanfield)

    preset = sub.add_parser("preset", help="named standard experiment")
    preset.add_argument("name", choices=sorted(PRESETS))
    preset.add_argument("--network")
    preset.add_argument("--replicas", type=int)
    preset.add_argument("--seasons", type=int)
    preset.add_argument("--seed", type=int, default=0)
    preset.add_argument("--workers", type=int)
    preset.add_argument("--i0", type=float, help="mean-field initial infected density (default 1/N)")
    preset.add_argument("--out-dir", default="results")
    preset.set_defaults(handler=cmd_preset)

    history = sub.add_parser("history", help="list recorded runs")
    history.add_argument("--strategy")
    history.add_argument("--limit", type=int, default=20)
    history.add_argument("--clear", action="store_true")
    history.set_defaults(handler=cmd_history)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level or ("WARNING" if args.quiet else None))
    try:
        args.handler(args, RunStore(args.run_log))
    except (ImmunizationError, OSError) as exc:
        print("error: " + json.dumps({"type": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
