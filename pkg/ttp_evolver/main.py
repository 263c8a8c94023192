"""
TTP Evolver Main Application - command-line entry point
"""
import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from joblib import Parallel, delayed

from shared.config.constants import ENV_OUTPUT_DIR, PORTFOLIO, FitnessKind, SolverId
from shared.models.run_config import BatchConfig, EvolveConfig, GenerationConfig
from shared.models.ttp_models import SolverBudget
from shared.utils.errors import TTPError
from shared.utils.logger import TTPLogger, get_logger
from ttp_engine.features.feature_extractor import compute_features
from ttp_engine.solvers.portfolio import solve
from ttp_evolver.evolve.batch import build_job_matrix, batch_evolve
from ttp_evolver.evolve.bimodality import bimodality_report
from ttp_evolver.evolve.evaluator import evaluate_profile
from ttp_evolver.evolve.evolver import evolve
from ttp_evolver.instance_space.generator import random_instance
from ttp_evolver.io.run_records import append_record, merge_record_files, record_from_result
from ttp_evolver.io.tables import features_frame, item_frame, node_frame, profile_frame, write_csv
from ttp_evolver.io.ttp_format import read_instance, write_instance

logger = get_logger(__name__, "ttp_evolver.log")

FITNESS_CHOICES = [kind.value for kind in FitnessKind]


def output_dir(args: argparse.Namespace) -> Path:
    """--out, else $TTP_EVOLVER_OUTPUT_DIR, else ./output"""
    if args.out:
        return Path(args.out)
    return Path(os.getenv(ENV_OUTPUT_DIR, "output"))


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        output = Path(path)
        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text(text)
    else:
        sys.stdout.write(text)


def _generation_from_args(args: argparse.Namespace, base: GenerationConfig) -> GenerationConfig:
    updates: Dict[str, Any] = {}
    if args.n is not None:
        updates["n"] = args.n
    if args.ipn is not None:
        updates["ipn"] = args.ipn
    if getattr(args, "integer_items", False):
        updates["integer_items"] = True
    return GenerationConfig.model_validate({**base.model_dump(), **updates})


def cmd_generate(args: argparse.Namespace) -> int:
    base = GenerationConfig.load(args.config) if args.config else GenerationConfig()
    config = _generation_from_args(args, base)
    if args.seed is not None:
        config = config.model_copy(update={"seed": args.seed})

    instance = random_instance(config)
    path = Path(args.out) if args.out else output_dir(args) / f"{instance.name}.ttp"
    write_instance(instance, path, integer_coords=args.integer_coords)
    logger.info(f"Wrote {instance.name} to {path}")
    print(path)
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    instance = read_instance(args.instance)
    budget = SolverBudget(rng_seed=args.seed, max_passes=args.max_passes)
    solution = solve(instance, SolverId(args.solver), budget)
    payload = {
        "instance": instance.name,
        "solver": solution.solver,
        "seed": args.seed,
        "objective": solution.objective,
        "tour": [node + 1 for node in solution.tour],
        "packing": solution.packing,
    }
    _emit(json.dumps(payload) + "\n", args.out)
    return 0


def cmd_evaluate(args: argparse.Namespace) -> int:
    instance = read_instance(args.instance)
    profile = evaluate_profile(
        instance, PORTFOLIO, k=args.k, seed=args.seed, n_jobs=args.parallelism
    )
    _emit(profile_frame(profile).to_csv(index=False), args.out)

    if args.diagnose:
        report = bimodality_report(profile)
        for row in report.solvers:
            logger.info(
                f"{row.solver}: min={row.minimum:.2f} max={row.maximum:.2f} median={row.median:.2f} "
                f"iqr={row.iqr:.2f} gap={row.gap_statistic:.3f}"
            )
        if report.overlap_flag:
            logger.warning(
                f"Worst-median solver {report.worst_solver} reaches the best score of "
                f"{report.best_solver}; medians may be flipped by bimodal runs"
            )
    return 0


def _check_targets(parser: argparse.ArgumentParser, args: argparse.Namespace) -> Optional[str]:
    """Resolve --fitness against --ranking/--pair, rejecting contradictions"""
    fitness = args.fitness
    if args.ranking and args.pair:
        parser.error("--ranking and --pair are mutually exclusive")
    if args.ranking:
        if fitness not in (None, FitnessKind.EXPLICIT.value):
            parser.error(f"--ranking requires --fitness explicit, got --fitness {fitness}")
        return FitnessKind.EXPLICIT.value
    if args.pair:
        if fitness not in (None, FitnessKind.PAIRWISE.value):
            parser.error(f"--pair requires --fitness pairwise, got --fitness {fitness}")
        return FitnessKind.PAIRWISE.value
    if fitness == FitnessKind.EXPLICIT.value and not args.config:
        parser.error("--fitness explicit requires --ranking")
    if fitness == FitnessKind.PAIRWISE.value and not args.config:
        parser.error("--fitness pairwise requires --pair")
    return fitness


def evolve_config_from_args(parser: argparse.ArgumentParser, args: argparse.Namespace) -> EvolveConfig:
    fitness = _check_targets(parser, args)
    base = EvolveConfig.load(args.config) if args.config else EvolveConfig()
    data = base.model_dump()

    if fitness is not None:
        data["fitness_kind"] = fitness
        if fitness != FitnessKind.EXPLICIT.value:
            data["ranking"] = None
        if fitness != FitnessKind.PAIRWISE.value:
            data["pair"] = None
    if args.ranking:
        data["ranking"] = args.ranking
    if args.pair:
        data["pair"] = args.pair
    data["generation"] = _generation_from_args(args, base.generation)
    for key, value in (
        ("k", args.k),
        ("max_iterations", args.budget),
        ("final_runs", args.final_runs),
        ("seed", args.seed),
        ("wall_time_limit", args.time_limit),
    ):
        if value is not None:
            data[key] = value
    if args.reevaluate:
        data["reevaluate_incumbent"] = True
    if args.quantile is not None:
        data["aggregation_quantile"] = args.quantile
    if args.parallelism is not None:
        data["n_jobs"] = args.parallelism
    return EvolveConfig.model_validate(data)


def cmd_evolve(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    config = evolve_config_from_args(parser, args)
    out = output_dir(args)
    result = evolve(config)

    instance_path = out / f"{result.instance.name}.ttp"
    write_instance(result.instance, instance_path, integer_coords=args.integer_coords)
    append_record(record_from_result(result, instance_path), out / "runs.jsonl")
    write_csv(profile_frame(result.final_profile), out / f"{result.instance.name}_final_profile.csv")

    print(json.dumps({
        "instance": str(instance_path),
        "target": config.target_label,
        "actual_ranking": [PORTFOLIO[i - 1].value for i in result.actual_ranking],
        "success": result.success,
        "iterations": result.iterations_completed,
    }))
    return 0


def batch_config_from_args(args: argparse.Namespace) -> BatchConfig:
    base = BatchConfig.load(args.config) if args.config else BatchConfig()
    data = base.model_dump()
    template = base.template.model_dump()

    if args.n:
        data["n_values"] = args.n
    if args.ipn:
        data["ipn_values"] = args.ipn
    if args.fitness:
        data["fitness_kinds"] = args.fitness
    if args.jobs_per_target is not None:
        data["jobs_per_target"] = args.jobs_per_target
    if args.seed is not None:
        data["base_seed"] = args.seed
    if args.parallelism is not None:
        data["parallelism"] = args.parallelism
    for key, value in (("k", args.k), ("max_iterations", args.budget), ("final_runs", args.final_runs)):
        if value is not None:
            template[key] = value
    data["template"] = template
    return BatchConfig.model_validate(data)


def cmd_batch(args: argparse.Namespace) -> int:
    batch = batch_config_from_args(args)
    out = output_dir(args)
    jobs = build_job_matrix(batch)
    report = batch_evolve(jobs, batch.parallelism)

    # Per-job record files, merged in job order
    record_paths: List[Path] = []
    for result in report.results:
        stem = result.config.job_id.split("-", 1)[0]
        instance_path = out / "instances" / f"job_{stem}.ttp"
        write_instance(result.instance, instance_path, integer_coords=args.integer_coords)
        record_path = out / "records" / f"job_{stem}.jsonl"
        record_path.unlink(missing_ok=True)
        append_record(record_from_result(result, instance_path), record_path)
        record_paths.append(record_path)
    merge_record_files(record_paths, out / "runs.jsonl")

    write_csv(report.job_frame(), out / "jobs.csv")
    write_csv(report.ranking_table(), out / "actual_rankings.csv")
    success = write_csv(report.success_table(), out / "success_rates.csv")

    for failure in report.failures:
        logger.error(f"Job {failure.job_id} failed: {failure.error}")
    print(report.success_table().to_string(index=False))
    logger.info(f"Summary written to {success}")
    return 0


def cmd_features(args: argparse.Namespace) -> int:
    paths = [Path(path) for path in args.instances]
    vectors = Parallel(n_jobs=args.parallelism or 1)(
        delayed(compute_features)(read_instance(path)) for path in paths
    )
    frame = features_frame([(path.stem, vector) for path, vector in zip(paths, vectors)])
    _emit(frame.to_csv(index=False), args.out)
    return 0


def cmd_export(args: argparse.Namespace) -> int:
    instance = read_instance(args.instance)
    out = output_dir(args)
    stem = Path(args.instance).stem
    write_csv(node_frame(instance), out / f"{stem}_nodes.csv")
    write_csv(item_frame(instance), out / f"{stem}_items.csv")
    print(out / f"{stem}_nodes.csv")
    print(out / f"{stem}_items.csv")
    return 0


def _add_generation_flags(
    parser: argparse.ArgumentParser,
    defaults: GenerationConfig,
    multiple: bool = False
) -> None:
    nargs = "+" if multiple else None
    parser.add_argument('--n', type=int, nargs=nargs, help=f'Number of nodes (default {defaults.n})')
    parser.add_argument('--ipn', type=int, nargs=nargs,
                        help=f'Items per node, 1, 3, 5 or 10 (default {defaults.ipn})')


def _add_evolve_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--k', type=int, help='Solver runs per fitness evaluation')
    parser.add_argument('--budget', type=int, help='EA iterations')
    parser.add_argument('--final-runs', type=int, help='Runs per solver in the final evaluation')
    parser.add_argument('--integer-coords', action='store_true', help='Round coordinates on output')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ttp-evolver",
        description="Evolve TTP instances with prescribed solver rankings"
    )
    parser.add_argument('--log-level', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                        help='Override $TTP_EVOLVER_LOG_LEVEL')
    subparsers = parser.add_subparsers(dest="command", required=True)

    generate = subparsers.add_parser('generate', help='Write a random instance')
    _add_generation_flags(generate, GenerationConfig())
    generate.add_argument('--seed', type=int, help='Generation seed')
    generate.add_argument('--integer-items', action='store_true', help='Integer weights and profits')
    generate.add_argument('--integer-coords', action='store_true', help='Round coordinates on output')
    generate.add_argument('--config', '-c', help='GenerationConfig YAML file')
    generate.add_argument('--out', help='Output file')

    solve_cmd = subparsers.add_parser('solve', help='Run one solver on an instance')
    solve_cmd.add_argument('instance', help='TTP instance file')
    solve_cmd.add_argument('--solver', choices=[s.value for s in PORTFOLIO], required=True)
    solve_cmd.add_argument('--seed', type=int, default=0)
    solve_cmd.add_argument('--max-passes', type=int, default=SolverBudget().max_passes)
    solve_cmd.add_argument('--out', help='Solution JSON file (default stdout)')

    evaluate_cmd = subparsers.add_parser('evaluate', help='N x k performance profile as CSV')
    evaluate_cmd.add_argument('instance', help='TTP instance file')
    evaluate_cmd.add_argument('--k', type=int, default=5)
    evaluate_cmd.add_argument('--seed', type=int, default=0)
    evaluate_cmd.add_argument('--parallelism', type=int, default=1)
    evaluate_cmd.add_argument('--diagnose', action='store_true', help='Log bimodality diagnostics')
    evaluate_cmd.add_argument('--out', help='CSV file (default stdout)')

    evolve_cmd = subparsers.add_parser(
        'evolve',
        help='Evolve one instance',
        epilog='With --budget 0 the output equals `generate` run with the same --seed, --n and --ipn; '
               'the two commands default to different --n.',
    )
    evolve_cmd.add_argument('--fitness', choices=FITNESS_CHOICES)
    evolve_cmd.add_argument('--ranking', help='Desired ranking, e.g. "C2>S4>S2"')
    evolve_cmd.add_argument('--pair', help='Easy>hard pair, e.g. "C2>S2"')
    _add_generation_flags(evolve_cmd, EvolveConfig().generation)
    _add_evolve_flags(evolve_cmd)
    evolve_cmd.add_argument('--seed', type=int, help='Job seed')
    evolve_cmd.add_argument('--time-limit', type=float, help='EA wall-time limit in seconds')
    evolve_cmd.add_argument('--reevaluate', action='store_true', help='Re-evaluate the incumbent each iteration')
    evolve_cmd.add_argument('--quantile', type=float, help='Aggregate runs by this quantile instead of the median')
    evolve_cmd.add_argument('--parallelism', type=int, help='Parallel solver runs per evaluation')
    evolve_cmd.add_argument('--config', '-c', help='EvolveConfig YAML file')
    evolve_cmd.add_argument('--out', help='Output directory')

    batch_cmd = subparsers.add_parser('batch', help='Run a job matrix and summarize success rates')
    batch_cmd.add_argument('--fitness', choices=FITNESS_CHOICES, nargs='+')
    _add_generation_flags(batch_cmd, EvolveConfig().generation, multiple=True)
    _add_evolve_flags(batch_cmd)
    batch_cmd.add_argument('--jobs-per-target', type=int)
    batch_cmd.add_argument('--seed', type=int, help='Base seed of the batch')
    batch_cmd.add_argument('--parallelism', type=int, help='Parallel jobs')
    batch_cmd.add_argument('--config', '-c', help='BatchConfig YAML file')
    batch_cmd.add_argument('--out', help='Output directory')

    features_cmd = subparsers.add_parser('features', help='Feature CSV of instances')
    features_cmd.add_argument('instances', nargs='+', help='TTP instance files')
    features_cmd.add_argument('--parallelism', type=int, default=1)
    features_cmd.add_argument('--out', help='CSV file (default stdout)')

    export_cmd = subparsers.add_parser('export', help='Node and item clouds as CSV')
    export_cmd.add_argument('instance', help='TTP instance file')
    export_cmd.add_argument('--out', help='Output directory')

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point"""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.log_level:
        TTPLogger.set_level(getattr(logging, args.log_level))

    handlers = {
        'generate': cmd_generate,
        'solve': cmd_solve,
        'evaluate': cmd_evaluate,
        'evolve': lambda a: cmd_evolve(a, parser),
        'batch': cmd_batch,
        'features': cmd_features,
        'export': cmd_export,
    }
    try:
        return handlers[args.command](args)
    except (TTPError, ValueError, OSError) as e:
        logger.error(f"{args.command} failed: {e}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
