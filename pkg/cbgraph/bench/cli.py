"""Command-line entry point: ``cbgraph load|run|update|sweep|probe``."""
import argparse
import json
import logging
import os
import sys

from cbgraph.adapt.probe import probe_config
from cbgraph.adapt.strategy import mode_config
from cbgraph.adapt.tuner import tune
from cbgraph.bench.load import load_graph
from cbgraph.bench.sweep import sweep
from cbgraph.bench.update_stream import STREAM_KINDS, generate_update_stream
from cbgraph.bench.workloads import TASK_CLASS, WORKLOADS, run_workload
from cbgraph.errors import CBGraphError
from cbgraph.global_settings import (DEFAULT_HOTNESS_PREFIX,
                                     DEFAULT_PROBE_FILE,
                                     DEFAULT_PROBE_SWEEP,
                                     DEFAULT_PROBE_TRIALS,
                                     DEFAULT_QUERY_FRACTION,
                                     DEFAULT_TASKS_PER_THREAD)
from cbgraph.io.io_probe import load_probe
from cbgraph.io.io_report import save_reports
from cbgraph.io.io_stream import load_update_stream
from cbgraph.utils import _check_probe_file

logger = logging.getLogger('cbgraph')


def _int_list(text):
    return [int(item) for item in text.split(',') if item]


def _add_execution_flags(parser, lists=False):
    kind = _int_list if lists else int
    parser.add_argument('--threads', type=kind, default=[1] if lists else 1,
                        help='worker threads')
    parser.add_argument('--coroutines', type=kind,
                        default=([1, DEFAULT_TASKS_PER_THREAD] if lists
                                 else DEFAULT_TASKS_PER_THREAD),
                        help='suspendable tasks per thread (m)')
    parser.add_argument('--hotness-prefix', type=int,
                        default=DEFAULT_HOTNESS_PREFIX,
                        help='cold blocks per traversal under HybridII')
    parser.add_argument('--seed', type=int, default=0)
    parser.add_argument('--shuffle', action='store_true',
                        help='shuffle vertex ids and edge order with --seed')
    parser.add_argument('--report', help='append JSON-line reports here')


def build_parser():
    parser = argparse.ArgumentParser(
        prog='cbgraph',
        description='Dynamic graph storage benchmarks with interleaved, '
                    'prefetch-gated execution.')
    parser.add_argument('-v', '--verbose', action='store_true')
    parser.add_argument('-q', '--quiet', action='store_true')
    commands = parser.add_subparsers(dest='command', required=True)

    load = commands.add_parser('load', help='load a graph and audit it')
    load.add_argument('graph', help='edge-list file')
    load.add_argument('--seed', type=int, default=0)
    load.add_argument('--shuffle', action='store_true',
                      help='shuffle vertex ids and edge order with --seed')

    run = commands.add_parser('run', help='run one workload')
    run.add_argument('graph')
    run.add_argument('--workload', choices=WORKLOADS, default='bfs')
    run.add_argument('--strategy', default=None,
                     help='mode (SE, IE, IE+SP, HybridI, HybridII) or '
                          'prefetch strategy name')
    run.add_argument('--config', nargs='?', const='',
                     help='probe file used to tune the run (no value: the '
                          'default probe file)')
    run.add_argument('--source', type=int)
    run.add_argument('--iters', type=int)
    run.add_argument('--fraction', type=float,
                     default=DEFAULT_QUERY_FRACTION)
    run.add_argument('--hardware', action='store_true',
                     help='read hardware cache counters')
    _add_execution_flags(run)

    update = commands.add_parser('update', help='apply an update stream')
    update.add_argument('graph')
    update.add_argument('--stream', help='timestamped op file (default: '
                                         'draw one)')
    update.add_argument('--ops', type=int, default=10000)
    update.add_argument('--kind', choices=STREAM_KINDS, default='edges')
    update.add_argument('--batch-size', type=int, default=1000)
    update.add_argument('--strategy', default=None)
    update.add_argument('--config', nargs='?', const='')
    _add_execution_flags(update)

    sweep_cmd = commands.add_parser('sweep', help='sweep configurations')
    sweep_cmd.add_argument('graph')
    sweep_cmd.add_argument('--workload', action='append', choices=WORKLOADS,
                           help='repeatable (default bfs)')
    sweep_cmd.add_argument('--strategy', action='append',
                           help='repeatable mode or strategy (default SE '
                                'and IE+SP)')
    sweep_cmd.add_argument('--batch-size', type=_int_list, default=None)
    sweep_cmd.add_argument('--ops', type=int, default=1000)
    sweep_cmd.add_argument('--output-dir')
    _add_execution_flags(sweep_cmd, lists=True)

    probe = commands.add_parser('probe', help='measure cost-model parameters')
    probe.add_argument('--llc-size', type=int)
    probe.add_argument('--trials', type=int, default=DEFAULT_PROBE_TRIALS)
    probe.add_argument('--sweep', type=_int_list,
                       default=list(DEFAULT_PROBE_SWEEP))
    probe.add_argument('--output-dir',
                       help='directory of probe.json (default ~/.cbgraph)')
    probe.add_argument('--overwrite', action='store_true')
    return parser


def _config(args, workload):
    if args.strategy is None and args.config is not None:
        probe = load_probe(_check_probe_file(args.config or None))
        config = tune(TASK_CLASS[workload], probe,
                      threads=args.threads)
        return config.replace(hotness_prefix=args.hotness_prefix)
    return mode_config(args.strategy or 'IE+SP',
                       tasks_per_thread=args.coroutines,
                       threads=args.threads,
                       hotness_prefix=args.hotness_prefix).validate()


def _emit(args, reports):
    for report in reports:
        print(json.dumps(report.to_dict(), sort_keys=True, default=str))
    if getattr(args, 'report', None):
        save_reports(args.report, reports)


def main(argv=None):
    args = build_parser().parse_args(argv)
    level = (logging.DEBUG if args.verbose else
             logging.WARNING if args.quiet else logging.INFO)
    logging.basicConfig(level=level, format='%(message)s')

    try:
        if args.command == 'load':
            graph, stats = load_graph(args.graph,
                                      shuffle_seed=args.seed if args.shuffle
                                      else None, weight_seed=args.seed,
                                      return_stats=True)
            audit = graph.gtchain_audit()
            summary = stats.to_dict()
            summary.update(ordered=audit.ordered,
                           problems=list(audit.problems))
            summary.update(graph.chain_stats())
            print(json.dumps(summary, sort_keys=True))
            return 0 if audit.ordered else 1

        if args.command == 'run':
            graph = load_graph(args.graph,
                               shuffle_seed=args.seed if args.shuffle
                               else None, weight_seed=args.seed)
            report = run_workload(graph, args.workload,
                                  _config(args, args.workload),
                                  dataset=args.graph, source=args.source,
                                  iters=args.iters, fraction=args.fraction,
                                  seed=args.seed, hardware=args.hardware)
            _emit(args, [report])
            return 0 if report.status == 'ok' else 1

        if args.command == 'update':
            graph = load_graph(args.graph,
                               shuffle_seed=args.seed if args.shuffle
                               else None, weight_seed=args.seed)
            if args.stream:
                stream = load_update_stream(args.stream)
            else:
                stream = generate_update_stream(graph, args.ops, args.seed,
                                                kind=args.kind)
            report = run_workload(graph, 'update', _config(args, 'update'),
                                  dataset=args.graph, stream=stream,
                                  batch_size=args.batch_size)
            _emit(args, [report])
            return 0 if report.status == 'ok' else 1

        if args.command == 'sweep':
            result = sweep(args.graph, workloads=args.workload or ['bfs'],
                           modes=args.strategy or ['SE', 'IE+SP'],
                           tasks=args.coroutines, threads=args.threads,
                           batch_sizes=args.batch_size or [None],
                           hotness_prefix=args.hotness_prefix,
                           stream_ops=args.ops, seed=args.seed,
                           save_data=args.output_dir is not None,
                           overwrite=True, output_dir=args.output_dir)
            _emit(args, result['reports'])
            return 0

        result = probe_config(sweep=args.sweep, trials=args.trials,
                              llc_size=args.llc_size,
                              save_data=True, overwrite=args.overwrite,
                              output_dir=(args.output_dir or
                                          os.path.dirname(DEFAULT_PROBE_FILE)),
                              file_name=os.path.basename(DEFAULT_PROBE_FILE))
        print(json.dumps(result.to_dict(), sort_keys=True))
        return 0

    except (CBGraphError, ValueError, OSError) as error:
        logger.error("%s: %s", type(error).__name__, error)
        return 2


if __name__ == '__main__':
    sys.exit(main())
