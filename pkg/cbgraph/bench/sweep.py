import logging
import os

from cbgraph.adapt.strategy import mode_config, mode_name
from cbgraph.bench.load import load_graph
from cbgraph.bench.report import RunReport
from cbgraph.bench.update_stream import generate_update_stream
from cbgraph.bench.workloads import run_workload
from cbgraph.io.io_report import load_reports, save_reports, save_summary
from cbgraph.utils import _fname_4saving, _output_dir_4saving

logger = logging.getLogger(__name__)

SUMMARY_COLUMNS = ['workload', 'mode', 'tasks_per_thread', 'threads',
                   'batch_size', 'wall_time', 'throughput', 'units', 'status',
                   'output_digest']


def _cells(modes, tasks, threads, batch_sizes, hotness_prefix):
    seen, cells = set(), []
    for mode in modes:
        for m in tasks:
            for t in threads:
                for b in batch_sizes:
                    config = mode_config(mode, tasks_per_thread=m, threads=t,
                                         hotness_prefix=hotness_prefix)
                    key = (mode_name(config), config.tasks_per_thread, t, b)
                    if key not in seen:
                        seen.add(key)
                        cells.append((config, b))
    # the sequential baseline is always measured
    for t in threads:
        for b in batch_sizes:
            key = ('SE', 1, t, b)
            if key not in seen:
                seen.add(key)
                cells.insert(0, (mode_config('SE', threads=t), b))
    return cells


def sweep(graph_source, workloads=('bfs',), modes=('SE', 'IE+SP'),
          tasks=(1, 8), threads=(1,), batch_sizes=(None,), hotness_prefix=4,
          stream_ops=1000, stream_kind='edges', seed=0, save_data=False,
          overwrite=False, output_dir=None, file_name=None, **params):
    """
    Run workloads over a grid of execution configurations

    Parameters
    ----------
    graph_source: str or callable
        Edge-list path, or a zero-argument callable returning a fresh
        CBList. Each cell of an 'update' workload gets a fresh graph.
    workloads: sequence of str
        Workload names (see run_workload).
    modes: sequence of str
        Execution modes (SE, IE, IE+SP, HybridI, HybridII) or prefetch
        strategy names.
    tasks: sequence of int
        Tasks per thread.
    threads: sequence of int
        Thread counts.
    batch_sizes: sequence of int or None
        Batch sizes of 'update' workloads.
    hotness_prefix: int
        Prefix length of HybridII.
    stream_ops, stream_kind, seed:
        Update stream drawn for 'update' workloads.
    save_data: bool
        Save reports (JSON lines) and summary (CSV) (default is False)
    overwrite: bool
        Overwrite existing outputs (default is False)
    output_dir: str, optional
        Output directory (default is the graph directory or cwd)
    file_name: str, optional
        Base name of the outputs.
    params:
        Extra keyword arguments for run_workload (source, iters, ...).

    Returns
    ----------
    dict
        * reports: list of RunReport, failed cells included
        * summary: pandas DataFrame, one row per report, with a ``best``
          column flagging the fastest successful cell per workload
    """
    import pandas as pd

    logger.info("\nBenchmark sweep")
    rootfile = graph_source if isinstance(graph_source, str) else None
    if save_data:
        output_dir = _output_dir_4saving(output_dir, rootfile)
        report_file = os.path.join(output_dir, _fname_4saving(
            file_name=file_name, rootfile=rootfile, suffix='sweep-reports',
            ext='jsonl', module='cbgraph'))
        summary_file = os.path.join(output_dir, _fname_4saving(
            file_name=file_name, rootfile=rootfile, suffix='sweep-summary',
            ext='csv', module='cbgraph'))
        if overwrite is False and os.path.isfile(summary_file):
            logger.info("skip computation (use existing results)")
            summary = pd.read_csv(summary_file)
            return {'reports': load_reports(report_file), 'summary': summary}

    def fresh_graph():
        if callable(graph_source):
            return graph_source()
        return load_graph(graph_source, shuffle_seed=seed, weight_seed=seed)

    shared = None
    cells = _cells(modes, tasks, threads, batch_sizes, hotness_prefix)
    reports = []
    for workload in workloads:
        for config, batch_size in cells:
            if workload != 'update' and batch_size is not None and \
                    batch_size != batch_sizes[0]:
                continue
            try:
                if workload == 'update':
                    graph = fresh_graph()
                    stream = generate_update_stream(graph, stream_ops, seed,
                                                    kind=stream_kind)
                else:
                    shared = shared or fresh_graph()
                    graph, stream = shared, None
                report = run_workload(
                    graph, workload, config, dataset=rootfile,
                    stream=stream,
                    batch_size=batch_size if workload == 'update' else None,
                    seed=seed, **params)
            except Exception as error:
                logger.warning("%s under %s failed: %s", workload,
                               mode_name(config), error)
                report = RunReport(workload=workload, mode=mode_name(config),
                                   config=config.to_dict(),
                                   threads=config.threads,
                                   batch_size=batch_size, dataset=rootfile,
                                   status='failed', error=str(error))
            reports.append(report)

    rows = []
    for report in reports:
        row = {key: getattr(report, key, None) for key in SUMMARY_COLUMNS}
        row['tasks_per_thread'] = report.config['tasks_per_thread']
        rows.append(row)
    summary = pd.DataFrame(rows, columns=SUMMARY_COLUMNS)
    summary['best'] = False
    done = summary[summary['status'] == 'ok']
    if len(done):
        fastest = done.groupby('workload')['wall_time'].idxmin()
        summary.loc[fastest.values, 'best'] = True

    if save_data:
        save_reports(report_file, reports, append=False)
        save_summary(summary_file, summary)
    return {'reports': reports, 'summary': summary}
