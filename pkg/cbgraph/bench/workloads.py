import logging
import time

from cbgraph.adapt.strategy import StrategyConfig, mode_name
from cbgraph.algos.bfs import bfs
from cbgraph.algos.connected_components import connected_components
from cbgraph.algos.edge_query import edge_query_workload
from cbgraph.algos.label_propagation import label_propagation
from cbgraph.algos.pagerank import pagerank
from cbgraph.algos.sssp import sssp
from cbgraph.bench.counters import counter_capture
from cbgraph.bench.report import RunReport, output_digest
from cbgraph.bench.update_stream import update_stream_driver
from cbgraph.global_settings import DEFAULT_DAMPING, DEFAULT_QUERY_FRACTION

logger = logging.getLogger(__name__)

WORKLOADS = ('bfs', 'sssp', 'pagerank', 'cc', 'lp', 'query', 'update')

# task class used to tune each workload
TASK_CLASS = {'bfs': 'frontier', 'sssp': 'frontier', 'pagerank': 'full_scan',
              'cc': 'full_scan', 'lp': 'full_scan', 'query': 'point_query',
              'update': 'batch_update'}


def _default_source(graph):
    vertices = graph.vertices()
    if not vertices:
        raise ValueError("The graph has no live vertex to start from")
    return vertices[0]


def run_workload(graph, workload, config=None, dataset=None, source=None,
                 iters=None, damping=DEFAULT_DAMPING,
                 fraction=DEFAULT_QUERY_FRACTION, seed=0, stream=None,
                 batch_size=None, hardware=False):
    """
    Run one workload and report it

    Parameters
    ----------
    graph: CBList
        Input graph; 'update' modifies it in place.
    workload: {'bfs', 'sssp', 'pagerank', 'cc', 'lp', 'query', 'update'}
        What to run.
    config: StrategyConfig, optional
        Execution configuration (default StrategyConfig()).
    dataset: str, optional
        Name recorded in the report.
    source: int, optional
        Start vertex of bfs/sssp (default the first live vertex).
    iters: int, optional
        Iterations of pagerank (default 20) and lp (default 10).
    damping: float
        PageRank damping factor.
    fraction: float
        Share of edges queried by 'query'.
    seed: int
        Sampling seed of 'query'.
    stream: sequence of UpdateOp
        Updates applied by 'update'.
    batch_size: int, optional
        Batch size of 'update' (default the whole stream).
    hardware: bool
        Try to read hardware cache counters (default False)

    Returns
    ----------
    RunReport
        The output digest only depends on the workload result, so runs
        under different strategies can be compared directly. A workload
        that raises gives a report with status 'failed' and the error
        message; invalid arguments still raise.
    """
    if workload not in WORKLOADS:
        raise ValueError("workload must be one of {0}, got {1!r}".format(
            WORKLOADS, workload))
    config = (config or StrategyConfig()).validate()
    logger.info("\nRun %s (%s, m=%d, threads=%d)", workload, mode_name(config),
                config.tasks_per_thread, config.threads)

    if workload == 'update':
        if stream is None:
            raise ValueError("The update workload needs a stream")
        batch_size = batch_size or max(len(stream), 1)

    def scope():
        if workload == 'bfs':
            return bfs(graph, source, config)
        if workload == 'sssp':
            return sssp(graph, source, config)
        if workload == 'pagerank':
            return pagerank(graph, iters or 20, damping, config)
        if workload == 'cc':
            return connected_components(graph, config)
        if workload == 'lp':
            return label_propagation(graph, iters or 10, config)
        if workload == 'query':
            return edge_query_workload(graph, fraction, seed, config)
        return update_stream_driver(graph, stream, batch_size, config)

    report = RunReport(workload=workload, mode=mode_name(config),
                       config=config.to_dict(), threads=config.threads,
                       batch_size=batch_size, dataset=dataset)
    start = time.perf_counter()
    try:
        if workload in ('bfs', 'sssp') and source is None:
            source = _default_source(graph)
        captured = counter_capture(scope, hardware=hardware)
    except Exception as error:
        report.wall_time = time.perf_counter() - start
        report.status, report.error = 'failed', str(error)
        logger.warning("%s under %s failed: %s: %s", workload, report.mode,
                       type(error).__name__, error)
        return report
    wall_time = time.perf_counter() - start
    result, software = captured['result'], captured['software']

    if workload == 'query':
        digest = output_digest((result['hits'], result['misses']))
        work, units = result['queries'], 'queries/s'
    elif workload == 'update':
        digest = result['checksum']
        work, units = result['stats'].applied, 'updates/s'
    else:
        digest = output_digest(result)
        work, units = software['records'], 'edges/s'

    report.wall_time = wall_time
    report.throughput = work / wall_time if wall_time > 0 else 0.0
    report.units = units
    report.counters = software
    report.hardware = captured['hardware']
    report.output_digest = digest
    logger.info("%s finished in %.4fs (%.0f %s)", workload, wall_time,
                report.throughput, units)
    return report
