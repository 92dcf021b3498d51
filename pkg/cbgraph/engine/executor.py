import logging
from concurrent.futures import ThreadPoolExecutor

from cbgraph.access.context import (AccessCounters, ExecutionContext,
                                    record_run)
from cbgraph.adapt.strategy import StrategyConfig
from cbgraph.engine.scheduler import SCHEDULERS
from cbgraph.engine.task_pool import SchedulerStats, build_pool
from cbgraph.errors import TaskPanicked

logger = logging.getLogger(__name__)


def run_partitioned(config, make_task):
    """Run ``threads * tasks_per_thread`` parts as interleaved tasks.

    Worker thread ``t`` owns parts ``t*m .. t*m + m - 1`` and drives them
    with the configured scheduler through its own execution context.

    Parameters
    ----------
    config: StrategyConfig
        Threads, tasks per thread and scheduler.
    make_task: callable
        ``make_task(part, ctx)`` returning a SuspendableTask or generator.

    Returns
    ----------
    dict
        * results: task results in part order
        * scheduler: merged SchedulerStats
        * counters: merged AccessCounters
    """
    config = (config or StrategyConfig()).validate()
    threads, m = config.threads, config.tasks_per_thread
    schedule = SCHEDULERS[config.scheduler]

    def worker(thread):
        ctx = ExecutionContext(config)
        offset = thread * m
        pool = build_pool(m, lambda i: make_task(offset + i, ctx), ctx)
        try:
            stats = schedule(pool)
        except TaskPanicked as panic:
            raise TaskPanicked(offset + panic.task_index,
                               panic.error) from panic.error
        return pool.results(), stats, ctx.counters

    if threads == 1:
        outcomes = [worker(0)]
    else:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            outcomes = list(executor.map(worker, range(threads)))

    results, stats, counters = [], SchedulerStats(), AccessCounters()
    for part_results, part_stats, part_counters in outcomes:
        results.extend(part_results)
        stats.merge(part_stats)
        counters.merge(part_counters)
    record_run(counters, stats)
    return {'results': results, 'scheduler': stats, 'counters': counters}
