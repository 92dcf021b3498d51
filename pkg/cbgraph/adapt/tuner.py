import logging

from cbgraph.adapt.strategy import (CostModelParams, PrefetchStrategy,
                                    StrategyConfig)
from cbgraph.global_settings import (DEFAULT_HOTNESS_PREFIX,
                                     DEFAULT_TASKS_PER_THREAD)

logger = logging.getLogger(__name__)

TASK_CLASSES = ('full_scan', 'frontier', 'point_query', 'batch_update')

# partitioner and scheduler per task class
_PAIRINGS = {
    'full_scan': ('gtchain', 'polling'),
    'frontier': ('vertex_range', 'trimmed'),
    'point_query': ('vertex_range', 'trimmed'),
    'batch_update': ('vertex_range', 'trimmed'),
}


def choose_strategy(task_class, cost):
    """Prefetch strategy for a task class under a cost model.

    Descents (point queries, update locates) only touch tree nodes. Scans
    walk chunks and chained leaves; hardware prefetching is trusted for a
    layout whenever its exposed miss cost is below one suspend/resume.
    """
    if task_class in ('point_query', 'batch_update'):
        if cost.redundant('tree'):
            return PrefetchStrategy.ALL_HARD
        return PrefetchStrategy.ALL_SOFT
    if cost.redundant('chain'):
        if cost.redundant('tree'):
            return PrefetchStrategy.ALL_HARD
        # list heads are cold even when the rest of the chain streams
        return PrefetchStrategy.HYBRID_HOTNESS
    if cost.redundant('sequential'):
        return PrefetchStrategy.HYBRID_BLOCK_SIZE
    return PrefetchStrategy.ALL_SOFT


def tune(task_class, probe=None, threads=1):
    """Pick a StrategyConfig for a task class from probe measurements.

    Parameters
    ----------
    task_class: {'full_scan', 'frontier', 'point_query', 'batch_update'}
        Shape of the workload.
    probe: ProbeResult, optional
        Measured costs; defaults of CostModelParams are used when omitted.
    threads: int
        Worker threads of the returned configuration.

    Returns
    ----------
    StrategyConfig
        Raising any hardware hit rate never moves the choice from
        hardware-only prefetching to software hints.
    """
    if task_class not in TASK_CLASSES:
        raise ValueError("task_class must be one of {0}, got {1!r}".format(
            TASK_CLASSES, task_class))
    if probe is None:
        cost, m = CostModelParams(), DEFAULT_TASKS_PER_THREAD
    else:
        cost, m = probe.cost_params(), probe.recommended_m

    partitioner, scheduler = _PAIRINGS[task_class]
    strategy = choose_strategy(task_class, cost)
    if strategy is PrefetchStrategy.ALL_HARD:
        m = 1
    config = StrategyConfig(prefetch_strategy=strategy,
                            hotness_prefix=DEFAULT_HOTNESS_PREFIX,
                            tasks_per_thread=m, partitioner=partitioner,
                            scheduler=scheduler, threads=threads, cost=cost)
    logger.info("Tuned %s: %s with %d tasks per thread", task_class,
                strategy.value, m)
    return config.validate()
