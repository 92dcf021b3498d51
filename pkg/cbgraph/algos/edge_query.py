import logging
import math
import time

import numpy as np

from cbgraph.access.operations import find_neighbor_steps
from cbgraph.adapt.strategy import StrategyConfig
from cbgraph.engine.executor import run_partitioned
from cbgraph.global_settings import DEFAULT_QUERY_FRACTION

logger = logging.getLogger(__name__)


def sample_edge_queries(graph, fraction=DEFAULT_QUERY_FRACTION, seed=0):
    """
    Draw a query set of existing edges and an equal number of non-edges

    Returns
    ----------
    dict
        * present: ``(src, dst)`` pairs sampled without replacement from
          the live edges
        * absent: as many pairs of live vertices that are not edges
          (fewer only when the graph is too dense to find them)
    """
    rng = np.random.default_rng(seed)
    edges = [(src, dst) for src, dst, _ in graph.iter_edges()]
    count = min(len(edges), int(math.ceil(fraction * len(edges))))
    picks = rng.choice(len(edges), size=count, replace=False) if count else []
    present = [edges[i] for i in sorted(picks)]

    vertices = np.asarray(graph.vertices(), dtype=np.int64)
    existing = set(edges)
    absent, attempts = [], 0
    while len(absent) < count and len(vertices) and attempts < 100 * count:
        attempts += 1
        src, dst = (int(x) for x in rng.choice(vertices, size=2))
        if (src, dst) not in existing:
            absent.append((src, dst))
            existing.add((src, dst))
    return {'present': present, 'absent': absent}


def edge_query_workload(graph, fraction=DEFAULT_QUERY_FRACTION, seed=0,
                        config=None):
    """
    Answer a batch of random edge-existence queries with interleaved tasks

    Parameters
    ----------
    graph: CBList
        Graph to query.
    fraction: float
        Share of the live edges queried (default 0.05); the same number of
        non-edges is added.
    seed: int
        Sampling seed.
    config: StrategyConfig, optional
        Execution configuration; queries are dealt round-robin over all
        tasks.

    Returns
    ----------
    dict
        * hits, misses: query outcomes
        * queries: number of queries
        * elapsed: wall time of the answering phase, in seconds
        * latency: mean seconds per query
        * wrong: queries whose outcome contradicts the sample
        * scheduler, counters: execution statistics
    """
    sample = sample_edge_queries(graph, fraction, seed)
    queries = ([(src, dst, True) for src, dst in sample['present']] +
               [(src, dst, False) for src, dst in sample['absent']])

    def make_task(part, ctx, parts):
        def steps():
            hits = misses = wrong = 0
            for src, dst, expected in queries[part::parts]:
                found = yield from find_neighbor_steps(graph, src, dst, ctx)
                if found is None:
                    misses += 1
                else:
                    hits += 1
                wrong += (found is not None) != expected
            return hits, misses, wrong
        return steps()

    start = time.perf_counter()
    config = (config or StrategyConfig()).validate()
    parts = config.threads * config.tasks_per_thread
    with graph.reading():
        run = run_partitioned(config,
                              lambda part, ctx: make_task(part, ctx, parts))
    elapsed = time.perf_counter() - start

    hits = sum(r[0] for r in run['results'])
    misses = sum(r[1] for r in run['results'])
    wrong = sum(r[2] for r in run['results'])
    if wrong:
        logger.warning("%d edge queries disagree with the sample", wrong)
    return {'hits': hits, 'misses': misses, 'queries': len(queries),
            'wrong': wrong, 'elapsed': elapsed,
            'latency': elapsed / len(queries) if queries else 0.0,
            'scheduler': run['scheduler'], 'counters': run['counters']}
