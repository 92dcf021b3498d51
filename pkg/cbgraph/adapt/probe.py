"""Machine probe for the prefetch cost model.

The probe times dependent loads over a working set several times the
last-level cache, laid out sequentially, as an ascending chain with gaps
(the shape of the GTChain) and in random order (tree descents). It also
times a generator suspend/resume pair and sweeps the number of interleaved
tasks to find the fastest one.
"""
import logging
import os
import time
from dataclasses import dataclass, field
from typing import Dict

import numpy as np
from numba import njit

from cbgraph.adapt.strategy import CostModelParams
from cbgraph.adapt.tuner import TASK_CLASSES, choose_strategy
from cbgraph.errors import InsufficientMemory
from cbgraph.global_settings import (CACHE_LINE_SIZE, DEFAULT_PROBE_SWEEP,
                                     DEFAULT_PROBE_TRIALS,
                                     PROBE_WORKING_SET_FACTOR)
from cbgraph.utils import (_check_available_memory, _detect_llc_size,
                           _fname_4saving, _output_dir_4saving)

logger = logging.getLogger(__name__)

_SLOTS_PER_LINE = CACHE_LINE_SIZE // 8


@dataclass
class ProbeResult:
    c_m: float
    c_coro: float
    p_h: Dict[str, float]
    recommended_m: int
    sweep_runtimes: Dict[int, float] = field(default_factory=dict)
    llc_size: int = 0
    working_set: int = 0
    strategies: Dict[str, str] = field(default_factory=dict)

    def cost_params(self):
        return CostModelParams(c_m=self.c_m, c_coro=self.c_coro,
                               p_h=dict(self.p_h))

    def to_dict(self):
        return {'c_m': self.c_m, 'c_coro': self.c_coro, 'p_h': dict(self.p_h),
                'recommended_m': self.recommended_m,
                'sweep_runtimes': {str(m): t for m, t
                                   in self.sweep_runtimes.items()},
                'llc_size': self.llc_size, 'working_set': self.working_set,
                'strategies': dict(self.strategies)}

    @classmethod
    def from_dict(cls, values):
        values = dict(values)
        values['sweep_runtimes'] = {int(m): float(t) for m, t in
                                    values.get('sweep_runtimes', {}).items()}
        return cls(**values)


@njit(cache=False)
def _chase(next_slot, start, steps):
    slot = start
    for _ in range(steps):
        slot = next_slot[slot]
    return slot


def _build_layout(n_lines, layout, rng):
    if layout == 'sequential':
        order = np.arange(n_lines, dtype=np.int64)
    elif layout == 'chain':
        order = np.sort(rng.choice(n_lines, size=max(n_lines // 2, 2),
                                   replace=False)).astype(np.int64)
    else:
        order = rng.permutation(n_lines).astype(np.int64)
    next_slot = np.zeros(n_lines * _SLOTS_PER_LINE, dtype=np.int64)
    next_slot[order * _SLOTS_PER_LINE] = np.roll(order, -1) * _SLOTS_PER_LINE
    return next_slot, int(order[0] * _SLOTS_PER_LINE)


def _time_chase(next_slot, start, steps, trials):
    _chase(next_slot, start, 16)
    samples = []
    for _ in range(trials):
        begin = time.perf_counter_ns()
        _chase(next_slot, start, steps)
        samples.append((time.perf_counter_ns() - begin) / steps)
    return float(np.median(samples))


def _measure_coroutine_cost(trials, switches=20000):
    from cbgraph.access.task import SuspendableTask
    from cbgraph.engine.scheduler import polling_scheduler
    from cbgraph.engine.task_pool import TaskPool

    def spin(n):
        for _ in range(n):
            yield

    samples = []
    for _ in range(trials):
        pool = TaskPool([SuspendableTask(spin(switches // 2)),
                         SuspendableTask(spin(switches // 2))])
        begin = time.perf_counter_ns()
        stats = polling_scheduler(pool)
        samples.append((time.perf_counter_ns() - begin) / stats.resumes)
    return float(np.median(samples))


def _sweep_tasks(next_slot, start, sweep, trials, hops):
    from cbgraph.access.task import SuspendableTask
    from cbgraph.engine.scheduler import polling_scheduler
    from cbgraph.engine.task_pool import TaskPool

    n_slots = len(next_slot)
    stride = max(n_slots // (max(sweep) * _SLOTS_PER_LINE), 1)

    def chase(slot, n):
        for _ in range(n):
            slot = next_slot[slot]
            yield
        return slot

    runtimes = {}
    for m in sweep:
        samples = []
        for _ in range(trials):
            starts = [int(next_slot[(start + i * stride * _SLOTS_PER_LINE)
                                    % n_slots]) for i in range(m)]
            pool = TaskPool([SuspendableTask(chase(s, hops // m))
                             for s in starts])
            begin = time.perf_counter()
            polling_scheduler(pool)
            samples.append(time.perf_counter() - begin)
        runtimes[m] = float(np.median(samples))
    return runtimes


def probe_config(sweep=DEFAULT_PROBE_SWEEP, trials=DEFAULT_PROBE_TRIALS,
                 llc_size=None, steps=None, seed=0, save_data=False,
                 overwrite=False, output_dir=None, file_name=None):
    """Measure the cost-model parameters of this machine.

    Parameters
    ----------
    sweep: sequence of int
        Task counts (m) to time in the interleaving sweep.
    trials: int
        Repetitions per measurement; medians are reported.
    llc_size: int, optional
        Last-level cache size in bytes (default: read from sysfs).
    steps: int, optional
        Dependent loads per timing (default: one pass, capped at 2M).
    seed: int
        Seed of the random layouts.
    save_data: bool
        Save the result as JSON (default is False)
    overwrite: bool
        Overwrite an existing probe file (default is False)
    output_dir: str, optional
        Directory of the probe file (default is cwd)
    file_name: str, optional
        Probe file name (default is 'probe.json')

    Returns
    ----------
    ProbeResult
        Miss cost and switch cost in ns, hardware hit rate per layout,
        sweep runtimes and the recommended m.

    Raises
    ----------
    InsufficientMemory
        When the working set cannot be allocated.
    """
    logger.info("\nMachine probe")
    from cbgraph.io.io_probe import load_probe, save_probe

    if save_data:
        output_dir = _output_dir_4saving(output_dir)
        probe_file = os.path.join(output_dir, _fname_4saving(
            file_name=file_name, module='probe', ext='json'))
        if overwrite is False and os.path.isfile(probe_file):
            logger.info("skip computation (use existing results)")
            return load_probe(probe_file)

    llc_size = llc_size or _detect_llc_size()
    working_set = PROBE_WORKING_SET_FACTOR * llc_size
    available = _check_available_memory()['available']
    if working_set * 2 > available:
        raise InsufficientMemory(working_set * 2, available)

    n_lines = max(working_set // CACHE_LINE_SIZE, 16)
    steps = steps or min(n_lines, 2000000)
    rng = np.random.default_rng(seed)

    latency = {}
    for layout in ('sequential', 'chain', 'tree'):
        try:
            next_slot, start = _build_layout(n_lines, layout, rng)
        except MemoryError:
            raise InsufficientMemory(working_set, available) from None
        latency[layout] = _time_chase(next_slot, start, steps, trials)
        logger.debug("%s layout: %.2f ns per dependent load", layout,
                     latency[layout])

    c_m = max(latency['tree'], 1e-3)
    # random descents defeat stream prefetchers by construction
    p_h = {'tree': 0.0}
    for layout in ('sequential', 'chain'):
        p_h[layout] = float(np.clip(1.0 - latency[layout] / c_m, 0.0, 1.0))

    c_coro = _measure_coroutine_cost(trials)
    runtimes = _sweep_tasks(next_slot, start, tuple(sweep), trials,
                            hops=min(steps, 200000))
    recommended_m = min(runtimes, key=runtimes.get)

    cost = CostModelParams(c_m=c_m, c_coro=c_coro, p_h=p_h)
    result = ProbeResult(
        c_m=c_m, c_coro=c_coro, p_h=p_h, recommended_m=int(recommended_m),
        sweep_runtimes=runtimes, llc_size=int(llc_size),
        working_set=int(working_set),
        strategies={task_class: choose_strategy(task_class, cost).value
                    for task_class in TASK_CLASSES})
    logger.info("C_m %.1f ns, C_coro %.1f ns, recommended m %d", c_m, c_coro,
                result.recommended_m)

    if save_data:
        save_probe(probe_file, result)
    return result
