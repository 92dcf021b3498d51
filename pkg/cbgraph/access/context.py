"""Per-worker execution state for suspendable access operations."""
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, fields

from cbgraph.adapt.gate import gate
from cbgraph.adapt.strategy import StrategyConfig


@dataclass
class AccessCounters:
    hints: int = 0
    yields: int = 0
    trimmed: int = 0
    blocks: int = 0
    records: int = 0
    node_visits: int = 0

    def merge(self, other):
        for f in fields(self):
            setattr(self, f.name,
                    getattr(self, f.name) + getattr(other, f.name))
        return self

    def to_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}


def prefetch_hint(block, counters):
    """Announce an upcoming read of ``block``.

    CPython exposes no prefetch instruction. The hint only increments
    ``counters.hints`` and never reads ``block``; its position in the
    access stream is what the scheduler acts on.
    """
    counters.hints += 1


class ExecutionContext(object):
    """Strategy, counters and the owning task pool of one worker.

    Parameters
    ----------
    config: StrategyConfig, optional
        Execution configuration (default StrategyConfig()).
    counters: AccessCounters, optional
        Counter sink; a fresh one is created when omitted.
    """

    def __init__(self, config=None, counters=None):
        self.config = config or StrategyConfig()
        self.counters = counters or AccessCounters()
        self.pool = None

    def before_block(self, block, index):
        """Gate the read of one block; True means the caller must yield."""
        decision = gate(self.config, block.kind, index)
        if not decision.hint:
            return False
        if self.config.software_prefetch:
            prefetch_hint(block, self.counters)
        return self.should_yield()

    def should_yield(self):
        pool = self.pool
        if pool is not None and pool.trimmed and pool.remain_num <= 1:
            self.counters.trimmed += 1
            return False
        self.counters.yields += 1
        return True


class CounterScope(object):
    """Collects the counters of every partitioned run inside a
    ``counter_scope`` block."""

    def __init__(self):
        self.counters = AccessCounters()
        self.resumes = 0
        self.rounds = 0
        self.runs = 0

    def record(self, counters, scheduler_stats):
        self.counters.merge(counters)
        self.resumes += scheduler_stats.resumes
        self.rounds += scheduler_stats.rounds
        self.runs += 1

    def to_dict(self):
        values = self.counters.to_dict()
        values.update(resumes=self.resumes, rounds=self.rounds,
                      runs=self.runs)
        return values


_ACTIVE_SCOPE = ContextVar('cbgraph_counter_scope', default=None)


@contextmanager
def counter_scope():
    scope = CounterScope()
    token = _ACTIVE_SCOPE.set(scope)
    try:
        yield scope
    finally:
        _ACTIVE_SCOPE.reset(token)


def record_run(counters, scheduler_stats):
    scope = _ACTIVE_SCOPE.get()
    if scope is not None:
        scope.record(counters, scheduler_stats)
