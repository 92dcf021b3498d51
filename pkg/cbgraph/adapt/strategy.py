import dataclasses
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional

from cbgraph.errors import InvalidStrategy, InvalidTaskCount
from cbgraph.global_settings import (DEFAULT_DENSE_THRESHOLD,
                                     DEFAULT_HOTNESS_PREFIX,
                                     DEFAULT_TASKS_PER_THREAD)

PARTITIONERS = ('gtchain', 'vertex_range')
SCHEDULERS = ('polling', 'trimmed')
LAYOUTS = ('sequential', 'chain', 'tree')


class PrefetchStrategy(str, Enum):
    ALL_HARD = 'all_hard'
    ALL_SOFT = 'all_soft'
    HYBRID_BLOCK_SIZE = 'hybrid_block_size'
    HYBRID_HOTNESS = 'hybrid_hotness'


@dataclass
class CostModelParams:
    """Costs in nanoseconds and hardware-prefetch hit rates per layout.

    A software hint is redundant for a layout when the exposed miss cost
    ``c_m * (1 - p_h)`` is below the cost of one suspend/resume pair.
    """
    c_m: float = 100.0
    c_coro: float = 50.0
    p_h: Dict[str, float] = field(default_factory=lambda: {
        'sequential': 0.9, 'chain': 0.5, 'tree': 0.0})

    def exposed_miss(self, layout):
        return self.c_m * (1.0 - self.p_h.get(layout, 0.0))

    def redundant(self, layout):
        return self.exposed_miss(layout) < self.c_coro

    def to_dict(self):
        return dataclasses.asdict(self)


@dataclass
class StrategyConfig:
    """How a workload is executed.

    Parameters
    ----------
    prefetch_strategy: PrefetchStrategy
        Which blocks get a software hint paired with a suspension.
    hotness_prefix: int
        Blocks at the head of each traversal list treated as cold under
        ``hybrid_hotness``.
    tasks_per_thread: int
        Suspendable tasks interleaved by each worker (m).
    partitioner: {'gtchain', 'vertex_range'}
        How scan work is split into tasks.
    scheduler: {'polling', 'trimmed'}
        Round-robin polling, or polling that stops suspending once a single
        task remains.
    dense_threshold: float
        Active fraction at or above which edge processing scans the
        whole chain.
    software_prefetch: bool
        Issue hints at gated blocks. With False the gated suspensions
        remain but no hint is issued (interleaving alone).
    threads: int
        Worker threads.
    cost: CostModelParams, optional
        Cost model the configuration was derived from.
    """
    prefetch_strategy: PrefetchStrategy = PrefetchStrategy.ALL_SOFT
    hotness_prefix: int = DEFAULT_HOTNESS_PREFIX
    tasks_per_thread: int = DEFAULT_TASKS_PER_THREAD
    partitioner: str = 'gtchain'
    scheduler: str = 'polling'
    dense_threshold: float = DEFAULT_DENSE_THRESHOLD
    software_prefetch: bool = True
    threads: int = 1
    cost: Optional[CostModelParams] = None

    def __post_init__(self):
        try:
            self.prefetch_strategy = PrefetchStrategy(self.prefetch_strategy)
        except ValueError:
            raise InvalidStrategy("Unknown prefetch strategy {0!r}, choose "
                                  "from {1}".format(
                                      self.prefetch_strategy,
                                      [s.value for s in PrefetchStrategy])
                                  ) from None
        if isinstance(self.cost, dict):
            self.cost = CostModelParams(**self.cost)

    def validate(self):
        if self.tasks_per_thread < 1:
            raise InvalidTaskCount(self.tasks_per_thread)
        if self.threads < 1:
            raise ValueError("threads must be at least 1, got {0}".format(
                self.threads))
        if self.partitioner not in PARTITIONERS:
            raise InvalidStrategy("partitioner must be one of {0}, got "
                                  "{1!r}".format(PARTITIONERS,
                                                 self.partitioner))
        if self.scheduler not in SCHEDULERS:
            raise InvalidStrategy("scheduler must be one of {0}, got "
                                  "{1!r}".format(SCHEDULERS, self.scheduler))
        if not 0.0 < self.dense_threshold <= 1.0:
            raise InvalidStrategy("dense_threshold must lie in (0, 1], got "
                                  "{0}".format(self.dense_threshold))
        if self.hotness_prefix < 0:
            raise InvalidStrategy("hotness_prefix must be non-negative")
        return self

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)

    def to_dict(self):
        values = dataclasses.asdict(self)
        values['prefetch_strategy'] = self.prefetch_strategy.value
        return values

    @classmethod
    def from_dict(cls, values):
        known = {f.name for f in dataclasses.fields(cls)}
        return cls(**{k: v for k, v in values.items() if k in known})


# execution modes compared in benchmark sweeps
MODES = {
    'SE': dict(prefetch_strategy=PrefetchStrategy.ALL_HARD,
               tasks_per_thread=1, scheduler='polling'),
    'IE': dict(prefetch_strategy=PrefetchStrategy.ALL_SOFT,
               software_prefetch=False),
    'IE+SP': dict(prefetch_strategy=PrefetchStrategy.ALL_SOFT),
    'HybridI': dict(prefetch_strategy=PrefetchStrategy.HYBRID_BLOCK_SIZE),
    'HybridII': dict(prefetch_strategy=PrefetchStrategy.HYBRID_HOTNESS),
}


def mode_config(name, base=None, **overrides):
    """StrategyConfig for a named execution mode or prefetch strategy.

    ``name`` is one of the mode names (SE, IE, IE+SP, HybridI, HybridII)
    or a prefetch strategy value such as ``all_soft``.
    """
    base = base or StrategyConfig()
    if name in MODES:
        settings = dict(MODES[name])
        if name != 'SE':
            settings.setdefault('software_prefetch', True)
    else:
        settings = {'prefetch_strategy': name}
    settings.update(overrides)
    if name == 'SE':
        settings['tasks_per_thread'] = 1
    return base.replace(**settings)


def mode_name(config):
    strategy = config.prefetch_strategy
    if strategy is PrefetchStrategy.ALL_HARD:
        return 'SE' if config.tasks_per_thread == 1 else 'all_hard'
    if strategy is PrefetchStrategy.ALL_SOFT:
        return 'IE+SP' if config.software_prefetch else 'IE'
    if strategy is PrefetchStrategy.HYBRID_BLOCK_SIZE:
        return 'HybridI'
    return 'HybridII'
