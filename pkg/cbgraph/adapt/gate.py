from typing import NamedTuple

from cbgraph.adapt.strategy import PrefetchStrategy
from cbgraph.cblist.blocks import CHUNK


class GateDecision(NamedTuple):
    hint: bool
    suspend: bool


_BOTH = GateDecision(True, True)
_NEITHER = GateDecision(False, False)


def gate(config, block_kind, chain_index):
    """Decide whether the access to a block is hinted and suspended.

    Parameters
    ----------
    config: StrategyConfig
        Supplies the prefetch strategy and hotness prefix.
    block_kind: {'chunk', 'leaf', 'internal'}
        Kind of the block about to be read.
    chain_index: int
        Position of the block within the current traversal list, or the
        depth of the node within a tree descent.

    Returns
    ----------
    GateDecision
        ``hint`` and ``suspend`` are always equal: a hint is only worth
        issuing when the task then steps aside.
    """
    strategy = config.prefetch_strategy
    if strategy is PrefetchStrategy.ALL_SOFT:
        return _BOTH
    if strategy is PrefetchStrategy.ALL_HARD:
        return _NEITHER
    if strategy is PrefetchStrategy.HYBRID_BLOCK_SIZE:
        return _NEITHER if block_kind == CHUNK else _BOTH
    return _BOTH if chain_index < config.hotness_prefix else _NEITHER
