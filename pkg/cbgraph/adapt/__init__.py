from cbgraph.adapt.strategy import PrefetchStrategy
from cbgraph.adapt.strategy import StrategyConfig
from cbgraph.adapt.strategy import CostModelParams
from cbgraph.adapt.strategy import mode_config
from cbgraph.adapt.strategy import mode_name
from cbgraph.adapt.strategy import MODES
from cbgraph.adapt.gate import GateDecision
from cbgraph.adapt.gate import gate
from cbgraph.adapt.tuner import tune
from cbgraph.adapt.tuner import choose_strategy
from cbgraph.adapt.tuner import TASK_CLASSES
from cbgraph.adapt.probe import ProbeResult
from cbgraph.adapt.probe import probe_config
