import cbgraph.cblist
import cbgraph.access
import cbgraph.adapt
import cbgraph.engine
import cbgraph.algos
import cbgraph.io
import cbgraph.data
import cbgraph.bench
from cbgraph.cblist import CBList
from cbgraph.adapt import StrategyConfig
from cbgraph.global_settings import CACHE_LINE_SIZE, DATA_DIR

__version__ = '0.1.0'

__all__ = ['cblist', 'access', 'adapt', 'engine', 'algos', 'io', 'data',
           'bench', 'CBList', 'StrategyConfig', '__version__']
