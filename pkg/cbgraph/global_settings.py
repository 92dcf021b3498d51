import os

__dir__ = os.path.abspath(os.path.dirname(__file__))

# storage geometry, in bytes / cache lines
CACHE_LINE_SIZE = 64
CHUNK_CACHE_LINES = 4
NODE_CACHE_LINES = 4
MIN_FANOUT = 4
DEFAULT_PROPERTY_MODE = 'aoe'

# execution defaults
DEFAULT_TASKS_PER_THREAD = 8
DEFAULT_DENSE_THRESHOLD = 0.05
DEFAULT_HOTNESS_PREFIX = 4
DEFAULT_DAMPING = 0.85
DEFAULT_QUERY_FRACTION = 0.05
WEIGHT_RANGE = (1, 100)

# probe
DEFAULT_LLC_SIZE = 32 * 1024 * 1024
PROBE_WORKING_SET_FACTOR = 4
DEFAULT_PROBE_SWEEP = (1, 2, 4, 8, 16, 32)
DEFAULT_PROBE_TRIALS = 3

DATA_DIR = os.path.join(os.path.expanduser('~'), 'cbgraph_data')
DEFAULT_PROBE_FILE = os.path.join(os.path.expanduser('~'), '.cbgraph',
                                  'probe.json')
