from cbgraph.engine.task_pool import TaskPool
from cbgraph.engine.task_pool import SchedulerStats
from cbgraph.engine.task_pool import build_pool
from cbgraph.engine.scheduler import polling_scheduler
from cbgraph.engine.scheduler import trimmed_polling_scheduler
from cbgraph.engine.partition import partition_gtchain
from cbgraph.engine.partition import partition_vertex_table
from cbgraph.engine.executor import run_partitioned
from cbgraph.engine.frontier import Frontier
from cbgraph.engine.process import Accumulator
from cbgraph.engine.process import process_vertex
from cbgraph.engine.process import process_edge
from cbgraph.engine.batch import UpdateOp
from cbgraph.engine.batch import UpdateStats
from cbgraph.engine.batch import apply_update
from cbgraph.engine.batch import group_by_source
from cbgraph.engine.batch import batch_update
