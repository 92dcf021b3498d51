from cbgraph.access.task import SuspendableTask
from cbgraph.access.context import ExecutionContext
from cbgraph.access.context import AccessCounters
from cbgraph.access.context import prefetch_hint
from cbgraph.access.operations import SubChain
from cbgraph.access.operations import get_neighbors_vertex
from cbgraph.access.operations import get_neighbors_chain
from cbgraph.access.operations import find_neighbor
from cbgraph.access.operations import scan_vertices
from cbgraph.access.operations import vertex_scan_steps
from cbgraph.access.operations import chain_scan_steps
from cbgraph.access.operations import find_neighbor_steps
from cbgraph.access.context import CounterScope
from cbgraph.access.context import counter_scope
