from cbgraph.bench.load import load_graph
from cbgraph.bench.load import LoadStats
from cbgraph.bench.report import RunReport
from cbgraph.bench.report import graph_checksum
from cbgraph.bench.report import output_digest
from cbgraph.bench.counters import counter_capture
from cbgraph.bench.update_stream import generate_update_stream
from cbgraph.bench.update_stream import update_stream_driver
from cbgraph.bench.workloads import run_workload
from cbgraph.bench.workloads import WORKLOADS
from cbgraph.bench.sweep import sweep
