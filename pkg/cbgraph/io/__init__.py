from cbgraph.io.io_graph import load_edge_list
from cbgraph.io.io_graph import save_edge_list
from cbgraph.io.io_stream import load_update_stream
from cbgraph.io.io_stream import save_update_stream
from cbgraph.io.io_report import save_reports
from cbgraph.io.io_report import load_reports
from cbgraph.io.io_report import save_summary
from cbgraph.io.io_probe import load_probe
from cbgraph.io.io_probe import save_probe
