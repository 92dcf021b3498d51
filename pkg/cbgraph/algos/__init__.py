from cbgraph.engine.frontier import Frontier
from cbgraph.algos.bfs import bfs
from cbgraph.algos.sssp import sssp
from cbgraph.algos.pagerank import pagerank
from cbgraph.algos.connected_components import connected_components
from cbgraph.algos.label_propagation import label_propagation
from cbgraph.algos.edge_query import edge_query_workload
from cbgraph.algos.edge_query import sample_edge_queries
