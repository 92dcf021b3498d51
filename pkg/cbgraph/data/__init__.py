from cbgraph.data.download_data import download_snap_graph
from cbgraph.data.synthetic import random_edges
from cbgraph.data.synthetic import make_random_graph
