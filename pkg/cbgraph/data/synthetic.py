import logging
import os

import numpy as np

from cbgraph.global_settings import WEIGHT_RANGE
from cbgraph.utils import _fname_4saving, _output_dir_4saving

logger = logging.getLogger(__name__)


def random_edges(n_vertices, n_edges, seed=0, skew=None, weights=True):
    """
    Draw distinct directed edges without self loops

    Parameters
    ----------
    n_vertices: int
        Vertices are numbered 0..n_vertices-1.
    n_edges: int
        Number of distinct edges wanted; capped at n(n-1).
    seed: int
        Random seed.
    skew: float, optional
        Zipf exponent (> 1) for the source distribution, which gives the
        heavy-tailed out-degrees of social graphs; uniform when None.
    weights: bool
        Draw integer weights in WEIGHT_RANGE (default True)

    Returns
    ----------
    list
        ``(src, dst, weight)`` triples; weight is None without weights.
    """
    if n_vertices < 2:
        return []
    rng = np.random.default_rng(seed)
    n_edges = min(n_edges, n_vertices * (n_vertices - 1))
    seen, edges = set(), []
    while len(edges) < n_edges:
        batch = max(n_edges - len(edges), 16)
        if skew is None:
            src = rng.integers(0, n_vertices, size=batch)
        else:
            src = (rng.zipf(skew, size=batch) - 1) % n_vertices
        dst = rng.integers(0, n_vertices, size=batch)
        if weights:
            weight = rng.integers(WEIGHT_RANGE[0], WEIGHT_RANGE[1] + 1,
                                  size=batch)
        for i in range(batch):
            pair = (int(src[i]), int(dst[i]))
            if pair[0] == pair[1] or pair in seen:
                continue
            seen.add(pair)
            edges.append(pair + (float(weight[i]) if weights else None,))
            if len(edges) == n_edges:
                break
    return edges


def make_random_graph(n_vertices, n_edges, seed=0, skew=None,
                      output_dir=None, file_name=None, overwrite=False):
    """
    Write a random edge list for benchmarks

    Returns
    ----------
    dict
        * edges: path to the ``src dst weight`` file
    """
    output_dir = _output_dir_4saving(output_dir)
    edge_file = os.path.join(output_dir, _fname_4saving(
        file_name=file_name,
        module='random_{0}_{1}_s{2}'.format(n_vertices, n_edges, seed),
        ext='txt'))
    if os.path.isfile(edge_file) and overwrite is False:
        logger.info("The file %s exists and overwrite was set to False "
                    "-- not generating.", edge_file)
        return {'edges': edge_file}

    logger.info("\nSaving %s", edge_file)
    with open(edge_file, 'w') as fid:
        for src, dst, weight in random_edges(n_vertices, n_edges, seed, skew):
            fid.write('{0} {1} {2:g}\n'.format(src, dst, weight))
    return {'edges': edge_file}
