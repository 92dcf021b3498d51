import logging

import numpy as np

from cbgraph.errors import NegativeWeight, ParseError
from cbgraph.io._text import _open_text, _parse_id, _split

logger = logging.getLogger(__name__)


def load_edge_list(filename, allow_negative=False):
    '''
    Read a directed edge list

    Parameters
    ----------
    filename: str
        Text file with one ``src dst [weight]`` edge per line, separated by
        whitespace or commas. Lines starting with '#' or '%' are comments.
        Files ending in '.gz' are decompressed on the fly. Ids written as
        canonical decimals are read as ints, any other id stays a string.
    allow_negative: bool
        Accept negative weights (default is False)

    Returns
    ----------
    dict
        * vertices: external ids in order of first appearance
        * edges: list of ``(src, dst, weight)``; weight is None when the
          file has no third column on that line

    Raises
    ----------
    ParseError
        With the 1-based line number of the first malformed line.
    NegativeWeight
        For a negative weight unless ``allow_negative`` is set.
    '''
    vertices, seen, edges = [], set(), []
    with _open_text(filename) as fid:
        for number, line in enumerate(fid, 1):
            line = line.strip()
            if not line or line[0] in '#%':
                continue
            fields = _split(line)
            if len(fields) not in (2, 3):
                raise ParseError(number, "expected 'src dst [weight]', got "
                                 "{0!r}".format(line))
            src, dst = _parse_id(fields[0]), _parse_id(fields[1])
            weight = None
            if len(fields) == 3:
                try:
                    weight = float(fields[2])
                except ValueError:
                    raise ParseError(number, "weight {0!r} is not a "
                                     "number".format(fields[2])) from None
                if not np.isfinite(weight):
                    raise ParseError(number, "weight must be finite")
                if weight < 0 and not allow_negative:
                    raise NegativeWeight(src, dst, weight)
            for vertex in (src, dst):
                if vertex not in seen:
                    seen.add(vertex)
                    vertices.append(vertex)
            edges.append((src, dst, weight))
    logger.debug("Read %d edges over %d vertices from %s", len(edges),
                 len(vertices), filename)
    return {'vertices': vertices, 'edges': edges}


def save_edge_list(filename, graph):
    '''
    Write the live edges of a graph as ``src dst weight`` lines

    Parameters
    ----------
    filename: str
        Output path; '.gz' compresses.
    graph: CBList
        Graph to write, using external vertex ids, in GTChain order.
    '''
    logger.info("\nSaving %s", filename)
    external = graph.external_id
    with _open_text(filename, 'wt') as fid:
        for src, dst, prop in graph.iter_edges():
            fid.write('{0} {1} {2!r}\n'.format(external(src), external(dst),
                                               prop))
