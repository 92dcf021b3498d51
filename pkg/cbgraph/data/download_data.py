import logging
import os
from urllib.request import urlretrieve

from cbgraph.global_settings import DATA_DIR

logger = logging.getLogger(__name__)

SNAP = 'https://snap.stanford.edu/data/'
SNAP_GRAPHS = {
    'livejournal': SNAP + 'soc-LiveJournal1.txt.gz',
    'orkut': SNAP + 'bigdata/communities/com-orkut.ungraph.txt.gz',
    'friendster': SNAP + 'bigdata/communities/com-friendster.ungraph.txt.gz',
    'pokec': SNAP + 'soc-pokec-relationships.txt.gz',
}


def download_snap_graph(name='livejournal', data_dir=None, overwrite=False):
    """
    Downloads a public social-network edge list from the Stanford Network
    Analysis Project

    Parameters
    ----------
    name: {'livejournal', 'orkut', 'friendster', 'pokec'}
        Which graph to download (default is 'livejournal')
    data_dir: str, optional
        Writeable directory in which downloaded files should be stored. A
        subdirectory called 'snap' will be created in this location
        (default is ~/cbgraph_data)
    overwrite: bool
        Overwrite existing files in the same exact path (default is False)

    Returns
    ----------
    dict
        * edges: path to the gzipped edge list, readable by
          :func:`cbgraph.io.load_edge_list`

    Notes
    ----------
    The files carry no weights; load_graph draws random ones. The full
    collection is listed at https://snap.stanford.edu/data/
    """
    if name not in SNAP_GRAPHS:
        raise ValueError("Unknown graph {0!r}, choose from {1}".format(
            name, sorted(SNAP_GRAPHS)))
    data_dir = os.path.join(data_dir or DATA_DIR, 'snap')
    if not os.path.isdir(data_dir):
        os.makedirs(data_dir)

    source = SNAP_GRAPHS[name]
    target = os.path.join(data_dir, os.path.basename(source))
    if os.path.isfile(target) and overwrite is False:
        logger.info("The file %s exists and overwrite was set to False "
                    "-- not downloading.", target)
    else:
        logger.info("\nDownloading to %s", target)
        urlretrieve(source, target)
    return {'edges': target}
