import json
import logging
import os

logger = logging.getLogger(__name__)


def load_probe(filename):
    '''
    Load a ProbeResult saved with save_probe

    Parameters
    ----------
    filename: str
        JSON probe file.

    Returns
    ----------
    ProbeResult
    '''
    from cbgraph.adapt.probe import ProbeResult

    if not os.path.isfile(filename):
        raise ValueError('The probe file you have specified ({0}) does not '
                         'exist'.format(filename))
    with open(filename) as fid:
        return ProbeResult.from_dict(json.load(fid))


def save_probe(filename, probe):
    logger.info("\nSaving %s", filename)
    directory = os.path.dirname(filename)
    if directory and not os.path.isdir(directory):
        os.makedirs(directory)
    with open(filename, 'w') as fid:
        json.dump(probe.to_dict(), fid, indent=2, sort_keys=True)
