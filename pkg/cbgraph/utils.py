import os
import logging
import psutil
from cbgraph.global_settings import DEFAULT_LLC_SIZE, DEFAULT_PROBE_FILE

logger = logging.getLogger(__name__)


def _output_dir_4saving(output_dir=None, rootfile=None):
    if output_dir is None or output_dir == '':
        if rootfile is None:
            output_dir = os.getcwd()
        else:
            # rootfile may sit in the current directory
            output_dir = os.path.dirname(rootfile) or os.getcwd()

    if not os.path.exists(output_dir):
        os.makedirs(output_dir)

    if not output_dir[-1] == os.path.sep:
        output_dir += os.path.sep

    if not os.access(output_dir, os.W_OK | os.X_OK):
        raise ValueError("Cannot write to {0}, please specify a different "
                         "output_dir. (Note that if you don't set output_dir "
                         "explicitly, it will be set to the directory of the "
                         "input file, if applicable, or to the current "
                         "working directory otherwise)".format(output_dir))

    logger.info("Outputs will be saved to %s", output_dir)
    return output_dir


def _fname_4saving(file_name=None, rootfile=None, suffix=None, ext=None,
                   module='output'):

    if file_name is None:
        if isinstance(rootfile, str):
            file_name = os.path.basename(rootfile)
            # never overwrite the input itself
            if suffix is None:
                suffix = 'out'
        else:
            file_name = module

    if len(file_name) <= 1:
        raise ValueError("Empty string for file_name. Check if your inputs "
                         "exist, or try to specify the file_name "
                         "parameter for saving.")

    split_name = file_name.split('.')
    if len(split_name) == 1:
        base = split_name[0]
    else:
        file_ext = split_name.pop(-1)
        if file_ext == 'gz':
            file_ext = split_name.pop(-1) + '.gz'
        base = '.'.join(split_name)
        if ext is None:
            ext = file_ext

    if ext is None:
        ext = 'json'

    if suffix is not None:
        return base + '_' + suffix + '.' + ext
    return base + '.' + ext


def _check_probe_file(probe_file):

    if probe_file is None:
        probe_file = DEFAULT_PROBE_FILE
    elif not os.path.isfile(probe_file):
        raise ValueError('The probe_file you have specified ({0}) '
                         'does not exist'.format(probe_file))
    return probe_file


def _check_available_memory():

    memory = psutil.virtual_memory()
    return {"total": int(memory.total), "available": int(memory.available)}


def _detect_llc_size(default=DEFAULT_LLC_SIZE):
    """Size in bytes of the largest cache reported by sysfs, or default."""
    cache_dir = '/sys/devices/system/cpu/cpu0/cache'
    sizes = []
    if os.path.isdir(cache_dir):
        for entry in sorted(os.listdir(cache_dir)):
            size_file = os.path.join(cache_dir, entry, 'size')
            if not os.path.isfile(size_file):
                continue
            with open(size_file) as fid:
                text = fid.read().strip()
            scale = {'K': 1024, 'M': 1024 ** 2, 'G': 1024 ** 3}.get(
                text[-1:].upper(), 1)
            digits = text.rstrip('KkMmGg')
            if digits.isdigit():
                sizes.append(int(digits) * scale)
    if not sizes:
        logger.debug("No cache sizes in sysfs, using %d bytes", default)
        return default
    return max(sizes)
