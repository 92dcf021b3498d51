import gzip
import io


def _open_text(filename, mode='rt'):
    if filename.endswith('.gz'):
        return gzip.open(filename, mode)
    return io.open(filename, mode)


def _parse_id(token):
    # only canonical decimals become ints, so '01' and '1' stay distinct
    try:
        value = int(token)
    except ValueError:
        return token
    return value if str(value) == token else token


def _split(line):
    return line.replace(',', ' ').split()
