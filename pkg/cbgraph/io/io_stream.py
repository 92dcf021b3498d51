import logging

from cbgraph.engine.batch import (DELETE_EDGE, DELETE_VERTEX, INSERT_EDGE,
                                  INSERT_VERTEX, UPDATE_EDGE, UPDATE_VERTEX,
                                  UpdateOp)
from cbgraph.errors import ParseError
from cbgraph.io._text import _open_text, _parse_id

logger = logging.getLogger(__name__)

# op name -> number of id arguments, whether a float property may follow
_EDGE_ARITY = {INSERT_EDGE: (2, 3), DELETE_EDGE: (2, 2),
               UPDATE_EDGE: (3, 3)}


def load_update_stream(filename):
    '''
    Read a timestamped update stream

    Parameters
    ----------
    filename: str
        Text file with one ``timestamp op args...`` line per update:

        * ``insert_edge src dst [prop]``
        * ``delete_edge src dst``
        * ``update_edge src dst prop``
        * ``insert_vertex v [key=value ...]``
        * ``delete_vertex v``
        * ``update_vertex v key=value ...``

        '#' starts a comment line.

    Returns
    ----------
    list of UpdateOp
        In file order.
    '''
    ops = []
    with _open_text(filename) as fid:
        for number, line in enumerate(fid, 1):
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            fields = line.split()
            if len(fields) < 3:
                raise ParseError(number, "expected 'timestamp op args', got "
                                 "{0!r}".format(line))
            try:
                timestamp = float(fields[0])
            except ValueError:
                raise ParseError(number, "bad timestamp {0!r}".format(
                    fields[0])) from None
            kind, args = fields[1], fields[2:]
            ops.append(_parse_op(number, timestamp, kind, args))
    return ops


def _parse_op(number, timestamp, kind, args):
    if kind in _EDGE_ARITY:
        low, high = _EDGE_ARITY[kind]
        if not low <= len(args) <= high:
            raise ParseError(number, "{0} takes {1} to {2} arguments".format(
                kind, low, high))
        prop = None
        if len(args) == 3:
            try:
                prop = float(args[2])
            except ValueError:
                raise ParseError(number, "bad property {0!r}".format(
                    args[2])) from None
        return UpdateOp(kind, _parse_id(args[0]), _parse_id(args[1]), prop,
                        timestamp=timestamp)

    if kind in (INSERT_VERTEX, DELETE_VERTEX, UPDATE_VERTEX):
        props = {}
        for item in args[1:]:
            key, sep, value = item.partition('=')
            if not sep:
                raise ParseError(number, "expected key=value, got "
                                 "{0!r}".format(item))
            try:
                props[key] = float(value)
            except ValueError:
                props[key] = value
        if kind == DELETE_VERTEX and props:
            raise ParseError(number, "delete_vertex takes one argument")
        return UpdateOp(kind, _parse_id(args[0]),
                        props=props if kind != DELETE_VERTEX else None,
                        timestamp=timestamp)

    raise ParseError(number, "unknown op {0!r}".format(kind))


def save_update_stream(filename, ops):
    '''
    Write update ops in the format read by load_update_stream

    Ops without a timestamp are numbered by position.
    '''
    logger.info("\nSaving %s", filename)
    with _open_text(filename, 'wt') as fid:
        for position, op in enumerate(ops):
            timestamp = position if op.timestamp is None else op.timestamp
            fields = [repr(float(timestamp)), op.kind, str(op.src)]
            if op.kind in _EDGE_ARITY:
                fields.append(str(op.dst))
                if op.prop is not None:
                    fields.append(repr(float(op.prop)))
            elif op.props:
                fields.extend('{0}={1}'.format(k, v)
                              for k, v in sorted(op.props.items()))
            fid.write(' '.join(fields) + '\n')
