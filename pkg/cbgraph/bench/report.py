import hashlib
import struct
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np


@dataclass
class RunReport:
    workload: str
    mode: str
    config: dict
    threads: int = 1
    batch_size: Optional[int] = None
    dataset: Optional[str] = None
    wall_time: float = 0.0
    throughput: float = 0.0
    units: str = 'edges/s'
    counters: dict = field(default_factory=dict)
    hardware: dict = field(default_factory=dict)
    output_digest: Optional[str] = None
    status: str = 'ok'
    error: Optional[str] = None
    timestamp: float = field(default_factory=time.time)

    def to_dict(self):
        return dict(self.__dict__)


def output_digest(output):
    """sha256 of a workload output (array, number tuple or string)."""
    digest = hashlib.sha256()
    if isinstance(output, np.ndarray):
        digest.update(str(output.dtype).encode())
        digest.update(np.ascontiguousarray(output).tobytes())
    else:
        digest.update(repr(output).encode())
    return digest.hexdigest()


def graph_checksum(graph):
    """Order-independent checksum of the live edges.

    Sums a 64-bit blake2b hash of every ``(src, dst, weight)`` triple
    modulo 2**64, so the result depends only on the edge set.
    """
    total = 0
    for src, dst, prop in graph.iter_edges():
        blob = struct.pack('<qqd', src, dst, prop)
        total += int.from_bytes(
            hashlib.blake2b(blob, digest_size=8).digest(), 'little')
    return '{0:016x}'.format(total % (1 << 64))
