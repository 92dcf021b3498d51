"""Exceptions raised by cbgraph.

Lookup and argument problems derive from ValueError so callers that only
guard against bad input keep working.
"""


class CBGraphError(Exception):
    """Base class of every cbgraph error."""


class DuplicateExternalId(CBGraphError, ValueError):
    def __init__(self, external_id):
        self.external_id = external_id
        super().__init__("The external id {0!r} is already mapped to a live "
                         "vertex".format(external_id))


class UnknownVertex(CBGraphError, ValueError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__("The vertex {0!r} does not exist or has been "
                         "deleted".format(vertex))


class InvalidTaskCount(CBGraphError, ValueError):
    def __init__(self, count):
        self.count = count
        super().__init__("The number of tasks must be at least 1, "
                         "got {0}".format(count))


class InvalidSubChain(CBGraphError, ValueError):
    pass


class InvalidStrategy(CBGraphError, ValueError):
    pass


class NegativeWeight(CBGraphError, ValueError):
    def __init__(self, src, dst, weight):
        self.src, self.dst, self.weight = src, dst, weight
        super().__init__("Negative weight {0} on edge {1!r} -> {2!r}; "
                         "shortest paths require non-negative "
                         "weights".format(weight, src, dst))


class ParseError(CBGraphError, ValueError):
    def __init__(self, line_number, message):
        self.line_number = line_number
        super().__init__("line {0}: {1}".format(line_number, message))


class TaskPanicked(CBGraphError, RuntimeError):
    """A suspendable task raised; the original error is the __cause__."""

    def __init__(self, task_index, error):
        self.task_index = task_index
        self.error = error
        super().__init__("Task {0} failed: {1!r}".format(task_index, error))


class BatchOpError(CBGraphError, RuntimeError):
    def __init__(self, op_index, error):
        self.op_index = op_index
        self.error = error
        super().__init__("Update op {0} failed: {1}".format(op_index, error))


class InsufficientMemory(CBGraphError, MemoryError):
    def __init__(self, needed, available):
        self.needed, self.available = needed, available
        super().__init__("The probe needs {0} bytes but only {1} bytes are "
                         "available; pass a smaller llc_size".format(
                             needed, available))
