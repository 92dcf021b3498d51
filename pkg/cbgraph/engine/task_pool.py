from dataclasses import dataclass, fields

from cbgraph.access.task import SuspendableTask
from cbgraph.errors import InvalidTaskCount


class TaskPool(object):
    """Tasks interleaved by one worker plus the count still running."""

    def __init__(self, tasks=()):
        self.tasks = list(tasks)
        self.remain_num = len(self.tasks)
        self.trimmed = False

    def __len__(self):
        return len(self.tasks)

    def results(self):
        return [task.result for task in self.tasks]


@dataclass
class SchedulerStats:
    resumes: int = 0
    rounds: int = 0
    suspensions: int = 0
    tail_suspensions: int = 0

    def merge(self, other):
        self.resumes += other.resumes
        self.rounds = max(self.rounds, other.rounds)
        self.suspensions += other.suspensions
        self.tail_suspensions += other.tail_suspensions
        return self

    def to_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}


def build_pool(m, factory, ctx=None):
    """Create ``m`` tasks with ``factory(i)`` for i in 0..m-1.

    The factory may return a SuspendableTask or a bare generator. When an
    execution context is given it is attached to the pool, so gated
    suspensions can observe ``remain_num``.
    """
    if m < 1:
        raise InvalidTaskCount(m)
    pool = TaskPool()
    if ctx is not None:
        ctx.pool = pool
    for i in range(m):
        task = factory(i)
        if not isinstance(task, SuspendableTask):
            task = SuspendableTask(task, name=str(i))
        pool.tasks.append(task)
    pool.remain_num = m
    return pool
