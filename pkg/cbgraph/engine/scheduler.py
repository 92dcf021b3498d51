"""Round-robin schedulers over a TaskPool.

Both schedulers resume every unfinished task once per round and destroy a
task as soon as it finishes. The trimmed variant additionally flags the
pool so that gated suspensions are skipped once a single task remains:
with nobody to switch to, a suspension only costs a resume.
"""
import logging

from cbgraph.engine.task_pool import SchedulerStats
from cbgraph.errors import TaskPanicked

logger = logging.getLogger(__name__)


def _run(pool):
    stats = SchedulerStats()
    tasks = pool.tasks
    survivor, baseline = None, 0
    if pool.remain_num == 1:
        survivor = next(task for task in tasks if not task.done)
        baseline = survivor.suspensions

    while pool.remain_num > 0:
        stats.rounds += 1
        for index, task in enumerate(tasks):
            if task.done:
                continue
            stats.resumes += 1
            try:
                task.resume()
            except Exception as error:
                for other in tasks:
                    other.destroy()
                pool.remain_num = 0
                raise TaskPanicked(index, error) from error
            if task.done:
                task.destroy()
                pool.remain_num -= 1
                if pool.remain_num == 1:
                    survivor = next(t for t in tasks if not t.done)
                    baseline = survivor.suspensions

    stats.suspensions = sum(task.suspensions for task in tasks)
    if survivor is not None:
        stats.tail_suspensions = survivor.suspensions - baseline
    return stats


def polling_scheduler(pool):
    """Resume tasks round-robin until all have finished.

    Returns
    ----------
    SchedulerStats
        A task that suspends k times is resumed k + 1 times.
    """
    pool.trimmed = False
    return _run(pool)


def trimmed_polling_scheduler(pool):
    """Polling scheduler whose last surviving task never suspends."""
    pool.trimmed = True
    try:
        return _run(pool)
    finally:
        pool.trimmed = False


SCHEDULERS = {'polling': polling_scheduler,
              'trimmed': trimmed_polling_scheduler}
