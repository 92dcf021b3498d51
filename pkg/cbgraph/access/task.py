"""Suspendable tasks built on plain Python generators.

A task is resumed with :meth:`SuspendableTask.resume`; the generator runs
until its next ``yield`` (a suspension point) or until it returns, in which
case the return value becomes :attr:`SuspendableTask.result`.
"""


class SuspendableTask(object):

    __slots__ = ('name', 'done', 'result', 'resumes', 'suspensions',
                 '_steps')

    def __init__(self, steps, name=None):
        self.name = name
        self.done = False
        self.result = None
        self.resumes = 0
        self.suspensions = 0
        self._steps = steps

    def resume(self):
        """Run to the next suspension point.

        Returns
        ----------
        bool
            True while the task is suspended, False once it has finished.
            Resuming a finished task is a no-op.
        """
        if self.done:
            return False
        self.resumes += 1
        try:
            next(self._steps)
        except StopIteration as stop:
            self.done = True
            self.result = stop.value
            self._steps = None
            return False
        self.suspensions += 1
        return True

    def run(self):
        """Drive the task to completion and return its result."""
        while self.resume():
            pass
        return self.result

    def destroy(self):
        if self._steps is not None:
            self._steps.close()
            self._steps = None
        self.done = True

    def __repr__(self):
        state = 'done' if self.done else 'suspended'
        return '<SuspendableTask {0} {1} resumes={2}>'.format(
            self.name or '', state, self.resumes)
