""" lcstorsion utility functions

..
   This program is free software: you can redistribute it
   and/or modify it under the terms of the GNU General Public License as
   published by the Free Software Foundation, either version 3 of the
   License, or (at your option) any later version. This program is
   distributed in the hope that it will be useful, but WITHOUT ANY
   WARRANTY; without even the implied warranty of MERCHANTABILITY or
   FITNESS FOR A PARTICULAR PURPOSE.  See the GNU General Public License
   for more details.  You should have received a copy of the GNU General
   Public License along with this program.  If not, see
   <http://www.gnu.org/licenses/>.
"""

import logging
import threading
import traceback
from queue import Queue, Empty

log = logging.getLogger('lcstorsion.utils')


def permutation_sign(seq):
    """
    Sign of the permutation that sorts `seq` (entries distinct).

    >>> permutation_sign((1, 2, 3)), permutation_sign((2, 1, 3)), permutation_sign((2, 3, 1))
    (1, -1, 1)
    """
    seq = list(seq)
    if len(set(seq)) != len(seq):
        raise ValueError('Not a permutation: {0}'.format(seq))
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


class _Task(object):

    def __init__(self, fun, arg):
        self.fun = fun
        self.arg = arg
        self.result = None
        self.error = None
        self.done = threading.Event()

    def __call__(self):
        try:
            self.result = self.fun(self.arg)
        except Exception as e:
            self.error = e
            log.warning('error while processing task %r: %s', self.arg, e)
            log.debug(traceback.format_exc())
        finally:
            self.done.set()

    def __repr__(self):
        return '<task {0!r}>'.format(self.arg)


class WorkerPool(object):
    "A pool of threads"

    def __init__(self, num=1):
        "initialize with given number of threads; num=1 runs tasks inline"
        self.num = max(1, int(num))
        self._stop = False
        self.queue = Queue()
        self.threads = []
        if self.num > 1:
            self.threads = [threading.Thread(target=self._worker_fun) for i in range(self.num)]
            for t in self.threads:
                t.daemon = True
                t.start()

    def _worker_fun(self):
        "function to be run by threads in the pool"
        while not self._stop:
            try:
                task = self.queue.get(timeout=2)
            except Empty:
                task = None
            if task:
                task()
                self.queue.task_done()

    def schedule(self, fun, arg):
        "schedule fun(arg); returns the task, whose `done` event is set when finished"
        task = _Task(fun, arg)
        if self.threads:
            self.queue.put(task)
        else:
            task()
        return task

    def map_ordered(self, fun, items):
        """
        Apply fun to every item; returns a list of (result, error) pairs in
        input order.  An exception in fun is recorded, never raised.
        """
        tasks = [self.schedule(fun, item) for item in items]
        for task in tasks:
            task.done.wait()
        return [(task.result, task.error) for task in tasks]

    def stop(self, wait=False):
        """ask threads to stop, but do not wait for them to terminate,
        unless [wait] is True."""
        self._stop = True
        if wait:
            for t in self.threads:
                t.join()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.stop()
        return False
