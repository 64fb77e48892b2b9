# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
"""
Worker threads for operating points and check modules.

A _Thread keeps what its target returned (.ret) or raised (.exc), so one
failing point never takes the others down with it.
"""
import logging
import threading
import time

logger = logging.getLogger(__name__)


class _Thread(threading.Thread):
    def __init__(self, target, args=(), kwargs=None, name=None):
        super(_Thread, self).__init__(name=name, daemon=True)
        self.job = (target, tuple(args), dict(kwargs or {}))
        self.ret = None
        self.exc = None
        # Set once run() has been entered
        self.started = False
        self.starttime = 0.0
        self.endtime = 0.0

    @property
    def elapsed(self):
        return self.endtime - self.starttime

    def run(self):
        self.started = True
        self.starttime = time.time()
        target, args, kwargs = self.job
        try:
            self.ret = target(*args, **kwargs)
        except Exception as e:
            self.exc = e
        finally:
            self.endtime = time.time()
            # Drop the references to the arguments (property tables, results)
            self.job = None


def run_threads(jobs, workers=4):
    """
    Runs (name, target, args) jobs on _Thread workers, at most `workers` at a
    time. Returns the finished threads in submission order.
    """
    workers = max(1, int(workers))
    finished = []
    for start in range(0, len(jobs), workers):
        batch = [_Thread(target, args, name=name) for name, target, args in jobs[start:start + workers]]
        for thread in batch:
            thread.start()
        for thread in batch:
            thread.join()
            logger.debug('%s finished in %.3f s', thread.name, thread.elapsed)
        finished.extend(batch)
    return finished
