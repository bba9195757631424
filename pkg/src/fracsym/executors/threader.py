"""Thread pool for grid-line kernels.

NumPy releases the GIL inside the matrix-vector products that dominate each
line, so threads give real parallelism without pickling grid data.
"""

import threading
from collections.abc import Callable
from dataclasses import dataclass
from queue import Empty, SimpleQueue

from fracsym.executors.base import BaseLineExecutor
from fracsym.utils.logging import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class BatchOutcome:
    """What one worker reports back for one batch of lines."""

    index: int
    lines: int
    value: list | None = None
    error: Exception | None = None


class ThreadedLineExecutor(BaseLineExecutor):
    def __init__(
        self,
        func: Callable[[list[int]], list],
        n_workers: int | None = None,
        verbose: bool = False,
        pbar_color: str = "blue",
    ) -> None:
        super().__init__(func=func, n_workers=n_workers, pbar_color=pbar_color, verbose=verbose)
        self.task_queue: SimpleQueue = SimpleQueue()
        self.results_queue: SimpleQueue = SimpleQueue()
        self.stop_event = threading.Event()
        self.threads: list[threading.Thread] = []
        self.results: list = []
        self.pbar_desc = f"Grid lines [{self.n_workers} threads]"

    def _worker(self) -> None:
        # exactly one None goes back per worker, whatever stopped it
        while not self.stop_event.is_set():
            item = self.task_queue.get()
            if item is None:
                break
            idx, batch = item
            try:
                outcome = BatchOutcome(idx, len(batch), value=self.func(batch))
            except Exception as e:
                logger.error("[%s] Line batch %s failed: %s", threading.current_thread().name, idx, e)
                outcome = BatchOutcome(idx, len(batch), error=e)
                self.stop_event.set()
            self.results_queue.put(outcome)
        self.results_queue.put(None)

    def execute(self, batches: list[list[int]]) -> tuple[list, bool]:
        self.first_error = None
        self.interrupt = False
        self.stop_event.clear()
        self.task_queue, self.results_queue = SimpleQueue(), SimpleQueue()
        self.results = [None] * len(batches)
        self.init_pbar(total=sum(len(batch) for batch in batches))

        for item in enumerate(batches):
            self.task_queue.put(item)
        for _ in range(self.n_workers):
            self.task_queue.put(None)
        self.threads = [
            threading.Thread(target=self._worker, name=f"fracsym-lines-{i}", daemon=True)
            for i in range(self.n_workers)
        ]
        for thread in self.threads:
            thread.start()
        logger.debug("%s threads started on %s line batches", self.n_workers, len(batches))

        try:
            self._collect_results()
        except KeyboardInterrupt:
            self._cleanup_on_interrupt()
        else:
            self._cleanup_on_done()
        self.pbar_close()

        if self.first_error is not None:
            raise self.first_error
        return self.results, self.interrupt

    def _store(self, outcome: BatchOutcome) -> None:
        if outcome.error is not None:
            if self.first_error is None:
                self.first_error = outcome.error
            return
        if outcome.index >= len(self.results):
            self.results.extend([None] * (outcome.index + 1 - len(self.results)))
        self.results[outcome.index] = outcome.value
        self.pbar_update(outcome.lines)

    def _collect_results(self) -> None:
        running = self.n_workers
        while running:
            outcome = self.results_queue.get()
            if outcome is None:
                running -= 1
            else:
                self._store(outcome)

    def _collect_ready_results(self) -> None:
        while True:
            try:
                outcome = self.results_queue.get_nowait()
            except Empty:
                return
            if outcome is not None:
                self._store(outcome)

    def _cleanup_on_interrupt(self) -> None:
        logger.warning("Interrupted, keeping %s finished line batches", sum(r is not None for r in self.results))
        self.interrupt = True
        self.stop_event.set()
        self._release_idle_workers()
        self._join()
        self._collect_ready_results()

    def _cleanup_on_done(self) -> None:
        self._join()

    def _release_idle_workers(self) -> None:
        pending = 0
        while True:
            try:
                self.task_queue.get_nowait()
            except Empty:
                break
            pending += 1
        logger.debug("Dropped %s pending line batches", pending)
        for _ in self.threads:
            self.task_queue.put(None)

    def _join(self) -> None:
        for thread in self.threads:
            thread.join()
        self.threads = []
