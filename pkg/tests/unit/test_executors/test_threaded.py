"""Tests for the threaded line executor."""

import threading
import time

import pytest

from fracsym.executors.threader import BatchOutcome, ThreadedLineExecutor


def squares(batch: list[int]) -> list[int]:
    return [i**2 for i in batch]


def slow_squares(batch: list[int]) -> list[int]:
    # later batches finish first
    time.sleep(0.01 * (5 - batch[0]) if batch[0] < 5 else 0)
    return squares(batch)


class TestThreadedLineExecutor:
    def test_returns_batch_results_in_order(self):
        executor = ThreadedLineExecutor(func=squares, n_workers=2)
        results, interrupted = executor.execute([[0, 1], [2, 3], [4]])
        assert results == [[0, 1], [4, 9], [16]]
        assert interrupted is False

    def test_order_kept_when_batches_finish_out_of_order(self):
        executor = ThreadedLineExecutor(func=slow_squares, n_workers=5)
        results, _ = executor.execute([[i] for i in range(5)])
        assert results == [[0], [1], [4], [9], [16]]

    def test_single_worker(self):
        executor = ThreadedLineExecutor(func=squares, n_workers=1)
        results, _ = executor.execute([[1], [2], [3]])
        assert results == [[1], [4], [9]]

    def test_no_batches(self):
        executor = ThreadedLineExecutor(func=squares, n_workers=2)
        results, interrupted = executor.execute([])
        assert results == []
        assert interrupted is False

    def test_more_workers_than_batches(self):
        executor = ThreadedLineExecutor(func=squares, n_workers=8)
        results, _ = executor.execute([[1], [2]])
        assert results == [[1], [4]]

    def test_reusable(self):
        executor = ThreadedLineExecutor(func=squares, n_workers=2)
        first, _ = executor.execute([[1], [2]])
        second, _ = executor.execute([[3], [4]])
        assert (first, second) == ([[1], [4]], [[9], [16]])

    def test_first_worker_error_is_reraised(self):
        def failing(batch: list[int]) -> list[int]:
            if 2 in batch:
                raise ArithmeticError("bad line 2")
            return squares(batch)

        executor = ThreadedLineExecutor(func=failing, n_workers=2)
        with pytest.raises(ArithmeticError, match="bad line 2"):
            executor.execute([[0], [1], [2], [3]])

    def test_workers_run_concurrently(self):
        barrier = threading.Barrier(2, timeout=5)

        def wait_for_partner(batch: list[int]) -> list[int]:
            barrier.wait()
            return batch

        executor = ThreadedLineExecutor(func=wait_for_partner, n_workers=2)
        results, _ = executor.execute([[0], [1]])
        assert results == [[0], [1]]

    def test_no_progress_bar_when_not_verbose(self):
        executor = ThreadedLineExecutor(func=squares, n_workers=2, verbose=False)
        executor.execute([[1]])
        assert executor.pbar is None

    def test_progress_bar_closed_after_verbose_run(self):
        executor = ThreadedLineExecutor(func=squares, n_workers=2, verbose=True)
        executor.execute([[1], [2], [3]])
        assert executor.pbar is None


class TestInterruptHandling:
    def test_interrupt_flag_set_on_cleanup(self):
        executor = ThreadedLineExecutor(func=squares, n_workers=2)
        executor.results = [None] * 3
        executor.threads = []
        executor._cleanup_on_interrupt()
        assert executor.interrupt is True
        assert executor.stop_event.is_set()

    def test_collect_ready_results_keeps_finished_batches(self):
        executor = ThreadedLineExecutor(func=squares, n_workers=2)
        executor.results = [None] * 3
        executor.results_queue.put(BatchOutcome(0, 1, value=[0]))
        executor.results_queue.put(None)
        executor.results_queue.put(BatchOutcome(2, 1, value=[4]))
        executor._collect_ready_results()
        assert executor.results == [[0], None, [4]]

    def test_keyboard_interrupt_returns_partial_results(self, monkeypatch):
        executor = ThreadedLineExecutor(func=squares, n_workers=2)

        def interrupted_collect():
            raise KeyboardInterrupt

        monkeypatch.setattr(executor, "_collect_results", interrupted_collect)
        results, interrupted = executor.execute([[1], [2], [3]])
        assert interrupted is True
        assert len(results) == 3
        assert all(r is None or r in ([1], [4], [9]) for r in results)

    def test_failed_outcome_becomes_first_error(self):
        executor = ThreadedLineExecutor(func=squares, n_workers=2)
        executor.results = [None] * 2
        executor._store(BatchOutcome(1, 3, error=ValueError("line 4")))
        executor._store(BatchOutcome(0, 3, error=ValueError("line 1")))
        executor._store(BatchOutcome(0, 3, value=[0, 1, 4]))
        assert str(executor.first_error) == "line 4"
        assert executor.results == [[0, 1, 4], None]

    def test_progress_counts_lines(self):
        executor = ThreadedLineExecutor(func=squares, n_workers=2, verbose=True)
        executor.init_pbar(total=5)
        executor._store(BatchOutcome(0, 3, value=[0, 1, 4]))
        assert executor.pbar.n == 3
        executor.pbar_close()

    def test_store_before_execute_grows_results(self):
        executor = ThreadedLineExecutor(func=squares, n_workers=2)
        executor._store(BatchOutcome(2, 1, value=[4]))
        assert executor.results == [None, None, [4]]
