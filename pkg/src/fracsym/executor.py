"""Public API for applying a 1D kernel along every line of a 2D sample array."""

from collections.abc import Callable

import numpy as np

from fracsym.config import Settings, resolve_workers
from fracsym.executors.threader import ThreadedLineExecutor
from fracsym.utils.input_parsing import flatten_results, line_batches
from fracsym.utils.logging import setup_logger

logger = setup_logger(__name__)

LineKernel = Callable[[np.ndarray], np.ndarray]


class LineExecutor:
    """
    Maps a line kernel over one axis of a 2D array.

    Every line is processed by the same kernel call on the same data whatever
    the worker count, so results are bit-identical across pool sizes.
    """

    def __init__(self, n_workers: int | None = None, verbose: bool | None = None) -> None:
        self.n_workers = resolve_workers(n_workers)
        self.verbose = Settings.from_env().progress if verbose is None else verbose

    def map_lines(self, kernel: LineKernel, samples: np.ndarray, axis: int) -> np.ndarray:
        """Apply `kernel` to each 1D line of `samples` taken along numpy `axis`."""
        moved = np.moveaxis(np.asarray(samples, dtype=float), axis, -1)
        lines = np.ascontiguousarray(moved.reshape(-1, moved.shape[-1]))
        n_lines = lines.shape[0]

        def run_batch(batch: list[int]) -> list[np.ndarray]:
            return [kernel(lines[i]) for i in batch]

        if self.n_workers == 1 or n_lines <= 1:
            results = run_batch(list(range(n_lines)))
        else:
            batches = line_batches(n_lines, self.n_workers)
            executor = ThreadedLineExecutor(
                func=run_batch, n_workers=min(self.n_workers, len(batches)), verbose=self.verbose
            )
            batch_results, interrupted = executor.execute(batches)
            if interrupted:
                raise KeyboardInterrupt
            results = flatten_results(batch_results)
        logger.debug("Mapped kernel over %s lines (axis %s)", n_lines, axis)

        out = np.stack(results).reshape(moved.shape[:-1] + (-1,))
        return np.moveaxis(out, -1, axis)
