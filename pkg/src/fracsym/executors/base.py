"""Base class for executors that run a kernel over batches of grid lines."""

from abc import ABC, abstractmethod
from collections.abc import Callable

from tqdm import tqdm

from fracsym.config import resolve_workers
from fracsym.utils.logging import setup_logger

logger = setup_logger(__name__)


class BaseLineExecutor(ABC):
    """Runs ``func(batch)`` for every batch of line indices and keeps results in batch order.

    Subclasses implement :meth:`execute`, which returns ``(results, interrupted)``
    with one entry per batch (``None`` for batches that never finished), and the
    two cleanup hooks it calls on normal completion and on ``KeyboardInterrupt``.
    """

    def __init__(
        self,
        func: Callable[[list[int]], list],
        n_workers: int | None,
        pbar_color: str,
        verbose: bool = False,
    ) -> None:
        self.func = func
        self.n_workers = resolve_workers(n_workers)
        self.verbose = verbose
        self.pbar_color = pbar_color
        self.pbar_desc = "Grid lines"
        self.pbar: tqdm | None = None
        self.interrupt = False
        self.first_error: Exception | None = None
        logger.debug(
            "%s: kernel %s, %s workers",
            type(self).__name__,
            getattr(func, "__name__", repr(func)),
            self.n_workers,
        )

    def init_pbar(self, total: int) -> None:
        """Progress bar counted in lines; only shown when verbose."""
        if not self.verbose:
            return
        self.pbar = tqdm(desc=self.pbar_desc, total=total, unit="line", leave=False, colour=self.pbar_color)

    def pbar_update(self, lines: int = 1) -> None:
        if self.pbar is not None:
            self.pbar.update(lines)

    def pbar_close(self) -> None:
        if self.pbar is not None:
            self.pbar.close()
        self.pbar = None

    @abstractmethod
    def execute(self, batches: list[list[int]]) -> tuple[list, bool]: ...

    @abstractmethod
    def _cleanup_on_interrupt(self) -> None: ...

    @abstractmethod
    def _cleanup_on_done(self) -> None: ...
