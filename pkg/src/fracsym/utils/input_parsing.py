"""Batching helpers used to distribute grid lines over workers."""

from collections.abc import Sequence


def create_batches(data: Sequence, n_batches: int) -> list[list]:
    """
    Split data into n roughly equal, order-preserving batches.

    Parameters
    ----------
    data : Sequence
        Items to split, typically grid-line indices.
    n_batches : int
        Requested number of batches; capped at ``len(data)``.

    Returns
    -------
    list[list]
        Consecutive batches whose sizes differ by at most one.

    Examples
    --------
    >>> create_batches([0, 1, 2, 3, 4], 2)
    [[0, 1, 2], [3, 4]]

    >>> create_batches([], 3)
    []
    """
    if not data:
        return []

    if n_batches <= 0:
        raise ValueError("n_batches must be positive")

    n_batches = min(n_batches, len(data))
    batch_size, remainder = divmod(len(data), n_batches)
    batches = []
    start = 0
    for i in range(n_batches):
        # the first `remainder` batches take one extra item
        size = batch_size + (1 if i < remainder else 0)
        batches.append(list(data[start : start + size]))
        start += size
    return batches


def flatten_results(batch_results: list[list | None]) -> list:
    """
    Concatenate per-batch result lists, skipping batches that produced None.

    Examples
    --------
    >>> flatten_results([[1, 2], None, [3]])
    [1, 2, 3]
    """
    flat = []
    for batch in batch_results:
        if batch is not None:
            flat.extend(batch)
    return flat


def line_batches(n_lines: int, n_workers: int, per_worker: int = 4) -> list[list[int]]:
    """Batch line indices ``0..n_lines-1`` into about ``per_worker`` batches per worker.

    >>> line_batches(5, 1, per_worker=2)
    [[0, 1, 2], [3, 4]]
    """
    if n_workers <= 0:
        raise ValueError("n_workers must be positive")
    return create_batches(list(range(n_lines)), n_workers * per_worker)
