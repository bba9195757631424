"""Uniform grids with a lower terminal and the sampled functions living on them."""

import math
from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np

from fracsym.exceptions import DomainError, GridSizeError, NumericalError
from fracsym.fraccore.compare import DEFAULT_WINDOW

# nodes on the window boundary count as inside
_WINDOW_SLACK = 1e-12


@dataclass(frozen=True)
class UniformGrid1D:
    """Nodes t_k = terminal + k * step for k = 0..count-1."""

    terminal: float
    step: float
    count: int

    def __post_init__(self) -> None:
        if not math.isfinite(self.terminal):
            raise DomainError(f"grid terminal must be finite, got {self.terminal}")
        if not (math.isfinite(self.step) and self.step > 0):
            raise DomainError(f"grid step must be positive, got {self.step}")
        if int(self.count) != self.count or self.count < 2:
            raise GridSizeError(f"a grid needs at least 2 nodes, got {self.count}")
        object.__setattr__(self, "terminal", float(self.terminal))
        object.__setattr__(self, "step", float(self.step))
        object.__setattr__(self, "count", int(self.count))

    @classmethod
    def span(cls, start: float, end: float, count: int) -> "UniformGrid1D":
        if not end > start:
            raise DomainError(f"grid end must exceed its start, got [{start}, {end}]")
        if count < 2:
            raise GridSizeError(f"a grid needs at least 2 nodes, got {count}")
        return cls(start, (end - start) / (count - 1), count)

    @property
    def nodes(self) -> np.ndarray:
        return self.terminal + np.arange(self.count) * self.step

    @property
    def end(self) -> float:
        return self.terminal + (self.count - 1) * self.step

    @property
    def length(self) -> float:
        return (self.count - 1) * self.step

    def refined(self) -> "UniformGrid1D":
        """Same interval with the step halved; every old node stays a node."""
        return UniformGrid1D(self.terminal, self.step / 2.0, 2 * self.count - 1)

    def scaled(self, factor: float) -> "UniformGrid1D":
        """Image of the grid under t -> factor * t."""
        if not factor > 0:
            raise DomainError(f"grid scale factor must be positive, got {factor}")
        return UniformGrid1D(self.terminal * factor, self.step * factor, self.count)

    def window_mask(self, window: tuple[float, float] = DEFAULT_WINDOW) -> np.ndarray:
        """Nodes in [a + w0 * L, a + w1 * L], window given as fractions of the length L."""
        lo, hi = window
        if not 0 <= lo < hi <= 1:
            raise DomainError(f"window fractions must satisfy 0 <= lo < hi <= 1, got {window}")
        rel = (self.nodes - self.terminal) / self.length
        return (rel >= lo - _WINDOW_SLACK) & (rel <= hi + _WINDOW_SLACK)


def _frozen_samples(values: np.ndarray, shape: tuple[int, ...]) -> np.ndarray:
    samples = np.array(values, dtype=float)
    if samples.shape != shape:
        raise GridSizeError(f"samples of shape {samples.shape} do not match grid shape {shape}")
    if not np.all(np.isfinite(samples)):
        raise NumericalError("grid function samples must be finite")
    samples.setflags(write=False)
    return samples


def _frozen_mask(mask: np.ndarray | None, shape: tuple[int, ...]) -> np.ndarray:
    flags = np.zeros(shape, dtype=bool) if mask is None else np.array(mask, dtype=bool)
    if flags.shape != shape:
        raise GridSizeError(f"accuracy mask of shape {flags.shape} does not match {shape}")
    flags.setflags(write=False)
    return flags


@dataclass(frozen=True, eq=False)
class GridFunction1D:
    """Samples on a UniformGrid1D; `reduced_accuracy` flags boundary-stencil nodes."""

    grid: UniformGrid1D
    samples: np.ndarray
    reduced_accuracy: np.ndarray | None = field(default=None)

    def __post_init__(self) -> None:
        shape = (self.grid.count,)
        object.__setattr__(self, "samples", _frozen_samples(self.samples, shape))
        object.__setattr__(self, "reduced_accuracy", _frozen_mask(self.reduced_accuracy, shape))

    @classmethod
    def from_function(
        cls, grid: UniformGrid1D, func: Callable[[np.ndarray], np.ndarray]
    ) -> "GridFunction1D":
        return cls(grid, np.broadcast_to(func(grid.nodes), (grid.count,)))

    @property
    def nodes(self) -> np.ndarray:
        return self.grid.nodes

    def with_samples(self, values: np.ndarray, reduced_accuracy: np.ndarray | None = None) -> "GridFunction1D":
        return GridFunction1D(self.grid, values, reduced_accuracy)


@dataclass(frozen=True, eq=False)
class GridFunction2D:
    """Samples on grid1 x grid2, stored with shape (n2, n1): numpy axis 1 runs along x1."""

    grid1: UniformGrid1D
    grid2: UniformGrid1D
    samples: np.ndarray
    reduced_accuracy: np.ndarray | None = field(default=None)

    def __post_init__(self) -> None:
        shape = (self.grid2.count, self.grid1.count)
        object.__setattr__(self, "samples", _frozen_samples(self.samples, shape))
        object.__setattr__(self, "reduced_accuracy", _frozen_mask(self.reduced_accuracy, shape))

    @classmethod
    def from_function(
        cls,
        grid1: UniformGrid1D,
        grid2: UniformGrid1D,
        func: Callable[[np.ndarray, np.ndarray], np.ndarray],
    ) -> "GridFunction2D":
        x1, x2 = mesh(grid1, grid2)
        return cls(grid1, grid2, np.broadcast_to(func(x1, x2), x1.shape))

    @classmethod
    def zeros(cls, grid1: UniformGrid1D, grid2: UniformGrid1D) -> "GridFunction2D":
        return cls(grid1, grid2, np.zeros((grid2.count, grid1.count)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.samples.shape

    def mesh(self) -> tuple[np.ndarray, np.ndarray]:
        return mesh(self.grid1, self.grid2)

    def window_mask(self, window: tuple[float, float] = DEFAULT_WINDOW) -> np.ndarray:
        return np.outer(self.grid2.window_mask(window), self.grid1.window_mask(window))

    def with_samples(self, values: np.ndarray, reduced_accuracy: np.ndarray | None = None) -> "GridFunction2D":
        return GridFunction2D(self.grid1, self.grid2, values, reduced_accuracy)

    def _check_compatible(self, other: "GridFunction2D") -> None:
        if other.grid1 != self.grid1 or other.grid2 != self.grid2:
            raise GridSizeError("grid functions live on different grids")

    def _combine(self, other: "GridFunction2D | float", op: Callable) -> "GridFunction2D":
        if isinstance(other, GridFunction2D):
            self._check_compatible(other)
            flags = self.reduced_accuracy | other.reduced_accuracy
            return self.with_samples(op(self.samples, other.samples), flags)
        if isinstance(other, int | float):
            return self.with_samples(op(self.samples, float(other)), self.reduced_accuracy)
        return NotImplemented

    def __add__(self, other: "GridFunction2D | float") -> "GridFunction2D":
        return self._combine(other, np.add)

    def __radd__(self, other: float) -> "GridFunction2D":
        return self._combine(other, np.add)

    def __sub__(self, other: "GridFunction2D | float") -> "GridFunction2D":
        return self._combine(other, np.subtract)

    def __mul__(self, other: "GridFunction2D | float") -> "GridFunction2D":
        return self._combine(other, np.multiply)

    def __rmul__(self, other: float) -> "GridFunction2D":
        return self._combine(other, np.multiply)

    def __neg__(self) -> "GridFunction2D":
        return self * -1.0


def mesh(grid1: UniformGrid1D, grid2: UniformGrid1D) -> tuple[np.ndarray, np.ndarray]:
    """Coordinate arrays of shape (n2, n1)."""
    x1, x2 = np.meshgrid(grid1.nodes, grid2.nodes)
    return x1, x2
