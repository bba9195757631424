"""CSV and JSON files read and written by the command line.

CSV files carry ``#`` metadata lines, one header line and 17-significant-digit
decimals, so values survive a round trip.
"""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np

from fracsym.exceptions import GridSizeError, InputFormatError
from fracsym.fraccore.grid import GridFunction1D, GridFunction2D, UniformGrid1D

FLOAT_FORMAT = "%.17g"
# relative spread of node spacings still read as a uniform grid
UNIFORM_RTOL = 1e-9


@dataclass(frozen=True)
class Table:
    columns: tuple[str, ...]
    data: np.ndarray
    metadata: dict[str, str] = field(default_factory=dict)

    def column(self, name: str) -> np.ndarray:
        try:
            return self.data[:, self.columns.index(name)]
        except ValueError as e:
            raise InputFormatError(f"column {name!r} missing; found {', '.join(self.columns)}") from e


def write_table(
    path: str | Path | None,
    columns: tuple[str, ...],
    data: np.ndarray,
    metadata: dict[str, Any] | None = None,
) -> str:
    """Write the table to path (or just return the text when path is None)."""
    lines = [f"# {key}: {value}" for key, value in (metadata or {}).items()]
    lines.append(",".join(columns))
    rows = np.atleast_2d(np.asarray(data, dtype=float))
    lines.extend(",".join(FLOAT_FORMAT % value for value in row) for row in rows)
    text = "\n".join(lines) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def read_table(path: str | Path) -> Table:
    """Read a table written by write_table; FileNotFoundError propagates."""
    metadata, body = {}, []
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, _, value = line[1:].partition(":")
            metadata[key.strip()] = value.strip()
        else:
            body.append(line)
    if not body:
        raise InputFormatError(f"{path} holds no header line")
    columns = tuple(name.strip() for name in body[0].split(","))
    try:
        data = np.loadtxt(body[1:], delimiter=",", ndmin=2) if len(body) > 1 else np.empty((0, len(columns)))
    except ValueError as e:
        raise InputFormatError(f"{path}: {e}") from e
    if data.shape[1] != len(columns):
        raise InputFormatError(f"{path}: {data.shape[1]} values per row but {len(columns)} columns")
    return Table(columns, data, metadata)


def _uniform_grid(nodes: np.ndarray, name: str) -> UniformGrid1D:
    if nodes.size < 2:
        raise GridSizeError(f"column {name!r} needs at least 2 nodes, got {nodes.size}")
    grid = UniformGrid1D.span(float(nodes[0]), float(nodes[-1]), nodes.size)
    if np.max(np.abs(nodes - grid.nodes)) > UNIFORM_RTOL * grid.length:
        raise InputFormatError(f"column {name!r} is not a uniform grid")
    return grid


def grid_function_1d(table: Table, variable: str = "t", value: str = "f") -> GridFunction1D:
    nodes = table.column(variable)
    return GridFunction1D(_uniform_grid(nodes, variable), table.column(value))


def write_grid_function_1d(
    path: str | Path | None, f: GridFunction1D, metadata: dict[str, Any] | None = None, variable: str = "t"
) -> str:
    data = np.column_stack([f.nodes, f.samples, f.reduced_accuracy.astype(float)])
    return write_table(path, (variable, "f", "flag"), data, metadata)


def grid_function_2d(table: Table, value: str = "u") -> GridFunction2D:
    """Rows ordered with x2 outer and x1 inner."""
    x1 = np.unique(table.column("x1"))
    x2 = np.unique(table.column("x2"))
    if x1.size * x2.size != table.data.shape[0]:
        raise GridSizeError(f"{table.data.shape[0]} rows do not fill a {x2.size} x {x1.size} grid")
    samples = table.column(value).reshape(x2.size, x1.size)
    return GridFunction2D(_uniform_grid(x1, "x1"), _uniform_grid(x2, "x2"), samples)


def write_grid_function_2d(
    path: str | Path | None,
    f: GridFunction2D,
    value: str = "u",
    mask: np.ndarray | None = None,
    metadata: dict[str, Any] | None = None,
) -> str:
    """Write x1, x2, value and flag columns for the nodes selected by mask (all by default)."""
    x1, x2 = f.mesh()
    keep = np.ones(f.shape, dtype=bool) if mask is None else mask
    data = np.column_stack(
        [x1[keep], x2[keep], np.asarray(f.samples)[keep], f.reduced_accuracy[keep].astype(float)]
    )
    return write_table(path, ("x1", "x2", value, "flag"), data, metadata)


def write_record(path: str | Path | None, record: dict[str, Any]) -> str:
    """JSON record; floats use repr, so reading back is bit-exact."""
    text = json.dumps(record, indent=2) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def read_record(path: str | Path) -> dict[str, Any]:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise InputFormatError(f"{path} is not a JSON record: {e}") from e
