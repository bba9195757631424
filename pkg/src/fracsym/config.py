"""Environment-driven settings."""

import os
from dataclasses import dataclass

import psutil

from fracsym.exceptions import ConfigError

THREADS_VAR = "FRACSYM_THREADS"
LOG_LEVEL_VAR = "FRACSYM_LOG_LEVEL"
PROGRESS_VAR = "FRACSYM_PROGRESS"


def _default_threads() -> int:
    return psutil.cpu_count() or 1


def _parse_threads(raw: str) -> int:
    try:
        threads = int(raw)
    except ValueError as exc:
        raise ConfigError(f"{THREADS_VAR} must be a positive integer, got {raw!r}") from exc
    if threads <= 0:
        raise ConfigError(f"{THREADS_VAR} must be a positive integer, got {raw!r}")
    return threads


@dataclass(frozen=True)
class Settings:
    threads: int
    log_level: str = "WARNING"
    progress: bool = False

    def __post_init__(self) -> None:
        if self.threads <= 0:
            raise ConfigError(f"threads must be positive, got {self.threads}")

    @classmethod
    def from_env(cls, environ: dict[str, str] | None = None) -> "Settings":
        env = os.environ if environ is None else environ
        raw_threads = env.get(THREADS_VAR)
        threads = _default_threads() if raw_threads in (None, "") else _parse_threads(raw_threads)
        progress = env.get(PROGRESS_VAR, "0").strip().lower() in ("1", "true", "yes")
        return cls(
            threads=threads,
            log_level=env.get(LOG_LEVEL_VAR, "WARNING") or "WARNING",
            progress=progress,
        )


def resolve_workers(n_workers: int | None) -> int:
    """Explicit worker count, or the FRACSYM_THREADS / CPU-count default."""
    if n_workers is None:
        return Settings.from_env().threads
    if n_workers <= 0:
        raise ConfigError(f"n_workers must be positive, got {n_workers}")
    return n_workers
