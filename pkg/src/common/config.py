"""Safety caps and runtime settings (common).

Defaults keep every enumeration at desk scale. Environment variables are read
once when the settings are first requested; the CLI may override afterwards.
"""

import logging
import os
from dataclasses import dataclass, replace
from typing import Optional

from .errors import ArgumentError


logger = logging.getLogger(__name__)

ENV_MAX_N = 'CUBEIDEAL_MAX_N'
ENV_THREADS = 'CUBEIDEAL_THREADS'
ENV_LOG_LEVEL = 'CUBEIDEAL_LOG_LEVEL'


@dataclass(frozen=True)
class Settings:
    max_n: int = 24
    vertex_max_n: int = 10
    ideal_max_m: int = 12
    monotone_max_m: int = 20
    blocker_max_m: int = 20
    graph_max_vertices: int = 16
    graph_max_edges: int = 20
    rgraph_max_vertices: int = 14
    postman_max_vertices: int = 12
    threads: int = 1
    slack: float = 1e-9

    @property
    def polytope_max_n(self) -> int:
        """The n cap for exact polyhedral work; never above max_n."""
        return min(self.max_n, self.vertex_max_n)


_current: Optional[Settings] = None


def _env_int(name: str) -> Optional[int]:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return None
    try:
        value = int(raw.strip())
    except ValueError:
        raise ArgumentError(f"{name} must be an integer, got {raw!r}")
    if value < 1:
        raise ArgumentError(f"{name} must be positive, got {value}")
    return value


def from_env() -> Settings:
    s = Settings()
    max_n = _env_int(ENV_MAX_N)
    if max_n is not None:
        logger.info("n cap overridden from %s: %d", ENV_MAX_N, max_n)
        s = replace(s, max_n=max_n)
    threads = _env_int(ENV_THREADS)
    if threads is not None:
        s = replace(s, threads=threads)
    return s


def settings() -> Settings:
    global _current
    if _current is None:
        _current = from_env()
    return _current


def configure(**overrides) -> Settings:
    """Replace selected fields of the active settings; unknown names are rejected."""
    global _current
    known = set(Settings.__dataclass_fields__)
    unknown = set(overrides) - known
    if unknown:
        raise ArgumentError(f"unknown settings: {', '.join(sorted(unknown))}")
    clean = {k: v for k, v in overrides.items() if v is not None}
    _current = replace(settings(), **clean)
    return _current


def reset() -> None:
    global _current
    _current = None


def require_cap(what: str, value: int, cap: int) -> None:
    if value > cap:
        raise ArgumentError(f"{what} = {value} exceeds the cap of {cap}")
