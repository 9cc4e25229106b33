"""Command-line entry points and built-in fixtures."""

from .app import build_parser, main, run  # noqa: F401
