"""Clutters over a finite ground set."""

from .clutter_logic import (  # noqa: F401
    Clutter, blocker, core_clutter, covering_number, cuboid, find_width_length_violation,
    is_ideal, is_tau_cover_minimal, uphull_face_check, minimum_covers, minor, monotone_system,
    rainbow_covering_number, width_length_check,
)
