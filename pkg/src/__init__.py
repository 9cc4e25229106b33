"""Cube-ideal lab: exact checks for cube-ideal set-systems, clutters and graphs."""
