"""Shared plumbing: errors, settings, exact arithmetic, file formats, reports."""
