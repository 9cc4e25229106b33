#!/usr/bin/env python3
"""Write the built-in fixtures to resources/fixtures/ as text files.

Each fixture is serialised in its own format (.ss, .cl or .mg), so the
files can be fed straight back to `cube-ideal ... --input`.

Usage:
    python scripts/generate_fixtures.py [--force]
"""

import os
import sys
from pathlib import Path

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.cli import fixtures  # noqa: E402
from src.common.data_manager import DataManager, extension_for  # noqa: E402


FIXTURE_DIR = Path('resources') / 'fixtures'

# (fixture name, size); the larger cycle spaces are left to `gen`
WANTED = [
    ('chain', 3),
    ('triangle', 0),
    ('k4', 0),
    ('mixed', 0),
    ('k22-dijoin', 0),
    ('triangle-clutter', 0),
    ('cycle-space-k4', 0),
]


def write_fixture(name: str, size: int, out_dir: Path, force: bool):
    obj = fixtures.build(name, size)
    out_path = out_dir / f"{name}{extension_for(obj)}"
    if out_path.exists() and not force:
        print(f"Skipping existing: {out_path}")
        return
    DataManager(str(out_path)).save(obj)
    print('Wrote', out_path)


def main():
    force = '--force' in sys.argv[1:]
    FIXTURE_DIR.mkdir(parents=True, exist_ok=True)
    for name, size in WANTED:
        write_fixture(name, size, FIXTURE_DIR, force)


if __name__ == '__main__':
    main()
