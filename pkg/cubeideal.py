#!/usr/bin/env python3
"""
Cube-ideal lab
Main entry point
"""

import sys
import os

# Add src to path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.cli.app import main


if __name__ == '__main__':
    sys.exit(main())
