#!/usr/bin/env python3
"""Launcher for the q-series command line (see python/cli/qseries_cli.py)"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), 'python'))

from cli.qseries_cli import main

if __name__ == "__main__":
    sys.exit(main())
