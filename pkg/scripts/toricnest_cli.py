"""Run the toricnest command line without installing the console script."""

from __future__ import annotations

import sys

from toricnest.cli import main

if __name__ == "__main__":
    sys.exit(main())
