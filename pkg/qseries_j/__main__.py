"""
Entry point for the qseries-j package.

Allows running with: python -m qseries_j
"""

import sys
from .cli.commands import cli_main


if __name__ == "__main__":
    sys.exit(cli_main())
