#!/usr/bin/env python3
"""
phi-rho region toolkit - Main Program

Exact arithmetic for the region of attainable (Spearman footrule, Spearman
rho) pairs: statistics of shuffles, diagonal copulas and named families,
exhaustive verification of the region bounds, and boundary curve rendering.
"""

import sys

from src.cli import main as cli_main


def main() -> None:
    """Main program entry point."""
    try:
        sys.exit(cli_main())
    except KeyboardInterrupt:
        print("\nProcess interrupted by user.")
        sys.exit(1)


if __name__ == "__main__":
    main()
