#!/usr/bin/env python3
"""
knotcosmetic - command-line entry point for a source checkout
"""

import sys
from pathlib import Path


def setup_environment():
    """Make the package importable without installing it"""
    package_dir = Path(__file__).parent
    if str(package_dir) not in sys.path:
        sys.path.insert(0, str(package_dir))


def main():
    setup_environment()
    from knotcosmetic.cli import run
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
