#!/usr/bin/env python
"""Command-line utility for classes, puzzles and verification suites."""
import sys

from segre_puzzles.cli import run


def main():
    """Run the segre_puzzles command line."""
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
