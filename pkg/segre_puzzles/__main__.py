import sys

from segre_puzzles.cli import run

sys.exit(run())
