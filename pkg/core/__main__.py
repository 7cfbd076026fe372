import sys

from core.cli import cli

sys.exit(cli.run())
