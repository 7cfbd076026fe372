import sys

from core.cli import cli


if __name__ == "__main__":
    sys.exit(cli.run())
