import argparse

from core.constants import EXIT_OK
from core.handlers.arguments import add_full
from core.renderers import demo_renderer
from core.services.metric import nondiscreteness_demo
from core.utils.files import write_output


def configure_demo(parser: argparse.ArgumentParser) -> None:
    add_full(parser)
    parser.add_argument("--steps", type=int, default=10)


def demo_nondiscrete_handler(args: argparse.Namespace) -> int:
    write_output(demo_renderer(nondiscreteness_demo(args.steps), full=args.full))
    return EXIT_OK
