import argparse
import logging
from collections.abc import Sequence

from core.constants import EXIT_USAGE
from core.handlers.command import handlers as command_handlers
from core.handlers.dtos import CommandHandler
from core.handlers.error import error_handler
from core.settings import Config

logging.basicConfig(
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    level=Config.LOG_LEVEL,
)
logging.getLogger("sqlalchemy").setLevel(logging.WARNING)
logger = logging.getLogger(__name__)


class EntropyCli:
    def __init__(self, prog: str = "su-metric") -> None:
        self.parser = argparse.ArgumentParser(
            prog=prog,
            description=(
                "Symmetric uncertainty between categorical variables, "
                "and validators for its metric and algebraic properties."
            ),
        )
        self.subparsers = self.parser.add_subparsers(
            dest="command", required=True, metavar="command"
        )
        self.configure_handlers(command_handlers)

    def configure_handlers(self, handlers: Sequence[CommandHandler]) -> None:
        for handler in handlers:
            subparser = self.subparsers.add_parser(
                handler.command, help=handler.help, description=handler.help
            )
            handler.configure(subparser)
            subparser.set_defaults(callback=handler.callback)

    def run(self, argv: Sequence[str] | None = None) -> int:
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as exc:
            # argparse exits 0 after --help and 2 on usage errors
            return exc.code if isinstance(exc.code, int) else EXIT_USAGE

        logger.debug("Running %s", args.command)
        try:
            return args.callback(args)
        except Exception as exc:
            return error_handler(exc)


cli = EntropyCli()
