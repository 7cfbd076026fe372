import argparse

from core.constants import EXIT_OK
from core.renderers import runs_renderer
from core.services.db import DBService
from core.services.run import RunService
from core.utils.files import write_output


def configure_runs(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--limit", type=int, default=20)
    parser.add_argument("--check", help="only runs of this subcommand")


def runs_handler(args: argparse.Namespace) -> int:
    db = DBService()
    db.create_tables()
    with db.db_session() as db_session:
        runs = RunService(db_session).get_recent(limit=args.limit, command=args.check)
        write_output(runs_renderer(runs))
    return EXIT_OK
