import argparse

from core.models.dataset import Dataset
from core.services.randgen import CorrelationMode
from core.utils.files import read_dataset


def add_input(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument(
        "input",
        nargs=None if required else "?",
        help="CSV path, '-' for stdin, or fixture:<name>",
    )
    parser.add_argument("--delimiter", default=",", help="CSV field delimiter")
    parser.add_argument(
        "--drop-na",
        action="store_true",
        help="drop rows with missing values instead of keeping <NA> as a category",
    )


def add_full(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--full", action="store_true", help="print values with 17 significant digits"
    )


def add_validator_options(
    parser: argparse.ArgumentParser,
    default_mode: CorrelationMode = CorrelationMode.ARBITRARY,
    default_columns: int = 5,
) -> None:
    add_input(parser, required=False)
    add_full(parser)
    parser.add_argument(
        "--random",
        type=int,
        metavar="SEED",
        help="validate a generated population instead of an input file",
    )
    parser.add_argument(
        "--count", type=int, default=1000, help="generated datasets (with --random)"
    )
    parser.add_argument(
        "--columns",
        type=int,
        default=default_columns,
        help="columns per generated dataset (with --random)",
    )
    parser.add_argument(
        "--mode",
        choices=[mode.value for mode in CorrelationMode],
        default=default_mode.value,
        help="correlation between generated columns (with --random)",
    )
    parser.add_argument(
        "--samples",
        type=int,
        help="sample this many tuples instead of enumerating all of them",
    )
    parser.add_argument("--seed", type=int, help="seed for sampled tuples")
    parser.add_argument(
        "--record", action="store_true", help="store the outcome as a check run"
    )


def dataset_from(args: argparse.Namespace) -> Dataset:
    return read_dataset(args.input, delimiter=args.delimiter, drop_na=args.drop_na)
