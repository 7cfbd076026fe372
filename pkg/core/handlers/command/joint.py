import argparse
import logging

from core.constants import EXIT_OK
from core.handlers.arguments import add_input, dataset_from
from core.models.dataset import CategoricalVariable
from core.renderers import classes_renderer
from core.services.algebra import indiscernibility_classes, joint_many
from core.services.entropy import variable_entropy
from core.services.ingest import CsvSpec, save_csv
from core.utils.files import write_output

logger = logging.getLogger(__name__)


def configure_joint(parser: argparse.ArgumentParser) -> None:
    add_input(parser)
    parser.add_argument("columns", nargs="+", help="columns to combine, in order")
    parser.add_argument("--name", help="name of the appended column")
    parser.add_argument("--out", help="write to this path instead of stdout")


def joint_handler(args: argparse.Namespace) -> int:
    dataset = dataset_from(args)
    combined = joint_many((dataset.column(name) for name in args.columns), dataset)
    name = args.name or "*".join(args.columns)
    extended = dataset.with_column(
        CategoricalVariable(name=name, labels=combined.labels)
    )
    logger.info(
        "Joint of %s has %d realized categories, entropy %.4f bits",
        name,
        len(combined.alphabet),
        variable_entropy(combined, dataset),
    )
    write_output(save_csv(extended, CsvSpec(delimiter=args.delimiter)), args.out)
    return EXIT_OK


def classes_handler(args: argparse.Namespace) -> int:
    dataset = dataset_from(args)
    write_output(classes_renderer(indiscernibility_classes(dataset)))
    return EXIT_OK
