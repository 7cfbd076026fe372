import argparse
import logging

from core.constants import EXIT_OK
from core.exceptions import StructuralError, UndefinedRatioError
from core.handlers.arguments import add_full, add_input, dataset_from
from core.models.contingency import contingency
from core.models.partition import induced_partition
from core.renderers import contingency_renderer, ranking_renderer, values_renderer
from core.services.entropy import (
    entropic_ratio,
    entropy,
    joint_entropy,
    mutual_information,
    symmetric_uncertainty,
)
from core.utils.files import write_output

logger = logging.getLogger(__name__)


def configure_pair(parser: argparse.ArgumentParser) -> None:
    add_input(parser)
    add_full(parser)
    parser.add_argument("column_a")
    parser.add_argument("column_b")


def configure_contingency(parser: argparse.ArgumentParser) -> None:
    add_input(parser)
    parser.add_argument("column_a", help="categories across")
    parser.add_argument("column_b", help="categories down")


def configure_rank(parser: argparse.ArgumentParser) -> None:
    add_input(parser)
    add_full(parser)
    parser.add_argument("class_column")


def su_handler(args: argparse.Namespace) -> int:
    dataset = dataset_from(args)
    a, b = args.column_a, args.column_b
    pa = induced_partition(dataset.column(a), dataset)
    pb = induced_partition(dataset.column(b), dataset)

    su = symmetric_uncertainty(pa, pb)
    try:
        ratio = entropic_ratio(pa, pb)
    except UndefinedRatioError:
        logger.info("Both `%s` and `%s` are constant", a, b)
        ratio = None

    write_output(
        values_renderer(
            [
                (f"SU({a}, {b})", su),
                (f"d({a}, {b})", 1.0 - su),
                (f"R({a}, {b})", ratio),
                (f"MI({a}, {b})", mutual_information(pa, pb)),
                (f"H({a})", entropy(pa)),
                (f"H({b})", entropy(pb)),
                (f"H({a}, {b})", joint_entropy(pa, pb)),
            ],
            full=args.full,
        )
    )
    return EXIT_OK


def rank_handler(args: argparse.Namespace) -> int:
    dataset = dataset_from(args)
    target = induced_partition(dataset.column(args.class_column), dataset)
    features = [name for name in dataset.names if name != args.class_column]
    if not features:
        raise StructuralError("Ranking needs at least one column besides the class")

    ranking = sorted(
        (
            (
                name,
                symmetric_uncertainty(
                    induced_partition(dataset.column(name), dataset), target
                ),
            )
            for name in features
        ),
        key=lambda item: (-item[1], item[0]),
    )
    write_output(ranking_renderer(args.class_column, ranking, full=args.full))
    return EXIT_OK


def contingency_handler(args: argparse.Namespace) -> int:
    dataset = dataset_from(args)
    table = contingency(
        dataset.column(args.column_a), dataset.column(args.column_b), dataset
    )
    write_output(
        contingency_renderer(
            table, dataset.row_count, args.column_a, args.column_b
        )
    )
    return EXIT_OK
