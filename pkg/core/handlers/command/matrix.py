import argparse

from core.constants import EXIT_OK
from core.handlers.arguments import add_input, dataset_from
from core.services.ingest import MatrixFormat, save_matrix
from core.services.metric import distance_matrix, similarity_matrix
from core.utils.files import write_output


def configure_dist(parser: argparse.ArgumentParser) -> None:
    add_input(parser)
    parser.add_argument(
        "--subset", help="comma-separated columns to include, in output order"
    )
    parser.add_argument(
        "--format",
        choices=[fmt.value for fmt in MatrixFormat],
        default=MatrixFormat.TSV.value,
    )
    parser.add_argument(
        "--similarity", action="store_true", help="write SU instead of 1 - SU"
    )
    parser.add_argument("--out", help="write to this path instead of stdout")


def dist_handler(args: argparse.Namespace) -> int:
    dataset = dataset_from(args)
    subset = args.subset.split(",") if args.subset else None
    build = similarity_matrix if args.similarity else distance_matrix
    write_output(save_matrix(build(dataset, subset), args.format), args.out)
    return EXIT_OK
