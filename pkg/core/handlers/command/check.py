"""
Validator subcommands.

Each runs on an input dataset, or with ``--random SEED`` on a generated
population whose per-instance reports are merged clause by clause. Exit code
1 means at least one clause has a witness.
"""
import argparse
import logging
from collections.abc import Callable

from core.constants import EXIT_OK, EXIT_VIOLATION
from core.exceptions import ConfigurationError
from core.handlers.arguments import add_validator_options, dataset_from
from core.models.dataset import Dataset
from core.models.partition import induced_partition
from core.models.report import PropertyReport
from core.renderers import report_renderer
from core.services.algebra import check_contractivity, check_monoid_laws
from core.services.db import DBService
from core.services.entropy import check_lemma2, check_relative_entropy
from core.services.metric import (
    check_consistency,
    check_distance_axioms,
    check_similarity_axioms,
    class_keys,
    distance_matrix,
)
from core.services.randgen import CorrelationMode, designated_pair, gen_population
from core.services.run import RunService
from core.settings import Config
from core.utils.files import write_output

logger = logging.getLogger(__name__)

DatasetCheck = Callable[[Dataset, int | None, int | None], PropertyReport]


def configure_check(parser: argparse.ArgumentParser) -> None:
    add_validator_options(parser)


def configure_lemma2(parser: argparse.ArgumentParser) -> None:
    add_validator_options(
        parser, default_mode=CorrelationMode.REFINED, default_columns=3
    )


def metric_report(
    dataset: Dataset, samples: int | None = None, seed: int | None = None
) -> PropertyReport:
    report = PropertyReport("metric axioms")
    report.merge(check_similarity_axioms(dataset, samples, seed), prefix="SU: ")
    report.merge(
        check_distance_axioms(
            distance_matrix(dataset), class_keys(dataset), samples, seed
        ),
        prefix="d: ",
    )
    report.merge(check_consistency(dataset))
    return report


def _lemma2_instance(
    dataset: Dataset, samples: int | None = None, seed: int | None = None
) -> PropertyReport:
    # c1 coarsens c0 in refined populations, so clause (b) applies
    if len(dataset.names) != 3:
        return check_relative_entropy(dataset, samples, seed)
    coarse, fine = designated_pair()
    (other,) = set(dataset.names) - {coarse, fine}
    names = (coarse, fine, other)
    return check_lemma2(
        *(induced_partition(dataset.column(name), dataset) for name in names),
        names=names,
    )


def _population_source(args: argparse.Namespace) -> str:
    return (
        f"random seed={args.random} count={args.count} "
        f"columns={args.columns} mode={args.mode}"
    )


def _run(
    args: argparse.Namespace,
    title: str,
    on_file: DatasetCheck,
    on_instance: DatasetCheck,
) -> tuple[PropertyReport, str]:
    if args.random is None:
        if args.input is None:
            raise ConfigurationError("An input or --random SEED is required")
        return on_file(dataset_from(args), args.samples, args.seed), args.input

    report = PropertyReport(title)
    for instance_seed, dataset in gen_population(
        args.random, args.count, args.columns, args.mode
    ):
        report.merge(
            on_instance(dataset, args.samples, args.seed),
            context=f"seed={instance_seed}",
        )
    return report, _population_source(args)


def _finish(args: argparse.Namespace, report: PropertyReport, source: str) -> int:
    write_output(report_renderer(report, full=args.full))
    if args.record or Config.RECORD_RUNS:
        db = DBService()
        db.create_tables()
        with db.db_session() as db_session:
            RunService(db_session).record(args.command, source, report)

    if not report.passed:
        logger.warning("%s: %d violations", report.title, report.violations)
        return EXIT_VIOLATION
    return EXIT_OK


def check_metric_handler(args: argparse.Namespace) -> int:
    report, source = _run(args, "metric axioms", metric_report, metric_report)
    return _finish(args, report, source)


def check_monoid_handler(args: argparse.Namespace) -> int:
    report, source = _run(
        args, "commutative monoid laws", check_monoid_laws, check_monoid_laws
    )
    return _finish(args, report, source)


def check_contractivity_handler(args: argparse.Namespace) -> int:
    report, source = _run(
        args, "contractivity of the joint", check_contractivity, check_contractivity
    )
    return _finish(args, report, source)


def check_lemma2_handler(args: argparse.Namespace) -> int:
    report, source = _run(
        args, "relative entropy properties", check_relative_entropy, _lemma2_instance
    )
    return _finish(args, report, source)
