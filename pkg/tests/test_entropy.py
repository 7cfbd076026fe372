from fractions import Fraction

import pytest
from hypothesis import given

from core.exceptions import StructuralError, UndefinedRatioError
from core.models import CategoricalVariable, Dataset, Partition, induced_partition
from core.services.entropy import (
    check_lemma2,
    check_pair_identities,
    check_relative_entropy,
    conditional_entropy,
    entropic_ratio,
    entropy,
    joint_entropy,
    mutual_information,
    mutual_information_joint_form,
    symmetric_uncertainty,
    symmetric_uncertainty_joint_form,
    variable_entropy,
)
from core.services.randgen import CorrelationMode, designated_pair, gen_population
from strategies import datasets

UNIFORM_4 = (Fraction(1, 4),) * 4

PAPER_SU = {
    "Neatness": 0.0535,
    "Creativity": 0.4627,
    "Punctuality": 0.0535,
    "IQuotient": 0.0535,
    "AttentionType": 0.0192,
}


def partitions_of(dataset: Dataset, *names: str) -> list[Partition]:
    return [induced_partition(dataset.column(name), dataset) for name in names]


def test_entropy_of_known_distributions(indiscernibles):
    assert entropy(Partition(UNIFORM_4, (0, 1, 2, 3))) == pytest.approx(2.0)
    assert entropy(Partition(UNIFORM_4, (0, 0, 0, 0))) == 0.0
    assert variable_entropy(
        indiscernibles.column("X1"), indiscernibles
    ) == pytest.approx(1.3609640474, abs=1e-9)


@pytest.mark.parametrize("feature, expected", PAPER_SU.items())
def test_symmetric_uncertainty_against_hiring(internship, feature, expected):
    feature_partition, hired = partitions_of(internship, feature, "GotHired")

    assert symmetric_uncertainty(feature_partition, hired) == pytest.approx(
        expected, abs=5e-5
    )


def test_indiscernible_columns_have_unit_su(indiscernibles):
    x1, x2 = partitions_of(indiscernibles, "X1", "X2")

    assert symmetric_uncertainty(x1, x2) == pytest.approx(1.0, abs=1e-12)
    assert conditional_entropy(x1, x2) == 0.0


def test_independent_halvings():
    halves = Partition(UNIFORM_4, (0, 0, 1, 1))
    alternating = Partition(UNIFORM_4, (0, 1, 0, 1))

    assert conditional_entropy(halves, alternating) == pytest.approx(1.0)
    assert joint_entropy(halves, alternating) == pytest.approx(2.0)
    assert mutual_information(halves, alternating) == pytest.approx(0.0, abs=1e-12)
    assert symmetric_uncertainty(halves, alternating) == pytest.approx(0.0, abs=1e-12)
    assert entropic_ratio(halves, alternating) == pytest.approx(1.0)


def test_constants():
    constant = Partition(UNIFORM_4, (0, 0, 0, 0))
    halves = Partition(UNIFORM_4, (0, 0, 1, 1))

    assert symmetric_uncertainty(constant, constant) == 1.0
    assert symmetric_uncertainty_joint_form(constant, constant) == 1.0
    assert symmetric_uncertainty(constant, halves) == 0.0
    with pytest.raises(UndefinedRatioError):
        entropic_ratio(constant, constant)


def test_entropic_ratio_links_to_su(internship):
    creativity, hired = partitions_of(internship, "Creativity", "GotHired")
    ratio = entropic_ratio(creativity, hired)

    assert 0.5 <= ratio <= 1.0
    assert symmetric_uncertainty(creativity, hired) == pytest.approx(
        2 * (1 - ratio), abs=1e-12
    )
    assert mutual_information(creativity, hired) == pytest.approx(
        mutual_information_joint_form(creativity, hired), abs=1e-12
    )


def test_pair_identities_on_every_fixture_pair(internship):
    for a in internship.names:
        for b in internship.names:
            report = check_pair_identities(*partitions_of(internship, a, b), (a, b))
            assert report.passed, report.first_violation


def test_relative_entropy_on_fixture_triples(internship):
    report = check_relative_entropy(internship)

    assert report.passed, report.first_violation
    assert report.checks["a: chain rule"].checked == 6**3
    assert report.checks["b: conditioned side monotone"].exercised > 0


@given(datasets(min_columns=3, max_columns=3))
def test_relative_entropy_properties(dataset):
    x, y, z = partitions_of(dataset, *dataset.names)
    report = check_lemma2(x, y, z)

    assert report.passed, report.first_violation


def test_relative_entropy_on_refined_population():
    coarse, fine = designated_pair()
    report = None
    for _, dataset in gen_population(
        seed=11, count=1000, columns=3, mode=CorrelationMode.REFINED
    ):
        x, y, z = partitions_of(dataset, coarse, fine, "c2")
        report = check_lemma2(x, y, z, names=(coarse, fine, "c2"), report=report)

    assert report.passed, report.first_violation
    assert report.checks["a: chain rule"].checked == 1000
    assert report.checks["b: conditioned side monotone"].exercised >= 100
    assert report.checks["c: coarser iff zero relative entropy"].exercised >= 100


def test_variables_over_unequal_universes_are_rejected():
    short = Dataset.from_columns([CategoricalVariable("a", ("x", "y"))])
    long = Dataset.from_columns([CategoricalVariable("a", ("x", "y", "z"))])

    with pytest.raises(StructuralError):
        symmetric_uncertainty(
            induced_partition(short.column("a"), short),
            induced_partition(long.column("a"), long),
        )
