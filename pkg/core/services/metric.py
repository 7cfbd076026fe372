import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

import numpy as np

from core.constants import IDENTITY_TOLERANCE
from core.exceptions import ConfigurationError
from core.models.canonical import CanonicalClass, canonical_class
from core.models.dataset import CategoricalVariable, Dataset, uniform_weights
from core.models.partition import Partition, induced_partition
from core.models.report import PropertyReport
from core.services.entropy import (
    check_pair_identities,
    conditional_entropy,
    entropy,
    symmetric_uncertainty,
)
from core.services.randgen import sampling_plan, tuples_for

logger = logging.getLogger(__name__)

DISTANCE = "distance"
SIMILARITY = "similarity"


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    names: tuple[str, ...]
    values: np.ndarray
    kind: str = DISTANCE

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=float)
        if values.shape != (len(self.names), len(self.names)):
            raise ValueError(
                f"Matrix shape {values.shape} does not match {len(self.names)} names"
            )
        values.setflags(write=False)
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "values", values)

    def value(self, a: str, b: str) -> float:
        return float(self.values[self.names.index(a), self.names.index(b)])

    def similarity(self) -> "DistanceMatrix":
        if self.kind == SIMILARITY:
            return self
        return DistanceMatrix(self.names, 1.0 - self.values, kind=SIMILARITY)


class PairwiseTable:
    def __init__(self, dataset: Dataset, names: Sequence[str] | None = None) -> None:
        self.dataset = dataset
        self.names = tuple(names) if names is not None else dataset.names
        self.partitions: dict[str, Partition] = {
            name: induced_partition(dataset.column(name), dataset)
            for name in self.names
        }
        self._su: dict[frozenset[str], float] = {}
        self._canonical: dict[str, CanonicalClass] = {}

    def su(self, a: str, b: str) -> float:
        key = frozenset((a, b))
        if key not in self._su:
            self._su[key] = symmetric_uncertainty(
                self.partitions[a], self.partitions[b]
            )
        return self._su[key]

    def distance(self, a: str, b: str) -> float:
        return 1.0 - self.su(a, b)

    def canonical(self, name: str) -> CanonicalClass:
        if name not in self._canonical:
            self._canonical[name] = canonical_class(self.partitions[name])
        return self._canonical[name]


def symmetric_uncertainty_between(
    x: CategoricalVariable, y: CategoricalVariable, dataset: Dataset
) -> float:
    return symmetric_uncertainty(
        induced_partition(x, dataset), induced_partition(y, dataset)
    )


def su_distance(
    x: CategoricalVariable, y: CategoricalVariable, dataset: Dataset
) -> float:
    """d(x, y) = 1 - SU(x, y)."""
    return 1.0 - symmetric_uncertainty_between(x, y, dataset)


def symmetric_distance(x: Partition, y: Partition) -> float:
    """(H(x|y) + H(y|x)) / (H(x) + H(y)); 0 for two constants."""
    total = entropy(x) + entropy(y)
    if total <= 0:
        return 0.0
    return (conditional_entropy(x, y) + conditional_entropy(y, x)) / total


def _su_grid(table: PairwiseTable) -> np.ndarray:
    size = len(table.names)
    grid = np.empty((size, size), dtype=float)
    for i, a in enumerate(table.names):
        for j in range(i, size):
            grid[i, j] = grid[j, i] = table.su(a, table.names[j])
    return grid


def similarity_matrix(
    dataset: Dataset, subset: Sequence[str] | None = None
) -> DistanceMatrix:
    table = PairwiseTable(dataset, subset)
    return DistanceMatrix(table.names, _su_grid(table), kind=SIMILARITY)


def distance_matrix(
    dataset: Dataset, subset: Sequence[str] | None = None
) -> DistanceMatrix:
    table = PairwiseTable(dataset, subset)
    return DistanceMatrix(table.names, 1.0 - _su_grid(table), kind=DISTANCE)


def class_keys(
    dataset: Dataset, names: Sequence[str] | None = None
) -> dict[str, CanonicalClass]:
    table = PairwiseTable(dataset, names)
    return {name: table.canonical(name) for name in table.names}


def check_similarity_axioms(
    dataset: Dataset, samples: int | None = None, seed: int | None = None
) -> PropertyReport:
    """
    Similarity-metric conditions for SU over the dataset's columns.
    Pair conditions are checked on every ordered pair; the triangle condition
    on all triples, or on a seeded sample when ``samples`` is given or the
    dataset is wider than ``Config.EXHAUSTIVE_COLUMN_LIMIT``.
    """
    table = PairwiseTable(dataset)
    names = table.names
    report = PropertyReport("similarity metric axioms")

    symmetry = report.check("symmetry")
    reflexivity = report.check("reflexivity")
    self_similarity = report.check("self-similarity")
    identity = report.check("identity of indiscernibles")
    normality = report.check("positivity and normality")
    entropy_only_pairs = 0

    for a in names:
        for b in names:
            pa, pb = table.partitions[a], table.partitions[b]
            su_ab = table.su(a, b)
            su_aa, su_bb = table.su(a, a), table.su(b, b)
            symmetry.equal(
                (a, b), symmetric_uncertainty(pa, pb), symmetric_uncertainty(pb, pa)
            )
            reflexivity.at_most((a,), 0.0, su_aa)
            self_similarity.at_most((a, b), su_ab, su_aa)
            normality.at_most((a, b), 0.0, su_ab)
            normality.at_most((a, b), su_ab, 1.0)

            all_one = all(
                abs(value - 1.0) <= IDENTITY_TOLERANCE
                for value in (su_aa, su_bb, su_ab)
            )
            same_class = table.canonical(a) == table.canonical(b)
            if same_class:
                identity.exercised += 1
            identity.exact(
                (a, b),
                holds=all_one == same_class,
                lhs=f"SU=1:{all_one}",
                rhs=f"same class:{same_class}",
            )
            if not same_class and abs(entropy(pa) - entropy(pb)) <= IDENTITY_TOLERANCE:
                entropy_only_pairs += 1

    exhaustive, count, seed = sampling_plan(len(names), samples, seed)
    triangle = report.check("triangle inequality")
    for x, y, z in tuples_for(names, 3, exhaustive, count, seed):
        triangle.at_most(
            (x, y, z), table.su(x, y) + table.su(y, z), table.su(x, z) + table.su(y, y)
        )

    logger.info(
        "Similarity axioms: %d checks, %d violations; %d entropy-equal but "
        "discernible ordered pairs",
        report.checked,
        report.violations,
        entropy_only_pairs,
    )
    if triangle.first_violation:
        logger.warning(
            "Triangle inequality violated: %s", triangle.first_violation.describe()
        )
    return report


def check_distance_axioms(
    matrix: DistanceMatrix,
    keys: Mapping[str, CanonicalClass],
    samples: int | None = None,
    seed: int | None = None,
) -> PropertyReport:
    names = matrix.names
    report = PropertyReport("distance metric axioms")
    non_negativity = report.check("non-negativity")
    normality = report.check("normality")
    symmetry = report.check("symmetry")
    identity = report.check("identity of indiscernibles")

    for a in names:
        for b in names:
            d_ab = matrix.value(a, b)
            non_negativity.at_most((a, b), 0.0, d_ab)
            normality.at_most((a, b), d_ab, 1.0)
            symmetry.equal((a, b), d_ab, matrix.value(b, a))

            zero = d_ab <= IDENTITY_TOLERANCE
            same_class = keys[a] == keys[b]
            if same_class:
                identity.exercised += 1
            identity.exact(
                (a, b),
                holds=zero == same_class,
                lhs=f"d=0:{zero}",
                rhs=f"same class:{same_class}",
            )

    exhaustive, count, seed = sampling_plan(len(names), samples, seed)
    triangle = report.check("triangle inequality")
    for x, y, z in tuples_for(names, 3, exhaustive, count, seed):
        triangle.at_most(
            (x, y, z), matrix.value(x, z), matrix.value(x, y) + matrix.value(y, z)
        )

    logger.info(
        "Distance axioms: %d checks, %d violations", report.checked, report.violations
    )
    if triangle.first_violation:
        logger.warning(
            "Triangle inequality violated: %s", triangle.first_violation.describe()
        )
    return report


def check_consistency(dataset: Dataset) -> PropertyReport:
    table = PairwiseTable(dataset)
    report = PropertyReport("consistency identities")
    quotient = report.check("distance quotient form")
    for a in table.names:
        for b in table.names:
            pa, pb = table.partitions[a], table.partitions[b]
            check_pair_identities(pa, pb, (a, b), report)
            if entropy(pa) + entropy(pb) > 0:
                quotient.equal(
                    (a, b),
                    1.0 - symmetric_uncertainty(pa, pb),
                    symmetric_distance(pa, pb),
                )
    return report


@dataclass(frozen=True)
class NonDiscretenessStep:
    n: int
    epsilon: float
    distance: float


def nondiscreteness_demo(steps: int) -> list[NonDiscretenessStep]:
    """
    Distances between nested binary indicators on n uniform rows:
    X marks the first n/2 rows and Y the first n/2 + 1, for n = 4, 8, 16, ...
    The partitions differ by one row, so every distance is positive, and it
    shrinks towards 0 as 1/n does.
    """
    if steps < 2:
        raise ConfigurationError("The demonstration needs at least 2 steps")

    sequence = []
    for step in range(steps):
        n = 4 * 2**step
        k = n // 2
        weights = uniform_weights(n)
        x = Partition(weights, (0,) * k + (1,) * (n - k))
        y = Partition(weights, (0,) * (k + 1) + (1,) * (n - k - 1))
        distance = 1.0 - symmetric_uncertainty(x, y)
        logger.debug("n=%d distance=%.17g", n, distance)
        sequence.append(NonDiscretenessStep(n=n, epsilon=1 / n, distance=distance))
    return sequence
