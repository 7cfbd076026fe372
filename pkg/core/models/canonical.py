from dataclasses import dataclass
from fractions import Fraction

from core.models.dataset import CategoricalVariable, Dataset
from core.models.partition import Partition, induced_partition


@dataclass(frozen=True)
class CanonicalClass:
    """
    Representative of an indiscernibility class.

    ``canonical_partition`` lists row blocks ordered by descending probability,
    then by smallest row. ``signature`` is the descending probability vector,
    the weaker "same histogram" invariant.
    """

    canonical_partition: tuple[tuple[int, ...], ...]
    signature: tuple[Fraction, ...]


def canonical_class(partition: Partition) -> CanonicalClass:
    ordered = sorted(
        zip(partition.block_probs, partition.blocks),
        key=lambda item: (-item[0], min(item[1])),
    )
    return CanonicalClass(
        canonical_partition=tuple(tuple(sorted(block)) for _, block in ordered),
        signature=tuple(prob for prob, _ in ordered),
    )


def canonicalize(variable: CategoricalVariable, dataset: Dataset) -> CanonicalClass:
    return canonical_class(induced_partition(variable, dataset))


def signature_equal(
    a: CategoricalVariable, b: CategoricalVariable, dataset: Dataset
) -> bool:
    """Marginal reading of indiscernibility: equal histograms up to relabeling."""
    return canonicalize(a, dataset).signature == canonicalize(b, dataset).signature
