"""
Entropy-family functionals on partitions, in bits.

Probabilities stay exact until a logarithm is taken; sums of log terms use
``math.fsum`` so identities between entropies hold to well under 1e-9.
"""
import logging
import math
from fractions import Fraction
from typing import NewType

from core.constants import IDENTITY_TOLERANCE
from core.exceptions import UndefinedRatioError
from core.models.dataset import CategoricalVariable, Dataset
from core.models.partition import (
    Partition,
    ensure_same_universe,
    induced_partition,
    is_coarser,
    join,
)
from core.models.report import PropertyReport
from core.services.randgen import sampling_plan, tuples_for

logger = logging.getLogger(__name__)

Bits = NewType("Bits", float)


def _bits(value: float) -> Bits:
    # negative round-off and -0.0 both become 0
    return Bits(value if value > 0 else 0.0)


def _plogp(prob: Fraction) -> float:
    # 0 * log 0 = 0
    if prob == 0:
        return 0.0
    p = float(prob)
    return p * math.log2(p)


def entropy(p: Partition) -> Bits:
    return _bits(-math.fsum(_plogp(prob) for prob in p.block_probs))


def variable_entropy(variable: CategoricalVariable, dataset: Dataset) -> Bits:
    return entropy(induced_partition(variable, dataset))


def conditional_entropy(x: Partition, y: Partition) -> Bits:
    """H(x | y) = -sum P(Q & R) log2(P(Q & R) / P(R))."""
    meet = join(x, y)
    given: dict[int, int] = {}
    for meet_block, y_block in zip(meet.assignment, y.assignment):
        given.setdefault(meet_block, y_block)

    terms = []
    for meet_block, mass in enumerate(meet.block_probs):
        ratio = mass / y.block_probs[given[meet_block]]
        if ratio != 1:
            terms.append(float(mass) * math.log2(float(ratio)))
    return _bits(-math.fsum(terms))


def joint_entropy(x: Partition, y: Partition) -> Bits:
    return entropy(join(x, y))


def mutual_information(x: Partition, y: Partition) -> Bits:
    """MI(x | y) = H(x) - H(x | y)."""
    return _bits(entropy(x) - conditional_entropy(x, y))


def mutual_information_joint_form(x: Partition, y: Partition) -> Bits:
    """MI(x | y) = H(x) + H(y) - H(x, y)."""
    return _bits(math.fsum((entropy(x), entropy(y), -joint_entropy(x, y))))


def symmetric_uncertainty(x: Partition, y: Partition) -> float:
    """
    2 MI / (H(x) + H(y)).
    Two constants induce the same trivial partition, so their SU is 1.
    """
    ensure_same_universe(x, y)
    total = entropy(x) + entropy(y)
    if total <= 0:
        return 1.0
    return min(max(2 * mutual_information(x, y) / total, 0.0), 1.0)


def symmetric_uncertainty_joint_form(x: Partition, y: Partition) -> float:
    """2 (1 - H(x, y) / (H(x) + H(y)))."""
    total = entropy(x) + entropy(y)
    if total <= 0:
        return 1.0
    return 2 * (1 - joint_entropy(x, y) / total)


def entropic_ratio(x: Partition, y: Partition) -> float:
    total = entropy(x) + entropy(y)
    if total <= 0:
        raise UndefinedRatioError(
            "Entropic ratio is undefined when both variables are constant"
        )
    return joint_entropy(x, y) / total


def check_pair_identities(
    x: Partition,
    y: Partition,
    names: tuple[str, str] = ("X", "Y"),
    report: PropertyReport | None = None,
) -> PropertyReport:
    """
    Bounds and alternative forms that must agree for any pair:
    0 <= H(x|y) <= H(x) <= H(x,y) <= H(x)+H(y), MI symmetry, both MI forms,
    both SU forms and the entropic-ratio bounds.
    """
    report = report or PropertyReport("pair identities")
    hx, hy = entropy(x), entropy(y)
    hxy = joint_entropy(x, y)
    h_x_given_y = conditional_entropy(x, y)

    bounds = report.check("entropy chain bounds")
    bounds.at_most(names, 0.0, h_x_given_y)
    bounds.at_most(names, h_x_given_y, hx)
    bounds.at_most(names, hx, hxy)
    bounds.at_most(names, hxy, hx + hy)

    report.check("joint entropy decomposition").equal(names, hxy, hy + h_x_given_y)
    report.check("mutual information symmetry").equal(
        names, mutual_information(x, y), mutual_information(y, x)
    )
    report.check("mutual information forms").equal(
        names, mutual_information(x, y), mutual_information_joint_form(x, y)
    )
    report.check("symmetric uncertainty forms").equal(
        names, symmetric_uncertainty(x, y), symmetric_uncertainty_joint_form(x, y)
    )

    if hx + hy > 0:
        ratio = entropic_ratio(x, y)
        ratio_check = report.check("entropic ratio bounds")
        ratio_check.at_most(names, 0.5, ratio)
        ratio_check.at_most(names, ratio, 1.0)
        report.check("symmetric uncertainty from ratio").equal(
            names, symmetric_uncertainty(x, y), 2 * (1 - ratio)
        )
    return report


def check_lemma2(
    x: Partition,
    y: Partition,
    z: Partition,
    names: tuple[str, str, str] = ("X", "Y", "Z"),
    report: PropertyReport | None = None,
) -> PropertyReport:
    """
    Relative-entropy properties of partitions x, y, z:

    a) H(x v y | z) = H(x | z) + H(y | x v z)
    b) x <= y implies H(x | z) <= H(y | z) and H(z | x) >= H(z | y)
    c) x <= y iff H(x | y) = 0
    plus H(x) <= H(x v y) and H(x | y v z) <= min(H(x | y), H(x | z)).
    """
    ensure_same_universe(x, y, z)
    report = report or PropertyReport("relative entropy properties")

    report.check("a: chain rule").equal(
        names,
        conditional_entropy(join(x, y), z),
        conditional_entropy(x, z) + conditional_entropy(y, join(x, z)),
    )

    monotone = report.check("b: conditioned side monotone")
    antitone = report.check("b: conditioning side antitone")
    if is_coarser(x, y):
        monotone.exercised += 1
        antitone.exercised += 1
        monotone.at_most(names, conditional_entropy(x, z), conditional_entropy(y, z))
        antitone.at_most(names, conditional_entropy(z, y), conditional_entropy(z, x))

    refinement = report.check("c: coarser iff zero relative entropy")
    for first, second, pair in ((x, y, names[:2]), (y, x, names[1::-1])):
        coarser = is_coarser(first, second)
        zero = conditional_entropy(first, second) <= IDENTITY_TOLERANCE
        if coarser:
            refinement.exercised += 1
        refinement.exact(
            pair,
            holds=coarser == zero,
            lhs=f"coarser={coarser}",
            rhs=f"zero={zero}",
        )

    report.check("entropy below join entropy").at_most(
        names[:2], entropy(x), entropy(join(x, y))
    )
    y_or_z = join(y, z)
    report.check("conditioning on a join, first").at_most(
        names, conditional_entropy(x, y_or_z), conditional_entropy(x, y)
    )
    report.check("conditioning on a join, second").at_most(
        names, conditional_entropy(x, y_or_z), conditional_entropy(x, z)
    )
    return report


def check_relative_entropy(
    dataset: Dataset, samples: int | None = None, seed: int | None = None
) -> PropertyReport:
    partitions = {
        name: induced_partition(variable, dataset)
        for name, variable in dataset.columns.items()
    }
    report = PropertyReport("relative entropy properties")
    exhaustive, count, seed = sampling_plan(len(partitions), samples, seed)
    for names in tuples_for(list(partitions), 3, exhaustive, count, seed):
        check_lemma2(*(partitions[name] for name in names), names=names, report=report)

    logger.info(
        "Relative entropy properties: %d checks, %d violations",
        report.checked,
        report.violations,
    )
    return report
