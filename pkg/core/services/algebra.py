import logging
from collections.abc import Iterable
from dataclasses import dataclass
from functools import reduce

from core.constants import CLAMP_TOLERANCE, IDENTITY_LABEL, IDENTITY_NAME
from core.exceptions import StructuralError
from core.models.canonical import CanonicalClass, canonicalize
from core.models.dataset import CategoricalVariable, Dataset
from core.models.partition import Partition, induced_partition, join
from core.models.report import PropertyReport
from core.services.entropy import entropy, joint_entropy, symmetric_uncertainty
from core.services.randgen import sampling_plan, tuples_for
from core.utils.text import encode_pair

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class JointVariable(CategoricalVariable):
    """
    The joint ``A*B``: row ``p`` is labeled with the pair ``(A(p), B(p))``.
    Only realized pairs enter the alphabet.
    """

    parents: tuple[str, str] = ("", "")


def joint(
    a: CategoricalVariable,
    b: CategoricalVariable,
    dataset: Dataset,
    name: str | None = None,
) -> JointVariable:
    dataset.ensure_member(a)
    dataset.ensure_member(b)
    return JointVariable(
        name=name or f"{a.name}*{b.name}",
        labels=tuple(encode_pair(x, y) for x, y in zip(a.labels, b.labels)),
        parents=(a.name, b.name),
    )


def joint_many(
    variables: Iterable[CategoricalVariable], dataset: Dataset
) -> CategoricalVariable:
    """Left fold of ``*``; a single variable is returned unchanged."""
    variables = list(variables)
    if not variables:
        raise StructuralError("The joint of no variables is undefined")
    return reduce(lambda left, right: joint(left, right, dataset), variables)


def identity_variable(dataset: Dataset) -> CategoricalVariable:
    return CategoricalVariable(
        name=IDENTITY_NAME, labels=(IDENTITY_LABEL,) * dataset.row_count
    )


def are_indiscernible(
    a: CategoricalVariable, b: CategoricalVariable, dataset: Dataset
) -> bool:
    return canonicalize(a, dataset) == canonicalize(b, dataset)


def indiscernibility_classes(dataset: Dataset) -> list[list[str]]:
    groups: dict[CanonicalClass, list[str]] = {}
    for name, variable in dataset.columns.items():
        groups.setdefault(canonicalize(variable, dataset), []).append(name)
    return list(groups.values())


class _JointCache:
    def __init__(self, dataset: Dataset) -> None:
        self.dataset = dataset
        identity = identity_variable(dataset)
        self.variables: dict[str, CategoricalVariable] = {
            **dataset.columns,
            identity.name: identity,
        }
        self._joints: dict[tuple[str, ...], CategoricalVariable] = {}
        self._partitions: dict[tuple[str, ...], Partition] = {}

    def variable(self, *names: str) -> CategoricalVariable:
        if len(names) == 1:
            return self.variables[names[0]]
        if names not in self._joints:
            self._joints[names] = joint(
                self.variable(*names[:-1]), self.variables[names[-1]], self.dataset
            )
        return self._joints[names]

    def partition(self, *names: str) -> Partition:
        if names not in self._partitions:
            if len(names) == 1:
                self._partitions[names] = induced_partition(
                    self.variables[names[0]], self.dataset
                )
            else:
                self._partitions[names] = join(
                    self.partition(*names[:-1]), self.partition(names[-1])
                )
        return self._partitions[names]

    def canonical(self, variable: CategoricalVariable) -> CanonicalClass:
        return canonicalize(variable, self.dataset)


def check_monoid_laws(
    dataset: Dataset, samples: int | None = None, seed: int | None = None
) -> PropertyReport:
    """
    Associativity, commutativity, identity and well-definedness of ``*`` on
    indiscernibility classes, all by exact canonical-form equality. The pool
    of variables is the dataset's columns plus Φ.
    """
    cache = _JointCache(dataset)
    pool = list(cache.variables)
    report = PropertyReport("commutative monoid laws")

    associativity = report.check("associativity")
    commutativity = report.check("commutativity")
    identity = report.check("identity")
    well_defined = report.check("well-definedness")
    joint_is_join = report.check("joint partition is join")
    joint_entropy_matches = report.check("joint entropy", tolerance=CLAMP_TOLERANCE)

    exhaustive, count, seed = sampling_plan(len(dataset.names), samples, seed)
    for a, b, c in tuples_for(pool, 3, exhaustive, count, seed):
        left = cache.canonical(joint(cache.variable(a, b), cache.variable(c), dataset))
        right = cache.canonical(joint(cache.variable(a), cache.variable(b, c), dataset))
        associativity.exact(
            (a, b, c), holds=left == right, lhs="(A*B)*C", rhs="A*(B*C)"
        )

        ab, ba = cache.variable(a, b), cache.variable(b, a)
        commutativity.exact(
            (a, b),
            holds=cache.canonical(ab) == cache.canonical(ba),
            lhs="A*B",
            rhs="B*A",
        )

        with_identity = cache.variable(a, IDENTITY_NAME)
        identity.exact(
            (a, IDENTITY_NAME),
            holds=cache.canonical(with_identity) == cache.canonical(cache.variable(a)),
            lhs="A*Φ",
            rhs="A",
        )

        relabeled = joint(
            cache.variable(a).relabeled(), cache.variable(b).relabeled(), dataset
        )
        well_defined.exact(
            (a, b),
            holds=cache.canonical(relabeled) == cache.canonical(ab),
            lhs="A'*B'",
            rhs="A*B",
        )

        joint_partition = induced_partition(ab, dataset)
        joint_is_join.exact(
            (a, b),
            holds=joint_partition == cache.partition(a, b),
            lhs="partition(A*B)",
            rhs="partition(A) v partition(B)",
        )
        joint_entropy_matches.equal(
            (a, b),
            entropy(joint_partition),
            joint_entropy(cache.partition(a), cache.partition(b)),
        )

    logger.info(
        "Monoid laws: %d checks, %d violations", report.checked, report.violations
    )
    return report


def check_contractivity(
    dataset: Dataset, samples: int | None = None, seed: int | None = None
) -> PropertyReport:
    """d(X*Y, Z*W) <= d(X, Z) + d(Y, W) over quadruples of columns and Φ."""
    cache = _JointCache(dataset)
    pool = list(cache.variables)
    report = PropertyReport("contractivity of the joint")
    contractive = report.check("contractivity")

    distances: dict[frozenset[tuple[str, ...]], float] = {}

    def distance(first: tuple[str, ...], second: tuple[str, ...]) -> float:
        key = frozenset((first, second))
        if key not in distances:
            distances[key] = 1.0 - symmetric_uncertainty(
                cache.partition(*first), cache.partition(*second)
            )
        return distances[key]

    exhaustive, count, seed = sampling_plan(len(dataset.names), samples, seed)
    for x, y, z, w in tuples_for(pool, 4, exhaustive, count, seed):
        contractive.at_most(
            (x, y, z, w),
            distance((x, y), (z, w)),
            distance((x,), (z,)) + distance((y,), (w,)),
        )

    logger.info(
        "Contractivity: %d quadruples, worst slack %s",
        contractive.checked,
        contractive.worst_slack,
    )
    if contractive.first_violation:
        logger.warning(
            "Contractivity violated: %s", contractive.first_violation.describe()
        )
    return report
