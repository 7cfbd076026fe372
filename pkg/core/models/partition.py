from collections.abc import Hashable, Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from core.exceptions import StructuralError
from core.models.dataset import CategoricalVariable, Dataset


def restricted_growth(keys: Iterable[Hashable]) -> tuple[int, ...]:
    numbering: dict[Hashable, int] = {}
    return tuple(numbering.setdefault(key, len(numbering)) for key in keys)


@dataclass(frozen=True)
class Partition:
    """
    Partition of the rows of a dataset.

    ``assignment[r]`` is the block of row ``r``; blocks are numbered by first
    appearance, so two partitions are equal as sets of row blocks exactly when
    their assignments are equal.
    """

    row_weights: tuple[Fraction, ...]
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.row_weights) != len(self.assignment):
            raise StructuralError(
                f"Partition covers {len(self.assignment)} rows, "
                f"weights given for {len(self.row_weights)}"
            )
        object.__setattr__(self, "assignment", restricted_growth(self.assignment))

    @classmethod
    def from_blocks(
        cls, blocks: Iterable[Iterable[int]], row_weights: Sequence[Fraction]
    ) -> "Partition":
        assignment: list[int | None] = [None] * len(row_weights)
        for index, block in enumerate(blocks):
            for row in block:
                if assignment[row] is not None:
                    raise StructuralError(f"Row {row} appears in two blocks")
                assignment[row] = index
        if any(block is None for block in assignment):
            raise StructuralError("Blocks do not cover every row")

        return cls(row_weights=tuple(row_weights), assignment=tuple(assignment))

    @property
    def row_count(self) -> int:
        return len(self.assignment)

    @cached_property
    def blocks(self) -> tuple[frozenset[int], ...]:
        rows: list[list[int]] = [[] for _ in range(max(self.assignment) + 1)]
        for row, block in enumerate(self.assignment):
            rows[block].append(row)
        return tuple(frozenset(block) for block in rows)

    @cached_property
    def block_probs(self) -> tuple[Fraction, ...]:
        probs = [Fraction(0)] * (max(self.assignment) + 1)
        for weight, block in zip(self.row_weights, self.assignment):
            probs[block] += weight
        return tuple(probs)

    @property
    def block_set(self) -> frozenset[frozenset[int]]:
        return frozenset(self.blocks)

    def __len__(self) -> int:
        return len(self.block_probs)


def ensure_same_universe(*partitions: Partition) -> None:
    first = partitions[0]
    for other in partitions[1:]:
        if other.row_weights != first.row_weights:
            raise StructuralError("Partitions are defined over different row universes")


def induced_partition(variable: CategoricalVariable, dataset: Dataset) -> Partition:
    dataset.ensure_member(variable)
    return Partition(row_weights=dataset.row_weights, assignment=variable.labels)


def trivial_partition(dataset: Dataset) -> Partition:
    return Partition(
        row_weights=dataset.row_weights, assignment=(0,) * dataset.row_count
    )


def join(p: Partition, q: Partition) -> Partition:
    """Common refinement: all nonempty pairwise intersections of blocks."""
    ensure_same_universe(p, q)
    return Partition(
        row_weights=p.row_weights, assignment=tuple(zip(p.assignment, q.assignment))
    )


def is_coarser(p: Partition, q: Partition) -> bool:
    """True iff every block of ``q`` lies inside some block of ``p``."""
    ensure_same_universe(p, q)
    container: dict[int, int] = {}
    for p_block, q_block in zip(p.assignment, q.assignment):
        if container.setdefault(q_block, p_block) != p_block:
            return False
    return True
