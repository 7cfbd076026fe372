from dataclasses import dataclass
from fractions import Fraction

from core.models.dataset import CategoricalVariable, Dataset


@dataclass(frozen=True)
class ContingencyTable:
    row_alphabet: tuple[str, ...]
    col_alphabet: tuple[str, ...]
    counts: tuple[tuple[Fraction, ...], ...]

    @property
    def row_marginals(self) -> tuple[Fraction, ...]:
        return tuple(sum(row, Fraction(0)) for row in self.counts)

    @property
    def col_marginals(self) -> tuple[Fraction, ...]:
        return tuple(
            sum((row[j] for row in self.counts), Fraction(0))
            for j in range(len(self.col_alphabet))
        )

    @property
    def total(self) -> Fraction:
        return sum(self.row_marginals, Fraction(0))

    def cell(self, x: str, y: str) -> Fraction:
        return self.counts[self.row_alphabet.index(x)][self.col_alphabet.index(y)]

    def conditional(self, x: str, y: str) -> Fraction:
        j = self.col_alphabet.index(y)
        return self.cell(x, y) / self.col_marginals[j]

    def scaled(self, factor: int) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(mass * factor for mass in row) for row in self.counts)


def contingency(
    x: CategoricalVariable, y: CategoricalVariable, dataset: Dataset
) -> ContingencyTable:
    dataset.ensure_member(x)
    dataset.ensure_member(y)

    row_index = {label: i for i, label in enumerate(x.alphabet)}
    col_index = {label: j for j, label in enumerate(y.alphabet)}
    grid = [[Fraction(0)] * len(y.alphabet) for _ in x.alphabet]
    for weight, x_label, y_label in zip(dataset.row_weights, x.labels, y.labels):
        grid[row_index[x_label]][col_index[y_label]] += weight

    return ContingencyTable(
        row_alphabet=x.alphabet,
        col_alphabet=y.alphabet,
        counts=tuple(tuple(row) for row in grid),
    )
