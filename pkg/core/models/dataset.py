from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from types import MappingProxyType

from core.exceptions import ColumnLookupError, NameCollisionError, StructuralError
from core.utils.text import normalize_label


@dataclass(frozen=True)
class CategoricalVariable:
    name: str
    labels: tuple[str, ...]

    @classmethod
    def from_labels(cls, name: str, labels: Iterable[str]) -> "CategoricalVariable":
        return cls(
            name=normalize_label(name),
            labels=tuple(normalize_label(label) for label in labels),
        )

    @cached_property
    def alphabet(self) -> tuple[str, ...]:
        return tuple(dict.fromkeys(self.labels))

    @property
    def is_constant(self) -> bool:
        return len(self.alphabet) <= 1

    def __len__(self) -> int:
        return len(self.labels)

    def relabeled(
        self, mapping: Mapping[str, str] | None = None, name: str | None = None
    ) -> "CategoricalVariable":
        """
        Copy under a bijection of categories.
        Without a mapping the alphabet is sent to ``r0, r1, ...`` in reverse
        first-occurrence order.
        """
        if mapping is None:
            mapping = {
                label: f"r{index}"
                for index, label in enumerate(reversed(self.alphabet))
            }
        if len(set(mapping[label] for label in self.alphabet)) != len(self.alphabet):
            raise StructuralError(f"Relabeling of `{self.name}` is not injective")

        return CategoricalVariable(
            name=name or self.name,
            labels=tuple(mapping[label] for label in self.labels),
        )


def uniform_weights(row_count: int) -> tuple[Fraction, ...]:
    return (Fraction(1, row_count),) * row_count


@dataclass(frozen=True)
class Dataset:
    """
    Finite sample space of weighted rows with named categorical columns.
    Row weights default to the uniform empirical measure.
    """

    row_count: int
    columns: Mapping[str, CategoricalVariable] = field(default_factory=dict)
    row_weights: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        if self.row_count < 1:
            raise StructuralError("A dataset needs at least one row")

        weights = self.row_weights or uniform_weights(self.row_count)
        if len(weights) != self.row_count:
            raise StructuralError(
                f"Expected {self.row_count} row weights, got {len(weights)}"
            )
        if any(weight <= 0 for weight in weights) or sum(weights) != 1:
            raise StructuralError("Row weights must be positive and sum to 1")

        for name, variable in self.columns.items():
            if name != variable.name:
                raise StructuralError(
                    f"Column key `{name}` does not match variable `{variable.name}`"
                )
            if len(variable) != self.row_count:
                raise StructuralError(
                    f"Column `{name}` has {len(variable)} entries, "
                    f"expected {self.row_count}"
                )

        object.__setattr__(self, "row_weights", tuple(Fraction(w) for w in weights))
        object.__setattr__(self, "columns", MappingProxyType(dict(self.columns)))

    @classmethod
    def from_columns(
        cls,
        columns: Iterable[CategoricalVariable],
        row_weights: Sequence[Fraction] = (),
    ) -> "Dataset":
        columns = list(columns)
        if not columns:
            raise StructuralError("Cannot infer the row count without columns")

        by_name: dict[str, CategoricalVariable] = {}
        for variable in columns:
            if variable.name in by_name:
                raise NameCollisionError(f"Duplicate column name `{variable.name}`")
            by_name[variable.name] = variable

        return cls(
            row_count=len(columns[0]),
            columns=by_name,
            row_weights=tuple(row_weights),
        )

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.columns)

    def column(self, name: str) -> CategoricalVariable:
        try:
            return self.columns[name]
        except KeyError:
            raise ColumnLookupError(name) from None

    def select(self, names: Iterable[str]) -> "Dataset":
        return Dataset(
            row_count=self.row_count,
            columns={name: self.column(name) for name in names},
            row_weights=self.row_weights,
        )

    def with_column(self, variable: CategoricalVariable) -> "Dataset":
        if variable.name in self.columns:
            raise NameCollisionError(f"Duplicate column name `{variable.name}`")

        return Dataset(
            row_count=self.row_count,
            columns={**self.columns, variable.name: variable},
            row_weights=self.row_weights,
        )

    def permuted_rows(self, order: Sequence[int]) -> "Dataset":
        if sorted(order) != list(range(self.row_count)):
            raise StructuralError("Row order must be a permutation of the rows")

        return Dataset(
            row_count=self.row_count,
            columns={
                name: CategoricalVariable(
                    name=name, labels=tuple(variable.labels[i] for i in order)
                )
                for name, variable in self.columns.items()
            },
            row_weights=tuple(self.row_weights[i] for i in order),
        )

    def ensure_member(self, variable: CategoricalVariable) -> None:
        if len(variable) != self.row_count:
            raise StructuralError(
                f"Variable `{variable.name}` has {len(variable)} entries, "
                f"dataset has {self.row_count} rows"
            )
