from core.models.canonical import CanonicalClass, canonicalize, signature_equal
from core.models.contingency import ContingencyTable, contingency
from core.models.dataset import CategoricalVariable, Dataset
from core.models.partition import (
    Partition,
    induced_partition,
    is_coarser,
    join,
    trivial_partition,
)

__all__ = [
    "CanonicalClass",
    "CategoricalVariable",
    "ContingencyTable",
    "Dataset",
    "Partition",
    "canonicalize",
    "contingency",
    "induced_partition",
    "is_coarser",
    "join",
    "signature_equal",
    "trivial_partition",
]
