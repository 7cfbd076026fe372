import os

# the engine is built on import, so this must precede any `core` import
os.environ["DATABASE_URL"] = "sqlite://"
os.environ.pop("RECORD_RUNS", None)

import pytest  # noqa: E402

from core.models.dataset import CategoricalVariable, Dataset  # noqa: E402
from core.services.db import DBService  # noqa: E402
from core.services.ingest import load_fixture  # noqa: E402


@pytest.fixture(scope="session")
def internship() -> Dataset:
    return load_fixture("internship")


@pytest.fixture(scope="session")
def indiscernibles() -> Dataset:
    return load_fixture("indiscernibles")


@pytest.fixture
def triangle_counterexample() -> Dataset:
    """X and Z independent halvings of 4 rows, Y their joint."""
    return Dataset.from_columns(
        [
            CategoricalVariable("X", ("a", "a", "b", "b")),
            CategoricalVariable("Y", ("aa", "ab", "ba", "bb")),
            CategoricalVariable("Z", ("a", "b", "a", "b")),
        ]
    )


@pytest.fixture
def db_service():
    service = DBService()
    service.create_tables()
    yield service
    service.drop_tables()
