from pathlib import Path

from core.exceptions import ConfigurationError
from core.models.dataset import Dataset
from core.services.ingest import (
    DEFAULT_SPEC,
    CsvSpec,
    NaPolicy,
    load_csv,
    load_fixture,
)

FIXTURE_PREFIX = "fixture:"


def read_dataset(source: str, delimiter: str = ",", drop_na: bool = False) -> Dataset:
    """
    :param source: path, ``-`` for standard input, or ``fixture:<name>``
    """
    spec = CsvSpec(
        delimiter=delimiter, na_policy=NaPolicy.DROP if drop_na else NaPolicy.KEEP
    )
    if source.startswith(FIXTURE_PREFIX):
        if spec.delimiter != DEFAULT_SPEC.delimiter:
            raise ConfigurationError(
                f"Bundled fixtures are comma separated, cannot read {source} "
                f"with delimiter `{delimiter}`"
            )
        return load_fixture(source.removeprefix(FIXTURE_PREFIX), spec)

    return load_csv(source, spec)


def write_output(text: str, out: str | None = None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        print(text, end="")
