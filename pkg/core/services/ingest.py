"""
CSV datasets in, CSV datasets and distance matrices out.

Datasets are read as RFC 4180 CSV with a mandatory header. Labels are NFC
normalized, so the same text typed with combining marks lands in the same
category. Matrices are written with 17 significant digits.
"""
import csv
import enum
import io
import json
import logging
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import TextIO

import numpy as np

from core.constants import NA_LABEL
from core.exceptions import CsvParseError, EmptyDatasetError, NameCollisionError
from core.models.dataset import CategoricalVariable, Dataset
from core.services.metric import DISTANCE, DistanceMatrix
from core.utils.number import format_full
from core.utils.text import normalize_label

logger = logging.getLogger(__name__)

FIXTURES_PACKAGE = "core.fixtures"

STDIN = "-"


class NaPolicy(str, enum.Enum):
    KEEP = "keep"
    DROP = "drop"


class MatrixFormat(str, enum.Enum):
    TSV = "tsv"
    JSON = "json"


@dataclass(frozen=True)
class CsvSpec:
    delimiter: str = ","
    encoding: str = "utf-8"
    na_policy: NaPolicy = NaPolicy.KEEP


DEFAULT_SPEC = CsvSpec()


def _is_missing(cell: str) -> bool:
    return cell == "" or cell == NA_LABEL


def _parse(stream: TextIO, spec: CsvSpec, source: str) -> Dataset:
    reader = csv.reader(stream, delimiter=spec.delimiter)
    try:
        header = next(reader, None)
        while header is not None and not any(cell.strip() for cell in header):
            header = next(reader, None)
        if header is None:
            raise EmptyDatasetError(f"{source} is empty")

        names = [normalize_label(cell.strip()) for cell in header]
        seen: set[str] = set()
        for name in names:
            if name in seen:
                raise NameCollisionError(f"Duplicate column name `{name}` in {source}")
            seen.add(name)

        rows: list[list[str]] = []
        dropped = 0
        for record in reader:
            # blank lines; a row of empty cells is a row of missing values
            if not record:
                continue
            if len(record) != len(names):
                raise CsvParseError(
                    f"expected {len(names)} fields, found {len(record)}",
                    line_number=reader.line_num,
                )
            if any(_is_missing(cell) for cell in record):
                if spec.na_policy is NaPolicy.DROP:
                    dropped += 1
                    continue
                record = [NA_LABEL if _is_missing(cell) else cell for cell in record]
            rows.append(record)
    except csv.Error as exc:
        raise CsvParseError(str(exc), line_number=reader.line_num) from exc
    except UnicodeDecodeError as exc:
        raise CsvParseError(
            f"{source} is not valid {spec.encoding}: {exc.reason}",
            line_number=reader.line_num + 1,
        ) from exc

    if not rows:
        raise EmptyDatasetError(f"{source} has no data rows")
    if dropped:
        logger.info("Dropped %d rows with missing values from %s", dropped, source)

    logger.debug("Loaded %d rows x %d columns from %s", len(rows), len(names), source)
    return Dataset.from_columns(
        CategoricalVariable.from_labels(name, (row[index] for row in rows))
        for index, name in enumerate(names)
    )


def _parse_stdin(spec: CsvSpec) -> Dataset:
    buffer = getattr(sys.stdin, "buffer", None)
    if buffer is None:
        return _parse(sys.stdin, spec, "<stdin>")

    stream = io.TextIOWrapper(buffer, encoding=spec.encoding, newline="")
    try:
        return _parse(stream, spec, "<stdin>")
    finally:
        stream.detach()


def load_csv(
    source: str | Path | TextIO, spec: CsvSpec = DEFAULT_SPEC
) -> Dataset:
    """
    :param source: a path, ``"-"`` for standard input, or an open text stream
    :param spec: dialect and missing-value policy
    :return: dataset with uniform row weights
    """
    spec = CsvSpec(spec.delimiter, spec.encoding, NaPolicy(spec.na_policy))
    if isinstance(source, (str, Path)) and str(source) == STDIN:
        return _parse_stdin(spec)
    if isinstance(source, (str, Path)):
        with open(source, encoding=spec.encoding, newline="") as stream:
            return _parse(stream, spec, str(source))
    return _parse(source, spec, getattr(source, "name", "<stream>"))


def loads_csv(text: str, spec: CsvSpec = DEFAULT_SPEC) -> Dataset:
    return load_csv(io.StringIO(text, newline=""), spec)


def save_csv(dataset: Dataset, spec: CsvSpec = DEFAULT_SPEC) -> str:
    buffer = io.StringIO(newline="")
    writer = csv.writer(buffer, delimiter=spec.delimiter, lineterminator="\n")
    writer.writerow(dataset.names)
    columns = [dataset.column(name).labels for name in dataset.names]
    writer.writerows(zip(*columns))
    return buffer.getvalue()


def load_fixture(name: str, spec: CsvSpec = DEFAULT_SPEC) -> Dataset:
    spec = CsvSpec(spec.delimiter, spec.encoding, NaPolicy(spec.na_policy))
    file_name = name if name.endswith(".csv") else f"{name}.csv"
    resource = resources.files(FIXTURES_PACKAGE) / file_name
    if not resource.is_file():
        raise FileNotFoundError(
            f"No bundled fixture named `{name}`, "
            f"available: {', '.join(fixture_names())}"
        )
    with resource.open(encoding="utf-8", newline="") as stream:
        return _parse(stream, spec, f"fixture:{file_name}")


def fixture_names() -> list[str]:
    return sorted(
        entry.name.removesuffix(".csv")
        for entry in resources.files(FIXTURES_PACKAGE).iterdir()
        if entry.name.endswith(".csv")
    )


def save_matrix(
    matrix: DistanceMatrix, fmt: MatrixFormat | str = MatrixFormat.TSV
) -> str:
    fmt = MatrixFormat(fmt)
    if fmt is MatrixFormat.JSON:
        return json.dumps(
            {
                "names": list(matrix.names),
                "kind": matrix.kind,
                "values": [
                    [float(value) for value in row]
                    for row in matrix.values
                ],
            },
            ensure_ascii=False,
            indent=2,
        )

    lines = ["\t".join([matrix.kind, *matrix.names])]
    for name, row in zip(matrix.names, matrix.values):
        lines.append("\t".join([name, *(format_full(value) for value in row)]))
    return "\n".join(lines) + "\n"


def load_matrix(
    text: str, fmt: MatrixFormat | str = MatrixFormat.TSV
) -> DistanceMatrix:
    fmt = MatrixFormat(fmt)
    if fmt is MatrixFormat.JSON:
        payload = json.loads(text)
        return DistanceMatrix(
            names=tuple(payload["names"]),
            values=np.array(payload["values"], dtype=float),
            kind=payload.get("kind", DISTANCE),
        )

    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise CsvParseError("empty matrix")
    header = lines[0].split("\t")
    names = tuple(header[1:])
    values = []
    for number, line in enumerate(lines[1:], start=2):
        cells = line.split("\t")
        if len(cells) != len(names) + 1:
            raise CsvParseError(
                f"expected {len(names) + 1} fields, found {len(cells)}",
                line_number=number,
            )
        values.append([float(cell) for cell in cells[1:]])
    return DistanceMatrix(
        names=names, values=np.array(values, dtype=float), kind=header[0] or DISTANCE
    )
