class EntropyError(Exception):
    ...


class StructuralError(EntropyError):
    ...


class ColumnLookupError(EntropyError, KeyError):
    def __init__(self, name: str) -> None:
        super().__init__(f"Unknown column `{name}`")
        self.name = name

    def __str__(self) -> str:
        return self.args[0]


class CsvParseError(EntropyError):
    def __init__(self, message: str, line_number: int | None = None) -> None:
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class EmptyDatasetError(EntropyError):
    ...


class NameCollisionError(EntropyError):
    ...


class UndefinedRatioError(EntropyError):
    ...


class ConfigurationError(EntropyError):
    ...
