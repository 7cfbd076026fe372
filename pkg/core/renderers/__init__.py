from collections.abc import Sequence

from core.models.contingency import ContingencyTable
from core.models.report import PropertyReport
from core.models.run import CheckRun
from core.services.metric import NonDiscretenessStep
from core.utils.number import format_value

PASS, FAIL = "pass", "FAIL"


def values_renderer(
    values: Sequence[tuple[str, float | None]], full: bool = False
) -> str:
    return "\n".join(
        f"{label}: {'undefined' if value is None else format_value(value, full)}"
        for label, value in values
    )


def ranking_renderer(
    class_name: str, ranking: Sequence[tuple[str, float]], full: bool = False
) -> str:
    lines = [f"SU against {class_name}"]
    for position, (name, value) in enumerate(ranking, start=1):
        lines.append(f"{position}\t{name}\t{format_value(value, full)}")
    return "\n".join(lines)


def contingency_renderer(
    table: ContingencyTable, row_count: int, x_name: str, y_name: str
) -> str:
    """
    Counts with ``x`` categories across and ``y`` categories down. Masses are
    scaled by ``row_count``, which gives integers for empirical datasets.
    """
    header = ["--", *(f"{x_name}, {x}" for x in table.row_alphabet)]
    lines = ["\t".join(header)]
    scaled = table.scaled(row_count)
    for j, y in enumerate(table.col_alphabet):
        cells = [str(scaled[i][j]) for i in range(len(table.row_alphabet))]
        lines.append("\t".join([f"{y_name}, {y}", *cells]))
    return "\n".join(lines)


def classes_renderer(classes: Sequence[Sequence[str]]) -> str:
    return "\n".join(
        f"class {index}: {', '.join(names)}"
        for index, names in enumerate(classes, start=1)
    )


def report_renderer(report: PropertyReport, full: bool = False) -> str:
    status = PASS if report.passed else FAIL
    lines = [
        f"{report.title}: {status} "
        f"({report.checked} checks, {report.violations} violations)"
    ]
    width = max((len(name) for name in report.checks), default=0)
    for name, check in report.checks.items():
        worst = (
            "-" if check.worst_slack is None else format_value(check.worst_slack, full)
        )
        line = (
            f"  {PASS if check.passed else FAIL}  {name:<{width}}  "
            f"checked={check.checked} worst_slack={worst}"
        )
        if check.exercised:
            line += f" exercised={check.exercised}"
        lines.append(line)
        if check.first_violation:
            lines.append(f"        witness {check.first_violation.describe()}")
    return "\n".join(lines)


def demo_renderer(steps: Sequence[NonDiscretenessStep], full: bool = False) -> str:
    lines = ["n\tepsilon\tdistance"]
    for step in steps:
        lines.append(
            f"{step.n}\t{format_value(step.epsilon, full)}\t"
            f"{format_value(step.distance, full)}"
        )
    return "\n".join(lines)


def runs_renderer(runs: Sequence[CheckRun]) -> str:
    if not runs:
        return "No recorded runs"

    lines = []
    for run in runs:
        worst = "-" if run.worst_slack is None else format_value(run.worst_slack)
        lines.append(
            f"#{run.id}\t{run.created_at:%Y-%m-%d %H:%M:%S}\t{run.command}\t"
            f"{run.status}\t{run.checked}\t{run.violations}\t{worst}\t{run.source}"
        )
    return "\n".join(lines)
