import pytest

from core.cli import cli
from core.models.run import CheckRun
from core.models.report import PropertyReport
from core.services.metric import check_similarity_axioms
from core.services.run import RunService


def test_record_passing_and_failing_runs(
    db_service, internship, triangle_counterexample
):
    with db_service.db_session() as db_session:
        service = RunService(db_session)
        passing = service.record(
            "check-metric", "fixture:internship", check_similarity_axioms(internship)
        )
        failing = service.record(
            "check-metric",
            "counterexample",
            check_similarity_axioms(triangle_counterexample),
        )

        assert passing.status == "pass"
        assert passing.witness is None
        assert passing.checked > 0
        assert failing.status == "FAIL"
        assert failing.violations > 0
        assert "lhs=" in failing.witness
        assert failing.worst_slack < 0


def test_recent_runs_newest_first(db_service):
    with db_service.db_session() as db_session:
        service = RunService(db_session)
        for command in ("check-monoid", "check-metric", "check-monoid"):
            service.record(command, "source", PropertyReport(command))

        recent = service.get_recent()
        assert [run.command for run in recent] == [
            "check-monoid",
            "check-metric",
            "check-monoid",
        ]
        ids = [run.id for run in recent]
        assert ids == sorted(ids, reverse=True)
        assert len(service.get_recent(command="check-monoid")) == 2
        assert len(service.get_recent(limit=1)) == 1


def test_rollback_on_error(db_service):
    with db_service.db_session() as db_session:
        RunService(db_session).record("check-metric", "kept", PropertyReport("x"))

    with pytest.raises(RuntimeError):
        with db_service.db_session() as db_session:
            db_session.add(
                CheckRun(command="check-metric", source="lost", passed=True)
            )
            raise RuntimeError("interrupted")

    with db_service.db_session() as db_session:
        assert [run.source for run in RunService(db_session).get_recent()] == ["kept"]


def test_cli_records_and_lists_runs(capsys, db_service):
    assert cli.run(["check-monoid", "fixture:indiscernibles", "--record"]) == 0
    assert cli.run(["runs"]) == 0

    out = capsys.readouterr().out
    listed = [line for line in out.splitlines() if line.startswith("#")]
    assert len(listed) == 1
    assert "\tcheck-monoid\tpass\t" in listed[0]
    assert listed[0].endswith("fixture:indiscernibles")


def test_runs_when_nothing_was_recorded(capsys, db_service):
    assert cli.run(["runs", "--check", "check-metric"]) == 0
    assert "No recorded runs" in capsys.readouterr().out
