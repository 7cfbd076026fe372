import io
import json
import sys

import pytest

from core.cli import cli
from core.constants import EXIT_OK, EXIT_USAGE, EXIT_VIOLATION
from core.services.ingest import loads_csv

COUNTEREXAMPLE_CSV = "X,Y,Z\na,aa,a\na,ab,b\nb,ba,a\nb,bb,b\n"


def run(capsys, *argv: str) -> tuple[int, str]:
    code = cli.run(list(argv))
    return code, capsys.readouterr().out


def test_su_reports_every_quantity(capsys):
    code, out = run(capsys, "su", "fixture:internship", "Creativity", "GotHired")

    assert code == EXIT_OK
    assert "SU(Creativity, GotHired): 0.4627" in out
    assert [line.split(":")[0] for line in out.splitlines()] == [
        "SU(Creativity, GotHired)",
        "d(Creativity, GotHired)",
        "R(Creativity, GotHired)",
        "MI(Creativity, GotHired)",
        "H(Creativity)",
        "H(GotHired)",
        "H(Creativity, GotHired)",
    ]


def test_su_full_precision_is_consistent(capsys):
    _, out = run(
        capsys, "su", "fixture:internship", "AttentionType", "GotHired", "--full"
    )
    pairs = (line.split(": ") for line in out.splitlines())
    values = {label: float(value) for label, value in pairs}

    su = values["SU(AttentionType, GotHired)"]
    assert su == pytest.approx(0.0192, abs=5e-5)
    assert su == pytest.approx(1 - values["d(AttentionType, GotHired)"], abs=1e-15)
    ratio = values["R(AttentionType, GotHired)"]
    assert su == pytest.approx(2 * (1 - ratio), abs=1e-12)


def test_su_of_a_column_with_itself(capsys):
    _, out = run(capsys, "su", "fixture:internship", "Neatness", "Neatness")

    assert "SU(Neatness, Neatness): 1.0000" in out
    assert "d(Neatness, Neatness): 0.0000" in out


def test_rank_breaks_ties_by_name(capsys):
    code, out = run(capsys, "rank", "fixture:internship", "GotHired")

    assert code == EXIT_OK
    assert out.splitlines()[1:] == [
        "1\tCreativity\t0.4627",
        "2\tIQuotient\t0.0535",
        "3\tNeatness\t0.0535",
        "4\tPunctuality\t0.0535",
        "5\tAttentionType\t0.0192",
    ]


def test_rank_single_feature(capsys, tmp_path):
    path = tmp_path / "pair.csv"
    path.write_text("a,b\nx,1\ny,2\n", encoding="utf-8")

    _, out = run(capsys, "rank", str(path), "b")
    assert out.splitlines()[1:] == ["1\ta\t1.0000"]


def test_contingency_layout(capsys):
    code, out = run(
        capsys, "contingency", "fixture:internship", "Creativity", "GotHired"
    )

    assert code == EXIT_OK
    assert out.splitlines() == [
        "--\tCreativity, D\tCreativity, S\tCreativity, I",
        "GotHired, N\t1\t4\t6",
        "GotHired, Y\t8\t1\t0",
    ]


def test_classes(capsys):
    _, out = run(capsys, "classes", "fixture:indiscernibles")

    assert out == "class 1: X1, X2\n"


def test_dist_json(capsys):
    code, out = run(capsys, "dist", "fixture:internship", "--format", "json")
    payload = json.loads(out)

    assert code == EXIT_OK
    assert len(payload["names"]) == 6
    hired = payload["names"].index("GotHired")
    creativity = payload["names"].index("Creativity")
    assert payload["values"][hired][creativity] == pytest.approx(1 - 0.4627, abs=5e-5)


def test_dist_subset_to_file(capsys, tmp_path):
    path = tmp_path / "matrix.tsv"

    code, out = run(
        capsys,
        "dist",
        "fixture:internship",
        "--subset",
        "GotHired,Creativity",
        "--similarity",
        "--out",
        str(path),
    )

    assert code == EXIT_OK
    assert out == ""
    assert path.read_text(encoding="utf-8").splitlines()[0] == (
        "similarity\tGotHired\tCreativity"
    )


def test_joint_appends_a_column(capsys):
    code, out = run(capsys, "joint", "fixture:internship", "Creativity", "GotHired")
    dataset = loads_csv(out)

    assert code == EXIT_OK
    assert dataset.names[-1] == "Creativity*GotHired"
    assert len(dataset.column("Creativity*GotHired").alphabet) == 5


def test_stdin_input(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("a,b\nx,p\ny,q\n"))

    _, out = run(capsys, "su", "-", "a", "b")
    assert "SU(a, b): 1.0000" in out


def test_constant_columns_have_no_ratio(capsys, tmp_path):
    path = tmp_path / "constant.csv"
    path.write_text("a,b\nx,y\nx,y\n", encoding="utf-8")

    _, out = run(capsys, "su", str(path), "a", "b")
    assert "R(a, b): undefined" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["su", "fixture:internship", "Creativity", "Salary"],
        ["su", "fixture:nowhere", "a", "b"],
        ["su", "fixture:internship", "Creativity", "GotHired", "--delimiter", ";"],
        ["rank", "fixture:internship"],
        ["check-metric"],
        ["demo-nondiscrete", "--steps", "1"],
        ["unknown-command"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _ = run(capsys, *argv)

    assert code == EXIT_USAGE


@pytest.mark.parametrize(
    "command",
    ["check-metric", "check-monoid", "check-contractivity", "check-lemma2"],
)
def test_checks_pass_on_the_internship_fixture(capsys, command):
    code, out = run(capsys, command, "fixture:internship")

    assert code == EXIT_OK
    assert "FAIL" not in out
    assert "witness" not in out


def test_check_metric_reports_the_triangle_counterexample(capsys, tmp_path):
    path = tmp_path / "counterexample.csv"
    path.write_text(COUNTEREXAMPLE_CSV, encoding="utf-8")

    code, out = run(capsys, "check-metric", str(path))

    assert code == EXIT_VIOLATION
    assert "FAIL  SU: triangle inequality" in out
    assert "witness" in out


def test_random_populations(capsys):
    code, out = run(capsys, "check-lemma2", "--random", "7", "--count", "200")
    assert code == EXIT_OK
    assert "exercised=200" in out

    code, _ = run(
        capsys, "check-monoid", "--random", "3", "--count", "20", "--columns", "3"
    )
    assert code == EXIT_OK


def test_exit_code_follows_printed_witnesses(capsys):
    code, out = run(
        capsys, "check-metric", "--random", "1", "--count", "50", "--seed", "9"
    )

    assert code == (EXIT_VIOLATION if "witness" in out else EXIT_OK)


def test_deterministic_output(capsys):
    argv = ["check-contractivity", "--random", "4", "--count", "5", "--full"]

    assert run(capsys, *argv) == run(capsys, *argv)


def test_demo_nondiscrete(capsys):
    code, out = run(capsys, "demo-nondiscrete", "--steps", "10", "--full")
    rows = [line.split("\t") for line in out.splitlines()[1:]]
    distances = [float(distance) for _, _, distance in rows]

    assert code == EXIT_OK
    assert len(rows) == 10
    assert all(distance > 0 for distance in distances)
    assert all(a > b for a, b in zip(distances, distances[1:]))


def test_undecodable_input_is_reported_without_a_traceback(capsys, caplog, tmp_path):
    path = tmp_path / "latin1.csv"
    path.write_bytes("a,b\ncaf\u00e9,1\n".encode("latin-1"))

    code, out = run(capsys, "su", str(path), "a", "b")

    assert code == EXIT_USAGE
    assert out == ""
    assert "CsvParseError" in caplog.text
    assert all(record.exc_info is None for record in caplog.records)
