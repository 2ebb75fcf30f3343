import json
import logging
import os

import pytest

from main import configure_logging, main
from settings import settings
from settings.settings import (
    ENV_LOG_LEVEL,
    EXIT_BUDGET,
    EXIT_DOMAIN_ERROR,
    EXIT_INFEASIBLE,
    EXIT_INPUT_ERROR,
    EXIT_OK,
)

PACKAGE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
EXAMPLES = os.path.join(PACKAGE_DIR, "settings", "targets", "example")


def example(name):
    return os.path.join(EXAMPLES, name)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


#------------------------------ eig ----------------------------------

def test_eig(capsys):
    code, out, _ = run(capsys, "eig", example("matrix_s.json"))
    assert code == EXIT_OK
    document = json.loads(out)
    assert document["field"] == {"GF": 2}
    assert document["rank"] == 1
    assert document["hom_factors"] == [{"alpha": [0, 1], "e": 0}]
    assert document["col_indices"] == [] and document["row_indices"] == []


def test_eig_field_flag_must_agree(capsys):
    code, _, err = run(capsys, "eig", example("matrix_s.json"), "--field", "Q")
    assert code == EXIT_INPUT_ERROR
    assert err.startswith("error: field mismatch")


#------------------------------ check ----------------------------------

def test_check_feasible(capsys):
    code, out, _ = run(capsys, "check", "--matrix", example("matrix_s.json"), "--target", example("target_full.json"))
    assert code == EXIT_OK
    document = json.loads(out)
    assert document["feasible"] is True
    assert document["witness"]["b"] == [0]


def test_check_infeasible(capsys):
    code, out, _ = run(capsys, "check", "--matrix", example("matrix_s.json"),
                       "--target", example("target_degree_sum.json"))
    assert code == EXIT_INFEASIBLE
    assert json.loads(out)["violations"] == ["degree-sum"]


def test_check_partial_targets(capsys):
    code, out, _ = run(capsys, "check", "--matrix", example("matrix_s.json"),
                       "--target", example("target_finite.json"), "--theorem", "finite")
    assert code == EXIT_OK
    assert json.loads(out)["theorem"] == "finite"
    code, _, err = run(capsys, "check", "--matrix", example("matrix_s.json"),
                       "--target", example("target_finite.json"))
    assert code == EXIT_INPUT_ERROR
    assert "hom_factors" in err


def test_check_existence(capsys):
    code, out, _ = run(capsys, "check", "--theorem", "exists", "--target", example("eigenstructure_n2.json"))
    assert code == EXIT_OK
    assert json.loads(out)["evaluated"] == ["gamma1-at-infinity", "index-sum"]


def test_check_needs_matrix(capsys):
    code, _, err = run(capsys, "check", "--target", example("target_full.json"))
    assert code == EXIT_INPUT_ERROR
    assert "--matrix" in err


def test_check_pencil_needs_degree_one(capsys, tmp_path):
    matrix = tmp_path / "quadratic.json"
    matrix.write_text(json.dumps({"field": "Q", "rows": 1, "cols": 2, "entries": [[[0, 0, 1], [1]]]}))
    target = tmp_path / "target.json"
    target.write_text(json.dumps({"rank": 1, "hom_factors": [{"alpha": [1], "e": 0}],
                                  "col_indices": [2], "row_indices": [0]}))
    code, _, _ = run(capsys, "check", "--matrix", str(matrix), "--target", str(target), "--theorem", "pencil")
    assert code == EXIT_DOMAIN_ERROR


def test_documents_resolve_under_target_settings(capsys, monkeypatch):
    monkeypatch.chdir(PACKAGE_DIR)
    code, _, _ = run(capsys, "check", "--matrix", "example/matrix_s.json", "--target", "example/target_full.json")
    assert code == EXIT_OK


#------------------------------ realize ----------------------------------

def test_realize_nilpotent_pencil(capsys):
    code, out, _ = run(capsys, "realize", "--target", example("eigenstructure_n2.json"))
    assert code == EXIT_OK
    document = json.loads(out)
    assert document["status"] == "realized"
    assert document["matrix"]["entries"] == [[[1], [0, 1]], [[], [1]]]


def test_realize_search_needs_finite_field(capsys):
    code, _, _ = run(capsys, "realize", "--target", example("eigenstructure_n2.json"), "--search")
    assert code == EXIT_DOMAIN_ERROR


def test_realize_does_not_take_jobs(capsys):
    with pytest.raises(SystemExit) as exit_info:
        main(["realize", "--jobs", "2", "--target", example("eigenstructure_n2.json")])
    assert exit_info.value.code == 2


def test_realize_completion_by_search(capsys):
    code, out, _ = run(capsys, "realize", "--search", "--matrix", example("matrix_s.json"),
                       "--target", example("target_full.json"))
    assert code == EXIT_OK
    assert json.loads(out)["matrix"]["entries"] == [[[]]]


def test_realize_impossible_target(capsys, tmp_path):
    target = tmp_path / "target.json"
    target.write_text(json.dumps({"field": "Q", "rows": 1, "cols": 1, "degree": 1, "rank": 1,
                                  "hom_factors": [{"alpha": [1], "e": 1}],
                                  "col_indices": [], "row_indices": []}))
    code, out, _ = run(capsys, "realize", "--target", str(target))
    assert code == EXIT_INFEASIBLE
    assert json.loads(out) == {"status": "infeasible", "violations": ["gamma1-at-infinity"]}


#------------------------------ oracle ----------------------------------

def test_oracle_writes_report(capsys, tmp_path):
    code, out, _ = run(capsys, "oracle", "gf2 m=1 n=1 z=1 d=1", "--report-dir", str(tmp_path / "reports"))
    assert code == EXIT_OK
    document = json.loads(out)
    assert document["matrices"] == 2
    assert document["mismatch_count"] == 0
    assert (tmp_path / "reports" / settings.ORACLE_CSV_FILE_NAME).is_file()


def test_oracle_budget(capsys):
    code, _, err = run(capsys, "oracle", "gf2 m=1 n=1 z=1 d=1", "--budget", "5")
    assert code == EXIT_BUDGET
    assert "exceeds budget 5" in err


#------------------------------ Input Errors ----------------------------------

def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "eig", str(tmp_path / "absent.json"))
    assert code == EXIT_INPUT_ERROR
    assert "cannot read" in err


def test_malformed_json(capsys, tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text('{"rows": 1,\n "cols": }')
    code, _, err = run(capsys, "eig", str(broken))
    assert code == EXIT_INPUT_ERROR
    assert "line 2" in err


def test_zero_dimensions_are_rejected(capsys, tmp_path):
    matrix = tmp_path / "empty.json"
    matrix.write_text(json.dumps({"rows": 0, "cols": 1, "entries": []}))
    code, _, _ = run(capsys, "eig", str(matrix))
    assert code == EXIT_INPUT_ERROR


def test_zero_matrix_is_a_domain_error(capsys, tmp_path):
    matrix = tmp_path / "zero.json"
    matrix.write_text(json.dumps({"rows": 1, "cols": 1, "entries": [[[]]]}))
    code, _, _ = run(capsys, "eig", str(matrix))
    assert code == EXIT_DOMAIN_ERROR


#------------------------------ Settings ----------------------------------

@pytest.mark.parametrize("raw, expected", [(None, 9), ("", 9), ("abc", 9), ("0", 9), ("7", 7)])
def test_int_from_env(monkeypatch, raw, expected):
    if raw is None:
        monkeypatch.delenv("EIGENCOMPLETE_TEST_VALUE", raising=False)
    else:
        monkeypatch.setenv("EIGENCOMPLETE_TEST_VALUE", raw)
    assert settings._int_from_env("EIGENCOMPLETE_TEST_VALUE", 9) == expected


@pytest.mark.parametrize("verbosity, raw, expected", [
    (0, None, "WARNING"),
    (0, "info", "INFO"),
    (0, "loud", "WARNING"),
    (1, "error", "INFO"),
    (2, "error", "DEBUG"),
])
def test_log_level_from_env(monkeypatch, verbosity, raw, expected):
    levels = []
    monkeypatch.setattr(logging, "basicConfig", lambda **kwargs: levels.append(kwargs["level"]))
    if raw is None:
        monkeypatch.delenv(ENV_LOG_LEVEL, raising=False)
    else:
        monkeypatch.setenv(ENV_LOG_LEVEL, raw)
    configure_logging(verbosity)
    assert levels == [expected]
