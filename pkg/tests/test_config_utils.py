import json
import logging
from fractions import Fraction

import pytest
from pydantic import ValidationError

from config.settings import WORKERS_ENV_VAR, SymCoverConfig, load_config
from data_management.schemas import ConstantRecord, CountRow, CountTable, constant_record
from siegel_veech.constants import rational
from utils.errors import DomainError, SymCoverError
from utils.helpers import chunked, deep_update, fingerprint, format_fraction, is_ascending, parse_number_list
from utils.logger_config import setup_logging


@pytest.fixture(autouse=True)
def _no_workers_env(monkeypatch):
    monkeypatch.delenv(WORKERS_ENV_VAR, raising=False)


def test_default_config():
    config = load_config()
    assert config == SymCoverConfig()
    assert config.counting.workers == 1
    assert config.counting.rows_per_task == 64
    assert config.validation.seed == 20240601


def test_config_file_and_overrides(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"counting": {"rows_per_task": 8}, "logging_config": {"level": "DEBUG"}}),
                    encoding="utf-8")
    config = load_config(path, overrides={"counting": {"workers": 3}})
    assert config.counting.rows_per_task == 8
    assert config.counting.workers == 3
    assert config.counting.float_epsilon == 1e-9
    assert config.logging_config.level == "DEBUG"


def test_workers_from_environment(monkeypatch):
    monkeypatch.setenv(WORKERS_ENV_VAR, "4")
    assert load_config().counting.workers == 4
    monkeypatch.setenv(WORKERS_ENV_VAR, "many")
    assert load_config().counting.workers == 1


def test_invalid_config_values(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"counting": {"workers": 0}}), encoding="utf-8")
    with pytest.raises(ValidationError):
        load_config(path)


def test_deep_update_merges_nested_dicts():
    source = {"a": {"b": 1, "c": 2}, "d": 3}
    assert deep_update(source, {"a": {"c": 5}, "e": 6}) == {"a": {"b": 1, "c": 5}, "d": 3, "e": 6}


def test_parse_number_list():
    assert parse_number_list("500, 1000,3000") == [500.0, 1000.0, 3000.0]
    with pytest.raises(ValueError):
        parse_number_list(" , ")
    with pytest.raises(ValueError):
        parse_number_list("1,x")


def test_small_helpers():
    assert is_ascending([1, 2, 5])
    assert not is_ascending([1, 1])
    assert format_fraction(Fraction(6, 3)) == "2"
    assert format_fraction(Fraction(-3, 4)) == "-3/4"
    assert [list(c) for c in chunked(list(range(5)), 2)] == [[0, 1], [2, 3], [4]]
    assert fingerprint({"b": 1, "a": 2}) == fingerprint({"a": 2, "b": 1})
    assert len(fingerprint({"a": 1})) == 16


def test_error_hierarchy():
    assert issubclass(DomainError, SymCoverError)
    assert issubclass(SymCoverError, ValueError)


def test_setup_logging_to_file(tmp_path):
    log_file = tmp_path / "symcover.log"
    setup_logging("INFO", str(log_file))
    logging.getLogger("symcover.test").info("hello")
    for handler in logging.getLogger().handlers:
        handler.flush()
    assert "hello" in log_file.read_text(encoding="utf-8")
    setup_logging("WARNING")


def test_setup_logging_creates_log_directory(tmp_path):
    log_file = tmp_path / "logs" / "nested" / "run.log"
    handler = setup_logging("DEBUG", str(log_file))
    assert log_file.parent.is_dir()
    assert logging.getLogger().handlers == [handler]
    setup_logging("WARNING")


def test_constant_record_schema():
    record = constant_record("torsion", rational(Fraction(35, 16)), d=2, n=3)
    assert record.coefficient == "35/16"
    assert record.parameters == {"d": 2, "n": 3}
    with pytest.raises(ValidationError):
        ConstantRecord(name="x", coefficient="1/0", tag="1", decimal=0.0)


def test_count_table_requires_ascending_rows():
    record = constant_record("cylinders", rational(2))
    rows = [CountRow(T=10, N=5, N_over_T2=0.05, predicted=3.8, rel_error=0.9),
            CountRow(T=5, N=7, N_over_T2=0.28, predicted=3.8, rel_error=0.9)]
    with pytest.raises(ValidationError):
        CountTable(kind="cylinders", surface="d=1", predicted_constant=record, rows=rows)
