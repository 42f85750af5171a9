import io
import logging

import pytest

from sylvester.config import RunConfig, load_config
from sylvester.errors import ConfigError
from sylvester.log import configure_logging, get_logger


def test_defaults(monkeypatch):
    for key in ("SYLVESTER_SIEVE_LIMIT", "SYLVESTER_C_TERMS", "SYLVESTER_THREADS"):
        monkeypatch.delenv(key, raising=False)
    config = load_config()
    assert config.sieve_limit == 4_000_200
    assert config.c_terms == 1_000_000
    assert config.chunk_size == 65_536
    assert config.precision_guard == 1e-12
    assert config.writes_stdout
    assert config.threads >= 1


def test_environment_and_override_precedence(monkeypatch):
    monkeypatch.setenv("SYLVESTER_SIEVE_LIMIT", "5000")
    monkeypatch.setenv("SYLVESTER_THREADS", "3")
    config = load_config({"sieve_limit": 9000, "threads": None})
    assert config.sieve_limit == 9000
    assert config.threads == 3


def test_invalid_values_raise_config_error():
    with pytest.raises(ConfigError):
        load_config({"chunk_size": 0})
    with pytest.raises(ConfigError):
        load_config({"sieve_limit": 200, "max_sieve_limit": 100})


def test_require_sieve_for():
    config = RunConfig(sieve_limit=1000)
    config.require_sieve_for(500)
    with pytest.raises(ConfigError):
        config.require_sieve_for(501)


def test_provenance():
    config = RunConfig(sieve_limit=1000, c_terms=5, threads=2)
    assert config.provenance() == {"sieve_limit": 1000, "c_terms": 5, "threads": 2}


def test_tagged_log_lines():
    stream = io.StringIO()
    configure_logging("INFO", stream=stream)
    get_logger("SIEVE").info("Built table")
    get_logger("COMET").debug("hidden")
    assert stream.getvalue() == "[SIEVE] Built table\n"
    configure_logging("WARNING", stream=io.StringIO())
    assert logging.getLogger("sylvester").level == logging.WARNING
