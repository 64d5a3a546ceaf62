import pytest

from modulilab.shared import config
from modulilab.shared.config import Config, RunConfig, is_odd_prime
from modulilab.shared.errors import PrimeError


def test_odd_primes():
    assert [n for n in range(20) if is_odd_prime(n)] == [3, 5, 7, 11, 13, 17, 19]


def test_run_config_validation():
    with pytest.raises(PrimeError):
        RunConfig(primes=(5, 4))
    with pytest.raises(ValueError):
        RunConfig(output="xml")
    with pytest.raises(ValueError):
        RunConfig(random_seed=-1)


def test_from_env_applies_overrides():
    run = RunConfig.from_env(primes=(11,), output="table", workers=None)
    assert run.primes == (11,)
    assert run.output == "table"
    assert run.workers == Config.WORKERS
    assert run.random_seed == Config.RANDOM_SEED


def test_int_env(monkeypatch):
    monkeypatch.setenv("MODULILAB_TEST_INT", " 42 ")
    assert config._int_env("MODULILAB_TEST_INT", 1) == 42
    monkeypatch.setenv("MODULILAB_TEST_INT", "forty")
    assert config._int_env("MODULILAB_TEST_INT", 1) == 1
    monkeypatch.delenv("MODULILAB_TEST_INT")
    assert config._int_env("MODULILAB_TEST_INT", 3) == 3


def test_primes_env(monkeypatch):
    monkeypatch.setenv("MODULILAB_TEST_PRIMES", "5, 7,11")
    assert config._primes_env("MODULILAB_TEST_PRIMES", (3,)) == (5, 7, 11)
    monkeypatch.setenv("MODULILAB_TEST_PRIMES", "5,9")
    assert config._primes_env("MODULILAB_TEST_PRIMES", (3,)) == (3,)
    monkeypatch.setenv("MODULILAB_TEST_PRIMES", "five")
    assert config._primes_env("MODULILAB_TEST_PRIMES", (3,)) == (3,)
    monkeypatch.setenv("MODULILAB_TEST_PRIMES", "")
    assert config._primes_env("MODULILAB_TEST_PRIMES", (3,)) == (3,)
