import json
from pathlib import Path

import numpy as np
import pytest

from modulilab.shared.config import RunConfig
from modulilab.weyl import groups

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def oracle_cases():
    with open(FIXTURES / "oracle_counts.json") as f:
        return json.load(f)


@pytest.fixture(scope="session")
def weyl_group():
    return groups.weyl_f4()


@pytest.fixture(scope="session")
def projective_group(weyl_group):
    return groups.project_mod_center(weyl_group)


@pytest.fixture
def run_config():
    return RunConfig(primes=(5, 7), series_order=12, random_seed=7)


@pytest.fixture
def rng(run_config):
    return np.random.default_rng(run_config.random_seed)
