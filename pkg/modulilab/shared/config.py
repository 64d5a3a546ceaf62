import logging
import os
from dataclasses import dataclass, field

from dotenv import load_dotenv

from modulilab.shared.errors import PrimeError

load_dotenv()

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20240401
DEFAULT_PRIMES = (5, 7)


def _int_env(name, default):
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw.strip())
    except ValueError:
        logger.warning("%s=%r is not an integer; using %s", name, raw, default)
        return default


def _primes_env(name, default):
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        primes = tuple(int(part) for part in raw.split(",") if part.strip())
    except ValueError:
        logger.warning("%s=%r is not a comma-separated list of primes; using %s", name, raw, default)
        return default
    if not primes or not all(is_odd_prime(p) for p in primes):
        logger.warning("%s=%r must list odd primes; using %s", name, raw, default)
        return default
    return primes


def is_odd_prime(n):
    if n < 3 or n % 2 == 0:
        return False
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


class Config:
    RANDOM_SEED = _int_env("MODULILAB_SEED", DEFAULT_SEED)
    if not 0 <= RANDOM_SEED < 2**64:
        logger.warning("MODULILAB_SEED must fit in 64 bits; using %s", DEFAULT_SEED)
        RANDOM_SEED = DEFAULT_SEED

    PRIMES = _primes_env("MODULILAB_PRIMES", DEFAULT_PRIMES)
    SERIES_ORDER = max(_int_env("MODULILAB_SERIES_ORDER", 20), 0)
    WORKERS = max(_int_env("MODULILAB_WORKERS", 1), 1)
    GROUP_LIMIT = _int_env("MODULILAB_GROUP_LIMIT", 100_000)
    LOG_LEVEL = os.getenv("MODULILAB_LOG_LEVEL", "WARNING").upper()

    OUTPUT_FORMATS = {"json", "table"}

    @staticmethod
    def allowed_output(name):
        return name in Config.OUTPUT_FORMATS


@dataclass(frozen=True)
class RunConfig:
    """Settings of one CLI invocation: environment defaults overridden by flags."""

    primes: tuple = DEFAULT_PRIMES
    series_order: int = 20
    random_seed: int = DEFAULT_SEED
    symbolic: bool = False
    output: str = "json"
    workers: int = 1
    extra: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        for p in self.primes:
            if not is_odd_prime(p):
                raise PrimeError(f"{p} is not an odd prime")
        if not 0 <= self.random_seed < 2**64:
            raise ValueError(f"Seed {self.random_seed} does not fit in 64 bits")
        if not Config.allowed_output(self.output):
            raise ValueError(f"Unknown output format: {self.output}")

    @classmethod
    def from_env(cls, **overrides):
        values = {
            "primes": Config.PRIMES,
            "series_order": Config.SERIES_ORDER,
            "random_seed": Config.RANDOM_SEED,
            "workers": Config.WORKERS,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)
