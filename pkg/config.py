import os
from dataclasses import dataclass, field

from dotenv import load_dotenv

from core.errors import ConfigError

load_dotenv()

ENV_INTS = {
    "PCPLAB_SEED": (0, 0),
    "PCPLAB_SAMPLES": (500, 1),
    "PCPLAB_CUT_DEPTH": (16, 1),
}


def env_int(name: str) -> int:
    """Read an integer setting, raising ConfigError when it is malformed or too small."""
    default, lowest = ENV_INTS[name]
    raw = os.environ.get(name, "").strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None
    if value < lowest:
        raise ConfigError(f"{name} must be >= {lowest}, got {value}")
    return value


def check_env():
    for name in ENV_INTS:
        env_int(name)


def _env_default(name: str) -> int:
    # a bad value falls back here and is reported by check_env before any command runs
    try:
        return env_int(name)
    except ConfigError:
        return ENV_INTS[name][0]


# Defaults for every session
SEED = _env_default("PCPLAB_SEED")
SAMPLES = _env_default("PCPLAB_SAMPLES")
CUT_DEPTH = _env_default("PCPLAB_CUT_DEPTH")
LOG_LEVEL = os.environ.get("PCPLAB_LOG_LEVEL", "WARNING")


@dataclass(frozen=True)
class SessionConfig:
    """Base, slot count, seed and grid bounds for one run of the suites."""

    n: int
    k: int = 1
    matrix: bool = False
    seed: int = SEED
    samples: int = SAMPLES
    max_word_length: int = 3
    max_random_word_length: int = 6
    max_exponent: int = 4
    max_numerator: int | None = None
    max_k: int = 3
    nest_depth: int = 4
    cut_depth: int = field(default=CUT_DEPTH)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ConfigError(f"n must be an integer >= 2, got {self.n!r}")
        if not isinstance(self.k, int) or self.k < 1:
            raise ConfigError(f"k must be an integer >= 1, got {self.k!r}")
        if not self.matrix and self.k != 1:
            raise ConfigError("k > 1 needs a matrix session")
        if self.max_numerator is None:
            object.__setattr__(self, "max_numerator", self.n**self.max_exponent)
        checks = {
            "seed": (self.seed, 0),
            "samples": (self.samples, 1),
            "max_word_length": (self.max_word_length, 1),
            "max_random_word_length": (self.max_random_word_length, 1),
            "max_exponent": (self.max_exponent, 0),
            "max_numerator": (self.max_numerator, 1),
            "max_k": (self.max_k, 0),
            "nest_depth": (self.nest_depth, 1),
            "cut_depth": (self.cut_depth, 1),
        }
        for name, (value, lowest) in checks.items():
            if not isinstance(value, int) or value < lowest:
                raise ConfigError(f"{name} must be an integer >= {lowest}, got {value!r}")

    def session(self):
        from algebra.session import Session

        return Session(self.n, self.k, self.matrix)
