import os
from dataclasses import dataclass

DEFAULT_ELEMENT_CAP = 5000
DEFAULT_SUBGROUP_CAP = 200
DEFAULT_SEED = 1

SEED_ENV_VAR = "CHARKIT_SEED"


def seed_from_environment(default=DEFAULT_SEED):
    """Default seed, overridable by the CHARKIT_SEED environment variable."""
    raw = os.environ.get(SEED_ENV_VAR)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{SEED_ENV_VAR} must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class Config:
    """Caps and seed shared by the library and the CLI.

    element_cap bounds full element enumeration, subgroup_cap bounds the
    subgroup census; seed drives the reproducible randomness of the table
    computation.
    """

    element_cap: int = DEFAULT_ELEMENT_CAP
    subgroup_cap: int = DEFAULT_SUBGROUP_CAP
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if self.element_cap <= 0 or self.subgroup_cap <= 0:
            raise ValueError("caps must be positive")
