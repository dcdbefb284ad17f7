from __future__ import annotations

import os
import random
from dataclasses import dataclass, field, replace


class LimitExceeded(RuntimeError):
    """An exact computation was refused because it exceeds a configured size limit."""


@dataclass(frozen=True)
class Limits:
    max_n_general: int = 16
    max_chords: int = 24
    max_census_n: int = 7
    max_family_n: int = 12
    max_family_chords: int = 3

    def __post_init__(self):
        for name, value in vars(self).items():
            if value <= 0:
                raise ValueError(f"limit {name} must be positive, got {value}")

    @classmethod
    def parse(cls, text: str) -> "Limits":
        """Parse ``"max_n_general=18,max_chords=30"`` style overrides."""
        kw = {}
        for item in filter(None, (s.strip() for s in text.split(","))):
            key, _, value = item.partition("=")
            if key not in cls.__dataclass_fields__:
                raise ValueError(f"unknown limit {key!r}")
            kw[key] = int(value)
        return cls(**kw)


DEFAULT_LIMITS = Limits()


def default_jobs() -> int:
    return int(os.environ.get("CYCLESPEC_JOBS", "1"))


@dataclass(frozen=True)
class RunConfig:
    K: int = 1
    log_base: int = 2
    limits: Limits = field(default_factory=Limits)
    jobs: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.K <= 0:
            raise ValueError("K must be positive")
        if self.log_base != 2:
            raise ValueError("only base-2 logarithms are supported")
        if self.jobs <= 0:
            raise ValueError("jobs must be positive")

    def rng(self, stream: int = 0) -> random.Random:
        """The seeded generator; ``stream`` separates independent consumers."""
        return random.Random(self.seed * 1_000_003 + stream)

    def with_(self, **kw) -> "RunConfig":
        return replace(self, **kw)
