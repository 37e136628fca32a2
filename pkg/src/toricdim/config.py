"""Run configuration shared by the dimension engines and the CLI."""

from __future__ import annotations

from dataclasses import dataclass

from .modlinalg import DEFAULT_PRIME, is_probable_prime


@dataclass(frozen=True)
class RunConfig:
    """Reproducibility knobs: all randomness flows from `seed`.

    Trial t draws its torus points from stream seed + t; when a probe falls
    short of its target, up to `max_retries` further attempts continue at
    seed + trials + j, the last two of them on alternate primes.
    """

    prime: int = DEFAULT_PRIME
    trials: int = 3
    seed: int = 0
    max_retries: int = 5

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.max_retries < 0:
            raise ValueError("max_retries must be >= 0")
        if self.prime <= 2**16 or not is_probable_prime(self.prime):
            raise ValueError("prime must be a probable prime greater than 2^16")


DEFAULT_CONFIG = RunConfig()
