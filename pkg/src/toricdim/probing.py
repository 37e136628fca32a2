"""Seeded rank-probing loop shared by the secant and Hadamard engines.

A probe evaluates `rank_at(points, prime)` at freshly drawn torus points and
keeps the maximum rank seen.  The target rank is a mathematical ceiling
(parameter count or ambient bound), so the loop may stop as soon as the
target is reached: the reported maximum is identical to running every trial.
Falling short triggers the retry ladder: fresh seeds at seed + trials + j,
with the final two retries switching to alternate primes to rule out
characteristic-p accidents.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .modlinalg import ALTERNATE_PRIMES, ParameterMatrix, random_torus_points
from .config import RunConfig


@dataclass(frozen=True)
class ProbeResult:
    rank: int
    prime: int  # modulus that achieved the reported rank
    attempts: int
    retried: bool
    reached_target: bool


def probe_max_rank(
    rank_at: Callable[[ParameterMatrix, int], int],
    n_points: int,
    width: int,
    config: RunConfig,
    target_rank: int,
) -> ProbeResult:
    best = -1
    best_prime = config.prime
    attempts = 0

    def attempt(seed: int, prime: int) -> None:
        nonlocal best, best_prime, attempts
        pts = random_torus_points(n_points, width, seed, prime)
        r = rank_at(pts, prime)
        attempts += 1
        if r > best:
            best = r
            best_prime = prime

    for t in range(config.trials):
        attempt(config.seed + t, config.prime)
        if best >= target_rank:
            return ProbeResult(best, best_prime, attempts, False, True)

    retried = False
    for j in range(config.max_retries):
        retried = True
        prime = config.prime
        if config.max_retries >= 2 and j >= config.max_retries - 2:
            prime = ALTERNATE_PRIMES[j - (config.max_retries - 2)]
        attempt(config.seed + config.trials + j, prime)
        if best >= target_rank:
            break
    return ProbeResult(best, best_prime, attempts, retried, best >= target_rank)
