"""Deterministic random interval models.

The same configuration always yields the same model, bit for bit: seeds
are combined arithmetically (never via object hashing, which varies
across processes) and endpoints are exact rationals.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .intervals import IntervalModel

DISTRIBUTIONS = ("uniform", "unit-jitter", "nested-heavy")


@dataclass(frozen=True)
class GenConfig:
    n: int
    seed: int
    dist: str = "uniform"

    def __post_init__(self):
        if self.dist not in DISTRIBUTIONS:
            raise ValueError(f"unknown distribution {self.dist!r}; choose from {DISTRIBUTIONS}")


def _rng(cfg: GenConfig) -> random.Random:
    mix = cfg.seed * 1_000_003 + cfg.n * 10_007 + DISTRIBUTIONS.index(cfg.dist)
    return random.Random(mix)


def random_interval_model(cfg: GenConfig) -> IntervalModel:
    if cfg.n < 1:
        raise ValueError("need at least one interval")
    rng = _rng(cfg)
    n = cfg.n
    intervals: list[tuple[Fraction, Fraction]] = []
    if cfg.dist == "uniform":
        span = 2 * n
        for _ in range(n):
            lo = Fraction(rng.randint(0, span))
            length = Fraction(rng.randint(1, n))
            intervals.append((lo, lo + length))
    elif cfg.dist == "unit-jitter":
        for _ in range(n):
            lo = Fraction(rng.randint(0, 3 * n), 4)
            length = 1 + Fraction(rng.randint(-4, 4), 16)
            intervals.append((lo, lo + length))
    else:  # nested-heavy: wide spread of lengths around shared centers
        span = 4 * n
        for _ in range(n):
            center = Fraction(rng.randint(0, span))
            width = Fraction(max(1, span >> rng.randint(0, span.bit_length() - 1)))
            intervals.append((center - width, center + width))
    return IntervalModel(tuple(intervals))
