"""Chaos-based bitwise dynamical PRNG: generators, statistical battery, period experiments."""

import json

from ._core import (
    BitSource,
    berlekamp_massey,
    chaotic_range,
    logistic_step_raw,
    make_generator,
    proportion_threshold,
    run_test,
    test_registry,
)
from . import _core

GENERATORS = ("dynamical", "logistic32", "logistic64", "lfsr32", "glibc-lcg")

DEFAULT_MASTER_SEED = 0x123456789ABCDEF0


def derive_seed(master_seed, word_length=32, gamma_count=8, k_min=9, k_max=11):
    """Expand a 64-bit master seed into the full dynamical seed (as a dict)."""
    return json.loads(
        _core.derive_seed_json(master_seed, word_length, gamma_count, k_min, k_max)
    )


def run_suite(source, sequences, length, alpha=0.01, jobs=1):
    """Run the full battery; returns the report as a dict."""
    return json.loads(_core.run_suite_json(source, sequences, length, alpha, jobs))


def period_experiment(word_length, trials, master_seed=0x5EED):
    """Brent cycle-length statistics over `trials` random seeds (as a dict)."""
    return json.loads(_core.period_experiment_json(word_length, trials, master_seed))


__all__ = [
    "BitSource",
    "DEFAULT_MASTER_SEED",
    "GENERATORS",
    "berlekamp_massey",
    "chaotic_range",
    "derive_seed",
    "logistic_step_raw",
    "make_generator",
    "period_experiment",
    "proportion_threshold",
    "run_suite",
    "run_test",
    "test_registry",
]
