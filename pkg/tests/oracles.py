"""Independent brute-force oracles used to cross-check the exact formulas.

These deliberately avoid the library's computational paths: probabilities are
obtained by enumerating all 2^N population configurations, weighting each
configuration with k ones by pmf[k]/C(N, k), and summing the configurations
consistent with the observed prefix.  Exponential, but exact and obviously
correct for small N.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Sequence

from maturity import GammaPrior


def _configuration_weights(prior: GammaPrior) -> list[Fraction]:
    return [prior.pmf[k] / comb(prior.N, k) for k in range(prior.N + 1)]


def oracle_sequence_probability_bits(prior: GammaPrior, bits: Sequence[int]) -> Fraction:
    """Probability of observing exactly the given outcomes in the first trials."""
    N = prior.N
    assert len(bits) <= N
    weights = _configuration_weights(prior)
    selector = (1 << len(bits)) - 1
    wanted = 0
    for position, bit in enumerate(bits):
        if bit:
            wanted |= 1 << position
    total = Fraction(0)
    for config in range(1 << N):
        if config & selector == wanted:
            total += weights[config.bit_count()]
    return total


def oracle_sequence_probability(prior: GammaPrior, n: int, s: int) -> Fraction:
    """Canonical ordering: s ones followed by n−s zeros."""
    return oracle_sequence_probability_bits(prior, [1] * s + [0] * (n - s))


def oracle_predictive_one(prior: GammaPrior, n: int, s: int) -> Fraction:
    """P(next = 1 | s ones in n trials), by conditional enumeration."""
    denominator = oracle_sequence_probability(prior, n, s)
    assert denominator > 0, "oracle predictive undefined on an impossible history"
    numerator = oracle_sequence_probability_bits(
        prior, [1] * s + [0] * (n - s) + [1]
    )
    return numerator / denominator
