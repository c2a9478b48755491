"""Seeded prior corpora for verification runs and tests.

Random PMFs are drawn as small integer weights and normalized, so every
generated prior is exact and a run is reproducible from its seed alone.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterator, Sequence

from .classify import is_indifferent
from .priors import (
    GammaPrior,
    from_beta_binomial,
    from_binomial_mixture,
    from_cmp_binomial,
    from_hypergeometric,
    from_pmf,
)

MAX_RANDOM_WEIGHT = 100


def random_symmetric_prior(rng: random.Random, N: int) -> GammaPrior:
    """Strictly positive symmetric PMF from mirrored integer weights <= 100."""
    left = [rng.randint(1, MAX_RANDOM_WEIGHT) for _ in range(N // 2 + 1)]
    weights = left + list(reversed(left[: N + 1 - len(left)]))
    return from_pmf(weights, label=f"random_symmetric(N={N})")


def random_positive_prior(rng: random.Random, N: int) -> GammaPrior:
    """Strictly positive PMF from integer weights <= 100, no symmetry."""
    weights = [rng.randint(1, MAX_RANDOM_WEIGHT) for _ in range(N + 1)]
    return from_pmf(weights, label=f"random_positive(N={N})")


def random_non_indifferent_prior(rng: random.Random, N: int) -> GammaPrior:
    """Strictly positive PMF that is not Binomial (redrawn if it happens to be).

    N must be at least 2: every prior on a single trial is Binomial(1, p).
    """
    if N < 2:
        raise ValueError("non-Binomial priors need N >= 2")
    while True:
        prior = random_positive_prior(rng, N)
        if is_indifferent(prior) is None:
            return prior


def symmetric_corpus(
    seed: int, count: int, n_values: Sequence[int]
) -> Iterator[GammaPrior]:
    """`count` random strictly-positive symmetric priors cycling over n_values."""
    rng = random.Random(seed)
    for index in range(count):
        yield random_symmetric_prior(rng, n_values[index % len(n_values)])


CMP_NU_GRID = (
    Fraction(0),
    Fraction(1, 2),
    Fraction(3, 4),
    Fraction(1),
    Fraction(3, 2),
    Fraction(2),
    Fraction(3),
)

BETA_BINOMIAL_ALPHA_GRID = (Fraction(1, 2), Fraction(1), Fraction(2), Fraction(10))

#: Mixture components stay strictly inside (0, 1): an endpoint component puts
#: zero mass on interior counts, which collapses the strict second-order
#: inequality to an equality at some indices.
MIXTURE_P_GRID = (
    Fraction(1, 6),
    Fraction(1, 4),
    Fraction(1, 3),
    Fraction(1, 2),
    Fraction(2, 3),
    Fraction(3, 4),
    Fraction(5, 6),
)


def cmp_symmetric_grid(
    n_values: Sequence[int], nu_values: Sequence[Fraction] = CMP_NU_GRID
) -> Iterator[GammaPrior]:
    for N in n_values:
        for nu in nu_values:
            yield from_cmp_binomial(N, Fraction(1, 2), nu)


def cmp_grid(
    n_values: Sequence[int],
    p_values: Sequence[Fraction],
    nu_values: Sequence[Fraction] = CMP_NU_GRID,
) -> Iterator[GammaPrior]:
    for N in n_values:
        for p in p_values:
            for nu in nu_values:
                yield from_cmp_binomial(N, p, nu)


def beta_binomial_symmetric_grid(
    n_values: Sequence[int],
    alpha_values: Sequence[Fraction] = BETA_BINOMIAL_ALPHA_GRID,
) -> Iterator[GammaPrior]:
    for N in n_values:
        for alpha in alpha_values:
            yield from_beta_binomial(N, alpha, alpha)


def beta_binomial_grid(
    n_values: Sequence[int],
    alpha_values: Sequence[Fraction],
    beta_values: Sequence[Fraction],
) -> Iterator[GammaPrior]:
    for N in n_values:
        for alpha in alpha_values:
            for beta in beta_values:
                yield from_beta_binomial(N, alpha, beta)


def two_component_mixtures(
    n_values: Sequence[int],
    p_values: Sequence[Fraction] = MIXTURE_P_GRID,
) -> Iterator[GammaPrior]:
    """All unordered pairs of distinct interior components, equal weights."""
    for N in n_values:
        for first_index, p_one in enumerate(p_values):
            for p_two in p_values[first_index + 1 :]:
                yield from_binomial_mixture(
                    N, [(Fraction(1, 2), p_one), (Fraction(1, 2), p_two)]
                )


def hypergeometric_grid(
    n_max: int, m_max: int
) -> Iterator[GammaPrior]:
    """Sub-population priors over the constrained grid N <= a <= M.

    N starts at 2: a single-trial prior has no interior index, so the
    second-order comparison would be vacuous.
    """
    for N in range(2, n_max + 1):
        for M in range(N, m_max + 1):
            for a in range(N, M + 1):
                yield from_hypergeometric(N + M, a, N)
