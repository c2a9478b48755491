"""Predictive computations for the exchangeable process a count prior induces.

Observing an exchangeable 0/1 population is sampling without replacement from
an urn whose composition is uncertain.  Exchangeability makes the pair
(n trials, s ones) a sufficient summary of any observed sequence, so all
operations here take a :class:`HistorySummary`; a bit-vector entry point is
provided for convenience.

Conditioning on an impossible history raises
:class:`~maturity.errors.ZeroProbabilityHistoryError` rather than producing
0/0 — belief verification downstream depends on that honesty.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import (
    HistoryFullError,
    InvalidParameterError,
    ZeroProbabilityHistoryError,
)
from .numerics import Scalar, binomial_coefficient, falling_factorial, is_zero
from .priors import GammaPrior


@dataclass(frozen=True, order=True)
class HistorySummary:
    """n trials observed, s of them ones."""

    n: int
    s: int

    def __post_init__(self) -> None:
        if not (isinstance(self.n, int) and isinstance(self.s, int)):
            raise InvalidParameterError("history counts must be integers")
        if not 0 <= self.s <= self.n:
            raise InvalidParameterError(
                f"history needs 0 <= s <= n, got n={self.n}, s={self.s}"
            )

    @classmethod
    def from_bits(cls, bits: str | Iterable[int]) -> "HistorySummary":
        """Reduce an explicit 0/1 sequence to its sufficient summary."""
        values = []
        for b in bits:
            if isinstance(b, str):
                if b not in "01":
                    raise InvalidParameterError(f"history bits must be 0/1, got {b!r}")
                values.append(int(b))
            elif b in (0, 1):
                values.append(int(b))
            else:
                raise InvalidParameterError(f"history bits must be 0/1, got {b!r}")
        return cls(len(values), sum(values))


def _check_history(prior: GammaPrior, h: HistorySummary) -> None:
    if h.n > prior.N:
        raise InvalidParameterError(
            f"history has {h.n} trials but the population size is {prior.N}"
        )


def sequence_probability(prior: GammaPrior, h: HistorySummary) -> Scalar:
    """Probability of one specific ordered sequence with s ones in n trials.

    Conditional on the population containing k ones, an ordered draw without
    replacement has probability falling(k, s)·falling(N−k, n−s)/falling(N, n);
    mixing over the prior gives the sequence probability.  By exchangeability
    every ordering with the same counts has this same probability.
    """
    _check_history(prior, h)
    n, s = h.n, h.s
    denom = falling_factorial(prior.N, n)
    total = 0 * prior.pmf[0]
    for k, mass in enumerate(prior.pmf):
        weight = falling_factorial(k, s) * falling_factorial(prior.N - k, n - s)
        if weight:
            total = total + mass * weight
    return total / denom


def predictive_one(prior: GammaPrior, h: HistorySummary) -> Scalar:
    """P(next trial is a 1 | history), as a ratio of sequence probabilities."""
    _check_history(prior, h)
    if h.n == prior.N:
        raise HistoryFullError(
            f"all {prior.N} members observed; there is no next trial"
        )
    denominator = sequence_probability(prior, h)
    if is_zero(denominator):
        raise ZeroProbabilityHistoryError(
            f"history (n={h.n}, s={h.s}) has probability 0 under {prior.label or 'prior'}"
        )
    numerator = sequence_probability(prior, HistorySummary(h.n + 1, h.s + 1))
    return numerator / denominator


def posterior_gamma(prior: GammaPrior, h: HistorySummary) -> GammaPrior:
    """Posterior on the full-population count after observing the history.

    Support shrinks to counts consistent with the observation; the returned
    prior keeps the same N (it still describes the whole population).
    """
    _check_history(prior, h)
    n, s = h.n, h.s
    weights = [
        mass * (falling_factorial(k, s) * falling_factorial(prior.N - k, n - s))
        for k, mass in enumerate(prior.pmf)
    ]
    total = weights[0]
    for w in weights[1:]:
        total = total + w
    if is_zero(total):
        raise ZeroProbabilityHistoryError(
            f"history (n={n}, s={s}) has probability 0 under {prior.label or 'prior'}"
        )
    pmf = tuple(w / total for w in weights)
    return GammaPrior(
        prior.N,
        pmf,
        mode=prior.mode,
        label=f"{prior.label or 'prior'} | (n={n}, s={s})",
    )


def remaining_population_prior(prior: GammaPrior, h: HistorySummary) -> GammaPrior:
    """Count prior for the N−n members not yet observed.

    This is the full-count posterior shifted onto the remaining support
    (the posterior puts no mass outside [s, s + N − n]).  Continuing the
    process is equivalent to starting fresh under this prior: an empty-history
    predictive here equals the combined-history predictive under the original
    prior.  The full-count posterior itself does not have that property — a
    fresh draw under it would re-sample already-observed members.
    """
    _check_history(prior, h)
    if h.n == prior.N:
        raise HistoryFullError("no unobserved members remain")
    posterior = posterior_gamma(prior, h)
    remaining = prior.N - h.n
    pmf = tuple(posterior.pmf[h.s + j] for j in range(remaining + 1))
    return GammaPrior(
        remaining,
        pmf,
        mode=prior.mode,
        label=f"{prior.label or 'prior'} remaining after (n={h.n}, s={h.s})",
    )


def streak_hazard(prior: GammaPrior, m: int) -> Scalar:
    """Probability the opening streak of zeros ends exactly at trial m, given
    it reached trial m.

    Closed form over t(k) = pmf[k]/C(N, k), the probability of any single
    population configuration with k ones:

        r(m) = Σ_{k=1}^{N−m+1} C(N−m, k−1)·t(k)
               ─────────────────────────────────
               Σ_{k=0}^{N−m+1} C(N−m+1, k)·t(k)
    """
    if not 1 <= m <= prior.N:
        raise InvalidParameterError(
            f"streak index must lie in [1, {prior.N}], got {m}"
        )
    N = prior.N
    t = [prior.pmf[k] / binomial_coefficient(N, k) for k in range(N + 1)]
    denominator = 0 * prior.pmf[0]
    for k in range(0, N - m + 2):
        denominator = denominator + binomial_coefficient(N - m + 1, k) * t[k]
    if is_zero(denominator):
        raise ZeroProbabilityHistoryError(
            f"the streak cannot reach trial {m} under {prior.label or 'prior'}"
        )
    numerator = 0 * prior.pmf[0]
    for k in range(1, N - m + 2):
        numerator = numerator + binomial_coefficient(N - m, k - 1) * t[k]
    return numerator / denominator


@dataclass(frozen=True)
class PredictiveTable:
    """All defined one-step predictive probabilities for a prior.

    ``entries`` maps (n, s) → P(next = 1 | s ones in n trials) for every
    positive-probability history with n < N.  Impossible histories are
    absent, not zero.
    """

    N: int
    entries: Mapping[tuple[int, int], Scalar]

    def get(self, n: int, s: int) -> Scalar:
        try:
            return self.entries[(n, s)]
        except KeyError:
            raise ZeroProbabilityHistoryError(
                f"history (n={n}, s={s}) has probability 0 or is out of range"
            ) from None

    def items_sorted(self) -> Iterator[tuple[tuple[int, int], Scalar]]:
        return iter(sorted(self.entries.items()))

    def __len__(self) -> int:
        return len(self.entries)


def predictive_table(prior: GammaPrior) -> PredictiveTable:
    """Materialize every defined predictive probability.

    Built by dynamic programming on the sequence probabilities q(n, s): the
    law of total probability gives q(n, s) = q(n+1, s) + q(n+1, s+1), so one
    backward sweep costs O(N²) exact operations instead of O(N³) independent
    sums.
    """
    N = prior.N
    # q[s] at level n holds the probability of a specific sequence with
    # s ones in n trials; level N is t(s) = pmf[s]/C(N, s).
    level = [prior.pmf[s] / binomial_coefficient(N, s) for s in range(N + 1)]
    entries: dict[tuple[int, int], Scalar] = {}
    for n in range(N - 1, -1, -1):
        previous = level
        level = [previous[s] + previous[s + 1] for s in range(n + 1)]
        for s in range(n + 1):
            if not is_zero(level[s]):
                entries[(n, s)] = previous[s + 1] / level[s]
    return PredictiveTable(N, entries)
