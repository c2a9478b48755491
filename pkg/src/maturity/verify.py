"""Mechanical verification of the package's headline claims over prior corpora.

Each claim function exhaustively checks one statement — an equivalence or
implication between a ratio test on the prior and a belief exhibited by the
induced predictive process, or a parametric family landing on a stated side —
and returns a :class:`ClaimResult` listing every violating prior.  The
certificate runner aggregates claims into a reproducible, seed-stamped
report; the CLI turns a failed certificate into a nonzero exit code.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import corpus
from .classify import (
    Belief,
    Holds,
    TightnessLabel,
    is_indifferent,
    second_order_class,
    tightness_class,
    verify_gambler,
    verify_maturity,
)
from .extend import extendibility_check
from .model import predictive_table
from .numerics import Ordering, compare_values, scalar_to_string
from .priors import (
    GammaPrior,
    from_binomial,
    from_cmp_binomial,
    from_degenerate,
    from_hypergeometric,
    uniform,
)

MAX_REPORTED_FAILURES = 20


@dataclass
class ClaimResult:
    name: str
    description: str
    passed: bool = True
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    def check(self, ok: bool, detail: str) -> None:
        self.cases += 1
        if not ok:
            self.passed = False
            if len(self.failures) < MAX_REPORTED_FAILURES:
                self.failures.append(detail)

    def to_json_dict(self) -> dict:
        return {
            "claim": self.name,
            "description": self.description,
            "pass": self.passed,
            "cases": self.cases,
            "counterexamples": list(self.failures),
        }


def claim_indifference_iff_binomial(
    n_values: Sequence[int],
    pi_values: Sequence[Fraction],
    seed: int,
    random_count: int,
    random_n_values: Sequence[int] = tuple(range(2, 13)),
) -> ClaimResult:
    """Binomial priors predict a constant; non-Binomial priors never do."""
    result = ClaimResult(
        "indifference_iff_binomial",
        "every Binomial(N, pi) predictive entry equals pi exactly; "
        "non-Binomial priors have no constant predictive and a moving table",
    )
    for N in n_values:
        for pi in pi_values:
            prior = from_binomial(N, pi)
            table = predictive_table(prior)
            result.check(
                all(value == pi for _, value in table.items_sorted()),
                f"{prior.label}: some predictive differs from {pi}",
            )
            result.check(
                is_indifferent(prior) == pi,
                f"{prior.label}: constant predictive not recognized",
            )
    rng = random.Random(seed)
    for index in range(random_count):
        N = random_n_values[index % len(random_n_values)]
        prior = corpus.random_non_indifferent_prior(rng, N)
        table = predictive_table(prior)
        values = [value for _, value in table.items_sorted()]
        result.check(
            is_indifferent(prior) is None,
            f"{prior.label} #{index}: falsely classified indifferent",
        )
        result.check(
            any(value != values[0] for value in values[1:]),
            f"{prior.label} #{index}: predictive table is constant",
        )
    return result


def claim_gambler_iff_tighter(priors: Iterable[GammaPrior]) -> ClaimResult:
    """Over symmetric priors: gambler's belief <=> tighter, reverse <=> looser."""
    result = ClaimResult(
        "gambler_iff_tighter",
        "the gambler's belief holds iff the prior is tighter than "
        "Binomial(N, 1/2), and the reverse belief iff looser",
    )
    for prior in priors:
        verdict = tightness_class(prior).verdict
        analysis = verify_gambler(prior)
        gambler = analysis.conclusion is Belief.GAMBLER
        reverse = analysis.conclusion is Belief.REVERSE_GAMBLER
        result.check(
            gambler == (verdict is TightnessLabel.TIGHTER),
            f"{prior.label}: gambler={gambler} but tightness={verdict.value}",
        )
        result.check(
            reverse == (verdict is TightnessLabel.LOOSER),
            f"{prior.label}: reverse_gambler={reverse} but tightness={verdict.value}",
        )
    return result


def claim_second_order_implies_maturity(
    priors: Iterable[GammaPrior],
) -> ClaimResult:
    """Second-order tighter forces an increasing hazard; looser a decreasing one."""
    result = ClaimResult(
        "second_order_implies_maturity",
        "second-order tighter priors have strictly increasing streak hazards; "
        "second-order looser priors strictly decreasing (one-directional)",
    )
    for prior in priors:
        verdict = second_order_class(prior).verdict
        if verdict not in (TightnessLabel.TIGHTER, TightnessLabel.LOOSER):
            continue
        analysis = verify_maturity(prior)
        if verdict is TightnessLabel.TIGHTER:
            result.check(
                analysis.maturity.holds is Holds.YES,
                f"{prior.label}: 2nd-order tighter but hazards not increasing "
                f"({[(m, scalar_to_string(r)) for m, r in analysis.hazards]})",
            )
        else:
            result.check(
                analysis.reverse_maturity.holds is Holds.YES,
                f"{prior.label}: 2nd-order looser but hazards not decreasing "
                f"({[(m, scalar_to_string(r)) for m, r in analysis.hazards]})",
            )
    return result


def claim_streak_hazard_half_split(priors: Iterable[GammaPrior]) -> ClaimResult:
    """Tighter symmetric priors keep r(m) above 1/2 for m >= 2; looser below."""
    result = ClaimResult(
        "streak_hazard_half_split",
        "for symmetric priors: tighter => r(m) > 1/2 for all defined m >= 2, "
        "looser => r(m) < 1/2",
    )
    half = Fraction(1, 2)
    for prior in priors:
        verdict = tightness_class(prior).verdict
        if verdict not in (TightnessLabel.TIGHTER, TightnessLabel.LOOSER):
            continue
        need = Ordering.GREATER if verdict is TightnessLabel.TIGHTER else Ordering.LESS
        analysis = verify_maturity(prior)
        for m, hazard in analysis.hazards:
            if m < 2:
                continue
            result.check(
                compare_values(hazard, half) is need,
                f"{prior.label}: r({m})={scalar_to_string(hazard)} on the wrong "
                f"side of 1/2 for a {verdict.value} prior",
            )
    return result


def claim_cmp_first_order(
    n_values: Sequence[int],
    tighter_nus: Sequence[Fraction],
    looser_nus: Sequence[Fraction],
) -> ClaimResult:
    """CMP-Binomial(N, 1/2, nu): nu > 1 lands tighter, nu < 1 looser."""
    result = ClaimResult(
        "cmp_first_order",
        "CMP-Binomial(N, 1/2, nu) is tighter than Binomial for nu > 1 "
        "and looser for nu < 1",
    )
    for N in n_values:
        for nu in tighter_nus:
            verdict = tightness_class(from_cmp_binomial(N, Fraction(1, 2), nu)).verdict
            result.check(
                verdict is TightnessLabel.TIGHTER,
                f"cmp(N={N}, nu={nu}): expected TIGHTER, got {verdict.value}",
            )
        for nu in looser_nus:
            verdict = tightness_class(from_cmp_binomial(N, Fraction(1, 2), nu)).verdict
            result.check(
                verdict is TightnessLabel.LOOSER,
                f"cmp(N={N}, nu={nu}): expected LOOSER, got {verdict.value}",
            )
    return result


def claim_cmp_second_order(
    n_values: Sequence[int],
    p_values: Sequence[Fraction],
    tighter_nus: Sequence[Fraction],
    looser_nus: Sequence[Fraction],
) -> ClaimResult:
    """CMP-Binomial at any p: nu > 1 second-order tighter, nu < 1 looser."""
    result = ClaimResult(
        "cmp_second_order",
        "CMP-Binomial(N, p, nu) is 2nd-order tighter for nu > 1 and "
        "2nd-order looser for nu < 1, for every p",
    )
    for N in n_values:
        for p in p_values:
            for nu in tighter_nus:
                verdict = second_order_class(from_cmp_binomial(N, p, nu)).verdict
                result.check(
                    verdict is TightnessLabel.TIGHTER,
                    f"cmp(N={N}, p={p}, nu={nu}): expected TIGHTER, got {verdict.value}",
                )
            for nu in looser_nus:
                verdict = second_order_class(from_cmp_binomial(N, p, nu)).verdict
                result.check(
                    verdict is TightnessLabel.LOOSER,
                    f"cmp(N={N}, p={p}, nu={nu}): expected LOOSER, got {verdict.value}",
                )
    return result


def claim_beta_binomial_looser(
    n_values: Sequence[int],
    alpha_values: Sequence[Fraction] = corpus.BETA_BINOMIAL_ALPHA_GRID,
) -> ClaimResult:
    """Symmetric Beta-Binomial priors are always looser than Binomial(N, 1/2)."""
    result = ClaimResult(
        "beta_binomial_looser",
        "Beta-Binomial(N, alpha, alpha) is looser than Binomial(N, 1/2)",
    )
    for prior in corpus.beta_binomial_symmetric_grid(n_values, alpha_values):
        verdict = tightness_class(prior).verdict
        result.check(
            verdict is TightnessLabel.LOOSER,
            f"{prior.label}: expected LOOSER, got {verdict.value}",
        )
    return result


def claim_hypergeometric_second_order(n_max: int, m_max: int) -> ClaimResult:
    """Sub-population priors of known larger populations are 2nd-order tighter."""
    result = ClaimResult(
        "hypergeometric_second_order",
        "Hypergeometric(N+M, a, N) with N <= a <= M is 2nd-order tighter "
        "than the Binomial",
    )
    for prior in corpus.hypergeometric_grid(n_max, m_max):
        verdict = second_order_class(prior).verdict
        result.check(
            verdict is TightnessLabel.TIGHTER,
            f"{prior.label}: expected TIGHTER, got {verdict.value}",
        )
    return result


def claim_mixtures_second_order_looser(
    n_values: Sequence[int],
    p_values: Sequence[Fraction] = corpus.MIXTURE_P_GRID,
) -> ClaimResult:
    """Mixing distinct Binomial components always lands 2nd-order looser."""
    result = ClaimResult(
        "mixtures_second_order_looser",
        "every Binomial mixture with >= 2 distinct interior components is "
        "2nd-order looser than the Binomial",
    )
    for prior in corpus.two_component_mixtures(n_values, p_values):
        verdict = second_order_class(prior).verdict
        result.check(
            verdict is TightnessLabel.LOOSER,
            f"{prior.label}: expected LOOSER, got {verdict.value}",
        )
    return result


def claim_extendibility_consistency(n_values: Sequence[int]) -> ClaimResult:
    """Extendibility behaves like a looseness certificate at desk scale."""
    result = ClaimResult(
        "extendibility_consistency",
        "degenerate(2,1) is 1-inextendible; witnesses re-verify exactly; "
        "a prior feasible at M=5N with a spread-out witness is never tighter",
    )
    degenerate = from_degenerate(2, 1)
    outcome = extendibility_check(degenerate, 1)
    result.check(
        not outcome.feasible,
        "degenerate(2,1) reported feasible at M=1",
    )

    candidates: list[GammaPrior] = []
    for N in n_values:
        candidates.append(from_binomial(N, Fraction(1, 2)))
        candidates.append(from_binomial(N, Fraction(1, 4)))
        candidates.append(uniform(N))
        candidates.append(from_cmp_binomial(N, Fraction(1, 2), 2))
        candidates.append(from_hypergeometric(2 * N, N, N))
        if N % 2 == 0:
            candidates.append(from_degenerate(N, N // 2))
    for prior in candidates:
        outcome = extendibility_check(prior, 5 * prior.N)
        if not outcome.feasible:
            result.check(True, "")
            continue
        if outcome.witness.is_degenerate:
            result.check(True, "")
            continue
        first = tightness_class(prior).verdict
        second = second_order_class(prior).verdict
        result.check(
            first is not TightnessLabel.TIGHTER
            and second is not TightnessLabel.TIGHTER,
            f"{prior.label}: feasible at M={5 * prior.N} with a nondegenerate "
            f"witness yet classified tighter ({first.value}/{second.value})",
        )
    return result


def run_certificate(
    seed: int = 0,
    *,
    random_symmetric: int = 120,
    random_general: int = 80,
    n_max: int = 10,
    include_extendibility: bool = True,
) -> dict:
    """Run the full claim corpus and return a reproducible certificate."""
    n_values = tuple(range(2, n_max + 1))
    symmetric = list(corpus.symmetric_corpus(seed, random_symmetric, n_values))
    symmetric += list(corpus.cmp_symmetric_grid(n_values))

    maturity_corpus = list(symmetric)
    maturity_corpus += list(
        corpus.cmp_grid(n_values, (Fraction(1, 4), Fraction(2, 3)))
    )
    maturity_corpus += list(
        corpus.beta_binomial_grid(
            n_values,
            (Fraction(1, 2), Fraction(1), Fraction(2)),
            (Fraction(1), Fraction(3), Fraction(10)),
        )
    )
    maturity_corpus += list(corpus.two_component_mixtures(n_values))

    claims = [
        claim_indifference_iff_binomial(
            n_values,
            (Fraction(0), Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(1)),
            seed + 1,
            random_general,
        ),
        claim_gambler_iff_tighter(symmetric),
        claim_second_order_implies_maturity(maturity_corpus),
        claim_streak_hazard_half_split(symmetric),
        claim_cmp_first_order(
            n_values,
            (Fraction(2), Fraction(3), Fraction(5, 2), Fraction(4)),
            (Fraction(0), Fraction(1, 2), Fraction(3, 4)),
        ),
        claim_cmp_second_order(
            n_values,
            (Fraction(1, 4), Fraction(1, 2), Fraction(2, 3)),
            (Fraction(2), Fraction(3), Fraction(5, 2), Fraction(4)),
            (Fraction(0), Fraction(1, 2), Fraction(3, 4)),
        ),
        claim_beta_binomial_looser(n_values),
        claim_hypergeometric_second_order(min(n_max, 8), min(n_max, 8)),
        claim_mixtures_second_order_looser(n_values),
    ]
    if include_extendibility:
        claims.append(
            claim_extendibility_consistency(tuple(range(2, min(n_max, 6) + 1)))
        )

    return {
        "schema": "1",
        "seed": seed,
        "random_symmetric": random_symmetric,
        "random_general": random_general,
        "n_max": n_max,
        "claims": [claim.to_json_dict() for claim in claims],
        "pass": all(claim.passed for claim in claims),
    }
