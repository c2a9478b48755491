"""Acceptance suite.

Each test implements one acceptance criterion end to end, at its stated
tolerance (exact equality unless a prior is in approximate mode, where
verdict enums are compared — the verdicts themselves are tolerance-guarded),
enforces the stated runtime budget, and prints one PASS/FAIL line.  Run with
``pytest -s tests/test_acceptance.py`` to see the lines; ``pytest -v`` shows
the same information through test outcomes.
"""

import random
import time
from fractions import Fraction

from maturity import (
    HistorySummary,
    MixtureWitness,
    TightnessLabel,
    binomial_tightness_ratio,
    emit_figure_data,
    extendibility_check,
    from_binomial,
    from_binomial_mixture,
    from_beta_binomial,
    from_cmp_binomial,
    from_degenerate,
    from_hypergeometric,
    from_pmf,
    is_indifferent,
    predictive_one,
    predictive_table,
    second_order_class,
    sequence_probability,
    tightness_class,
    uniform,
    verify_witness,
)
from maturity import corpus, verify

from oracles import oracle_predictive_one, oracle_sequence_probability_bits

HALF = Fraction(1, 2)
GAMBLER_CORPUS_SEED = 20_240
ORACLE_SEED = 606


def fr(*args) -> Fraction:
    return Fraction(*args)


def _conclude(number: int, name: str, started: float, limit: float | None, ok: bool):
    elapsed = time.perf_counter() - started
    in_budget = limit is None or elapsed < limit
    status = "PASS" if (ok and in_budget) else "FAIL"
    budget = f", budget {limit:.0f}s" if limit is not None else ""
    print(f"[criterion {number}] {name}: {status} ({elapsed:.2f}s{budget})")
    assert ok, f"criterion {number} ({name}) violated"
    assert in_budget, f"criterion {number} ({name}) exceeded {limit}s: {elapsed:.2f}s"


def _symmetric_acceptance_corpus() -> list:
    """CMP exponent sweep at p = 1/2 plus 500 seeded symmetric PMFs, N in 2..14."""
    n_values = tuple(range(2, 15))
    priors = list(corpus.symmetric_corpus(GAMBLER_CORPUS_SEED, 500, n_values))
    priors += list(corpus.cmp_symmetric_grid(n_values))
    return priors


def test_criterion_1_indifference_iff_binomial():
    started = time.perf_counter()
    ok = True

    for N in range(1, 17):
        for pi in (fr(0), fr(1, 4), fr(1, 3), HALF, fr(1)):
            prior = from_binomial(N, pi)
            table = predictive_table(prior)
            ok = ok and all(value == pi for _, value in table.items_sorted())
            ok = ok and is_indifferent(prior) == pi

    rng = random.Random(GAMBLER_CORPUS_SEED + 1)
    n_cycle = tuple(range(2, 13))
    for index in range(200):
        prior = corpus.random_non_indifferent_prior(rng, n_cycle[index % len(n_cycle)])
        ok = ok and is_indifferent(prior) is None
        values = [value for _, value in predictive_table(prior).items_sorted()]
        ok = ok and any(value != values[0] for value in values[1:])

    _conclude(1, "indifference iff Binomial", started, 10.0, ok)


def test_criterion_2_gambler_belief_iff_tighter():
    started = time.perf_counter()
    result = verify.claim_gambler_iff_tighter(_symmetric_acceptance_corpus())
    _conclude(
        2,
        "gambler's belief iff tighter than Binomial(N, 1/2)",
        started,
        60.0,
        result.passed,
    )


def _maturity_acceptance_corpus() -> list:
    n_values = tuple(range(2, 15))
    priors = _symmetric_acceptance_corpus()
    priors += list(corpus.cmp_grid(n_values, (fr(1, 4), fr(2, 3))))
    priors += list(
        corpus.beta_binomial_grid(
            n_values,
            (fr(1, 2), fr(1), fr(2), fr(10)),
            (fr(1, 2), fr(1), fr(3), fr(10)),
        )
    )
    priors += list(corpus.two_component_mixtures(n_values))
    return priors


def test_criterion_3_second_order_forces_maturity_direction():
    started = time.perf_counter()
    result = verify.claim_second_order_implies_maturity(_maturity_acceptance_corpus())
    _conclude(
        3,
        "2nd-order tighter/looser forces (reverse) belief in maturity",
        started,
        60.0,
        result.passed,
    )


def test_criterion_4_streak_hazard_half_split():
    started = time.perf_counter()
    result = verify.claim_streak_hazard_half_split(_symmetric_acceptance_corpus())
    _conclude(
        4,
        "tighter keeps r(m) above 1/2 for m >= 2, looser below",
        started,
        60.0,
        result.passed,
    )


def test_criterion_5_parametric_family_classifications():
    started = time.perf_counter()
    n_values = tuple(range(2, 15))
    tighter_nus = (fr(2), fr(3), fr(5, 2), fr(4))
    looser_nus = (fr(0), fr(1, 2), fr(3, 4))

    results = [
        verify.claim_cmp_first_order(n_values, tighter_nus, looser_nus),
        verify.claim_cmp_second_order(
            n_values, (fr(1, 4), HALF, fr(2, 3)), tighter_nus, looser_nus
        ),
        verify.claim_beta_binomial_looser(
            n_values, (fr(1, 2), fr(1), fr(2), fr(10))
        ),
        verify.claim_hypergeometric_second_order(10, 10),
        verify.claim_mixtures_second_order_looser(n_values),
    ]
    ok = all(result.passed for result in results)

    # mixtures with more than two components stay second-order looser
    for N in (3, 6, 9, 12):
        for components in (
            [(fr(1, 4), fr(1, 6)), (HALF, HALF), (fr(1, 4), fr(3, 4))],
            [(fr(1, 3), fr(1, 4)), (fr(1, 3), fr(1, 3)), (fr(1, 3), fr(2, 3))],
            [(fr(1, 10), fr(1, 6)), (fr(3, 10), fr(1, 2)), (fr(6, 10), fr(5, 6))],
        ):
            verdict = second_order_class(from_binomial_mixture(N, components)).verdict
            ok = ok and verdict is TightnessLabel.LOOSER

    _conclude(
        5,
        "CMP / Beta-Binomial / Hypergeometric / mixture family classifications",
        started,
        120.0,
        ok,
    )


def _oracle_corpus() -> list:
    rng = random.Random(ORACLE_SEED)
    priors = []
    n_cycle = tuple(range(2, 11))
    for index in range(35):
        priors.append(corpus.random_positive_prior(rng, n_cycle[index % len(n_cycle)]))
    for index in range(10):
        priors.append(corpus.random_symmetric_prior(rng, n_cycle[index % len(n_cycle)]))
    # zero-atom stress cases
    priors.append(from_degenerate(6, 3))
    priors.append(from_pmf([1, 0, 0, 1]))
    priors.append(from_pmf([0, 1, 0, 2, 0]))
    priors.append(from_binomial(5, fr(0)))
    priors.append(from_binomial_mixture(4, [(HALF, fr(0)), (HALF, fr(1))]))
    assert len(priors) == 50
    return priors


def test_criterion_6_brute_force_oracle_equivalence():
    started = time.perf_counter()
    ok = True
    for prior in _oracle_corpus():
        for n in range(prior.N + 1):
            for s in range(n + 1):
                bits = [1] * s + [0] * (n - s)
                expected = oracle_sequence_probability_bits(prior, bits)
                ok = ok and sequence_probability(prior, HistorySummary(n, s)) == expected
                if n < prior.N and expected > 0:
                    ok = ok and predictive_one(
                        prior, HistorySummary(n, s)
                    ) == oracle_predictive_one(prior, n, s)
    _conclude(6, "exact match against 2^N brute-force enumeration", started, 60.0, ok)


def test_criterion_7_extendibility():
    started = time.perf_counter()
    ok = True

    # the inextendible atom
    ok = ok and not extendibility_check(from_degenerate(2, 1), 1).feasible

    # feasible families re-verify exactly
    for N in (2, 4, 6, 8):
        for p in (fr(0), fr(1, 4), HALF):
            prior = from_binomial(N, p)
            for M in (1, N, 5 * N):
                outcome = extendibility_check(prior, M)
                ok = ok and outcome.feasible and verify_witness(prior, outcome.witness)
            # the independent-trials witness is valid without the solver
            witness = MixtureWitness(5 * N, from_binomial(N + 5 * N, p).pmf)
            ok = ok and verify_witness(prior, witness)
    for population, ones, sample in [(6, 3, 2), (10, 5, 4), (12, 8, 4), (16, 8, 8)]:
        prior = from_hypergeometric(population, ones, sample)
        outcome = extendibility_check(prior, population - sample)
        ok = ok and outcome.feasible and verify_witness(prior, outcome.witness)

    # anything still feasible at M = 5N with a spread-out witness is not tighter
    rng = random.Random(GAMBLER_CORPUS_SEED + 7)
    candidates = []
    for N in range(2, 9):
        candidates.append(from_binomial(N, HALF))
        candidates.append(from_binomial(N, fr(1, 4)))
        candidates.append(uniform(N))
        candidates.append(from_beta_binomial(N, fr(1, 2), fr(1, 2)))
        candidates.append(from_beta_binomial(N, 2, 2))
        candidates.append(
            from_binomial_mixture(N, [(HALF, fr(1, 3)), (HALF, fr(2, 3))])
        )
        candidates.append(from_cmp_binomial(N, HALF, 2))
        candidates.append(from_hypergeometric(2 * N, N, N))
        candidates.append(corpus.random_symmetric_prior(rng, N))
        if N % 2 == 0:
            candidates.append(from_degenerate(N, N // 2))
    for prior in candidates:
        outcome = extendibility_check(prior, 5 * prior.N)
        if not outcome.feasible:
            continue
        ok = ok and verify_witness(prior, outcome.witness)
        if outcome.witness.is_degenerate:
            continue
        ok = ok and tightness_class(prior).verdict is not TightnessLabel.TIGHTER
        ok = ok and second_order_class(prior).verdict is not TightnessLabel.TIGHTER

    _conclude(7, "extendibility certificates and tightness consistency", started, 60.0, ok)


def test_criterion_8_figure_data_reproduction():
    started = time.perf_counter()
    data = emit_figure_data("tightness-ratio", 8)
    curves = data.curves()
    base = dict(curves["binomial"])
    ok = all(base[i] == binomial_tightness_ratio(8, i) for i in range(1, 8))
    for name in ("hypergeometric_4N_2N_N", "hypergeometric_2N_N_N"):
        for i, value in curves[name]:
            ok = ok and value > base[i]
    _conclude(8, "tightness-ratio figure data dominates the Binomial curve", started, 60.0, ok)
