"""Unit tests for tightness classification and belief verification."""

import random
from fractions import Fraction

import pytest

from maturity import (
    Belief,
    Holds,
    IndexSide,
    InvalidParameterError,
    Ordering,
    RatioValue,
    TiesPolicy,
    TightnessLabel,
    binomial_tightness_ratio,
    compare_values,
    defined_streak_hazards,
    from_beta_binomial,
    from_binomial,
    from_binomial_mixture,
    from_cmp_binomial,
    from_degenerate,
    from_hypergeometric,
    from_pmf,
    is_indifferent,
    is_symmetric,
    predictive_table,
    second_order_class,
    tightness_class,
    tightness_ratio,
    uniform,
    verify_gambler,
    verify_maturity,
)
from maturity.corpus import random_symmetric_prior

HALF = Fraction(1, 2)


def fr(*args) -> Fraction:
    return Fraction(*args)


class TestIsSymmetric:
    def test_fair_binomial(self):
        assert is_symmetric(from_binomial(4, HALF))

    def test_skewed_binomial(self):
        assert not is_symmetric(from_binomial(4, fr(1, 3)))

    def test_equal_shape_beta_binomial(self):
        assert is_symmetric(from_beta_binomial(5, 2, 2))

    def test_approximate_symmetric(self):
        assert is_symmetric(from_cmp_binomial(6, HALF, fr(5, 2)))
        assert not is_symmetric(from_cmp_binomial(6, fr(1, 4), fr(5, 2)))


class TestTightnessClass:
    def test_squared_coefficients_are_tighter(self):
        verdict = tightness_class(from_cmp_binomial(6, HALF, 2))
        assert verdict.verdict is TightnessLabel.TIGHTER
        assert verdict.mode_caveat == "exact"

    def test_uniform_is_looser(self):
        assert (
            tightness_class(from_beta_binomial(6, 1, 1)).verdict
            is TightnessLabel.LOOSER
        )

    def test_w_shaped_pmf_is_mixed(self):
        # ratios at i=1 and i=2 land on opposite sides
        assert tightness_class(from_pmf([3, 1, 2, 1, 3])).verdict is TightnessLabel.MIXED

    def test_binomial_is_the_boundary(self):
        assert (
            tightness_class(from_binomial(6, HALF)).verdict
            is TightnessLabel.BINOMIAL_BOUNDARY
        )

    def test_asymmetric_is_flagged(self):
        assert (
            tightness_class(from_binomial(6, fr(1, 3))).verdict
            is TightnessLabel.NOT_SYMMETRIC
        )

    def test_degenerate_middle_is_tighter_with_vacuous_indices(self):
        verdict = tightness_class(from_degenerate(4, 2))
        assert verdict.verdict is TightnessLabel.TIGHTER
        sides = {record.i: record.side for record in verdict.per_index}
        assert sides == {1: IndexSide.VACUOUS, 2: IndexSide.TIGHTER}

    def test_single_trial_symmetric_is_boundary(self):
        # the only symmetric prior on one trial is Binomial(1, 1/2)
        assert (
            tightness_class(from_pmf([1, 1])).verdict
            is TightnessLabel.BINOMIAL_BOUNDARY
        )

    def test_approximate_decisive(self):
        verdict = tightness_class(from_cmp_binomial(8, HALF, fr(5, 2)))
        assert verdict.verdict is TightnessLabel.TIGHTER
        assert verdict.mode_caveat == "tolerance"
        looser = tightness_class(from_cmp_binomial(8, HALF, fr(3, 4)))
        assert looser.verdict is TightnessLabel.LOOSER

    def test_approximate_indeterminate_near_boundary(self):
        # an exponent this close to 1 cannot be separated from the Binomial
        # at the default tolerance; the verdict must say so
        nu = Fraction(10**60 + 1, 10**60)
        verdict = tightness_class(from_cmp_binomial(6, HALF, nu))
        assert verdict.verdict is TightnessLabel.INDETERMINATE


class TestSecondOrderClass:
    def test_hypergeometric_is_second_order_tighter(self):
        assert (
            second_order_class(from_hypergeometric(12, 6, 3)).verdict
            is TightnessLabel.TIGHTER
        )

    def test_binomial_boundary_for_any_p(self):
        for p in (fr(0), fr(1, 4), fr(1, 2), fr(2, 3), fr(1)):
            assert (
                second_order_class(from_binomial(6, p)).verdict
                is TightnessLabel.BINOMIAL_BOUNDARY
            )

    def test_mixture_is_second_order_looser(self):
        prior = from_binomial_mixture(4, [(HALF, fr(1, 4)), (HALF, fr(3, 4))])
        assert second_order_class(prior).verdict is TightnessLabel.LOOSER

    def test_symmetry_not_required(self):
        assert (
            second_order_class(from_cmp_binomial(6, fr(1, 4), 2)).verdict
            is TightnessLabel.TIGHTER
        )

    def test_endpoint_mixture_is_not_strictly_looser(self):
        # a component at p=0 zeroes interior masses: some indices collapse to
        # equality, so the strict verdict honestly degrades to MIXED
        prior = from_binomial_mixture(4, [(HALF, fr(0)), (HALF, HALF)])
        assert second_order_class(prior).verdict is TightnessLabel.MIXED

    def test_degenerate_is_second_order_tighter(self):
        assert (
            second_order_class(from_degenerate(4, 2)).verdict
            is TightnessLabel.TIGHTER
        )


class TestTightnessRatio:
    def test_binomial_ratio_value(self):
        assert tightness_ratio(from_binomial(4, HALF), 2) == fr(9, 4)
        assert binomial_tightness_ratio(4, 2) == fr(9, 4)

    def test_degenerate_ratio_infinite(self):
        assert tightness_ratio(from_degenerate(4, 2), 2) is RatioValue.INFINITE

    def test_degenerate_ratio_undefined_off_center(self):
        assert tightness_ratio(from_degenerate(4, 2), 1) is RatioValue.UNDEFINED

    def test_hypergeometric_beats_binomial(self):
        assert tightness_ratio(from_hypergeometric(8, 4, 4), 2) > fr(9, 4)

    def test_index_range(self):
        with pytest.raises(InvalidParameterError):
            tightness_ratio(uniform(3), 0)
        with pytest.raises(InvalidParameterError):
            tightness_ratio(uniform(3), 3)


class TestIsIndifferent:
    def test_recovers_binomial_parameter(self):
        assert is_indifferent(from_binomial(3, fr(1, 3))) == fr(1, 3)

    def test_uniform_is_not_indifferent(self):
        assert is_indifferent(uniform(3)) is None

    def test_cmp_with_unit_exponent(self):
        assert is_indifferent(from_cmp_binomial(4, HALF, 1)) == HALF

    def test_every_single_trial_prior_is_indifferent(self):
        assert is_indifferent(from_pmf([2, 5])) == fr(5, 7)

    def test_matches_constant_table_exactly(self):
        # nonempty iff the predictive table is constant, over a seeded corpus
        rng = random.Random(11)
        priors = [from_binomial(n, fr(rng.randint(0, 4), 4)) for n in range(2, 8)]
        priors += [random_symmetric_prior(rng, n) for n in range(2, 8)]
        priors += [from_pmf([rng.randint(1, 50) for _ in range(n + 1)]) for n in range(2, 8)]
        for prior in priors:
            values = [value for _, value in predictive_table(prior).items_sorted()]
            constant = all(value == values[0] for value in values)
            assert (is_indifferent(prior) is not None) == constant

    def test_approximate_non_binomial(self):
        assert is_indifferent(from_cmp_binomial(5, HALF, fr(3, 2))) is None


class TestVerifyGambler:
    def test_tighter_prior_exhibits_gamblers_belief(self):
        analysis = verify_gambler(from_cmp_binomial(6, HALF, 2))
        assert analysis.conclusion is Belief.GAMBLER
        assert analysis.gambler.holds is Holds.YES
        assert analysis.gambler.counterexamples == ()

    def test_beta_binomial_exhibits_reverse(self):
        analysis = verify_gambler(from_beta_binomial(6, 2, 2))
        assert analysis.conclusion is Belief.REVERSE_GAMBLER
        assert analysis.reverse_gambler.holds is Holds.YES

    def test_binomial_is_indifferent_with_counterexamples(self):
        analysis = verify_gambler(from_binomial(5, HALF))
        assert analysis.conclusion is Belief.INDIFFERENT
        assert analysis.gambler.holds is Holds.NO
        assert analysis.reverse_gambler.holds is Holds.NO
        assert len(analysis.gambler.counterexamples) > 0

    def test_counterexamples_carry_requirements(self):
        analysis = verify_gambler(from_beta_binomial(4, 2, 2))
        failure = analysis.gambler.counterexamples[0]
        assert failure.requirement in ("> 1/2", "< 1/2", "= 1/2")

    def test_mixed_prior_fails_both(self):
        analysis = verify_gambler(from_pmf([3, 1, 2, 1, 3]))
        assert analysis.conclusion is None
        assert analysis.gambler.holds is Holds.NO
        assert analysis.reverse_gambler.holds is Holds.NO

    def test_ties_skip_policy(self):
        # skewed Binomial: under STRICT the balanced histories violate the
        # exact-half tie rule; SKIP drops them
        prior = from_binomial(4, fr(1, 3))
        strict = verify_gambler(prior, TiesPolicy.STRICT)
        assert any(
            failure.requirement == "= 1/2"
            for failure in strict.gambler.counterexamples
        )
        skipped = verify_gambler(prior, TiesPolicy.SKIP)
        assert all(
            failure.requirement != "= 1/2"
            for failure in skipped.gambler.counterexamples
        )

    def test_approximate_mode_decisive(self):
        analysis = verify_gambler(from_cmp_binomial(6, HALF, fr(5, 2)))
        assert analysis.conclusion is Belief.GAMBLER
        assert analysis.gambler.mode_caveat == "tolerance"

    def test_approximate_mode_indeterminate_near_boundary(self):
        # at tolerance this prior cannot be told apart from Binomial(4, 1/2):
        # the strict checks go indeterminate and the conclusion falls back to
        # within-tolerance indifference
        nu = Fraction(10**60 + 1, 10**60)
        analysis = verify_gambler(from_cmp_binomial(4, HALF, nu))
        assert analysis.gambler.holds is Holds.INDETERMINATE
        assert analysis.reverse_gambler.holds is Holds.INDETERMINATE
        assert analysis.conclusion is Belief.INDIFFERENT


class TestVerifyMaturity:
    def test_urn_depletion(self):
        analysis = verify_maturity(from_degenerate(4, 2))
        assert analysis.conclusion is Belief.MATURITY
        assert [r for _, r in analysis.hazards] == [HALF, fr(2, 3), fr(1)]

    def test_uniform_laplace_reverse(self):
        analysis = verify_maturity(from_beta_binomial(5, 1, 1))
        assert analysis.conclusion is Belief.REVERSE_MATURITY
        assert [r for _, r in analysis.hazards] == [fr(1, m + 1) for m in range(1, 6)]

    def test_binomial_constant_hazard(self):
        analysis = verify_maturity(from_binomial(5, fr(1, 3)))
        assert analysis.conclusion is Belief.INDIFFERENT
        assert analysis.maturity.holds is Holds.NO
        assert analysis.reverse_maturity.holds is Holds.NO
        assert all(r == fr(1, 3) for _, r in analysis.hazards)

    def test_counterexamples_name_the_offending_step(self):
        analysis = verify_maturity(from_binomial(4, HALF))
        assert analysis.maturity.counterexamples[0].requirement.startswith("r(")

    def test_single_defined_hazard(self):
        # an all-ones population: the streak can never reach trial two, so
        # monotonicity holds vacuously in both directions; the prior is
        # Binomial(3, 1), hence the indifferent conclusion wins
        analysis = verify_maturity(from_degenerate(3, 3))
        assert [m for m, _ in analysis.hazards] == [1]
        assert analysis.maturity.holds is Holds.YES
        assert analysis.reverse_maturity.holds is Holds.YES
        assert analysis.conclusion is Belief.INDIFFERENT

    def test_hazards_match_defined_streak_hazards(self):
        prior = from_pmf([1, 2, 3, 2, 1])
        assert verify_maturity(prior).hazards == defined_streak_hazards(prior)


class TestEquivalenceSpotChecks:
    """Seeded miniature versions of the corpus equivalences (the acceptance
    suite runs them at full scale)."""

    def test_gambler_iff_tighter_small_corpus(self):
        rng = random.Random(3)
        for _ in range(60):
            n = rng.randint(2, 10)
            prior = random_symmetric_prior(rng, n)
            verdict = tightness_class(prior).verdict
            conclusion = verify_gambler(prior).conclusion
            assert (conclusion is Belief.GAMBLER) == (verdict is TightnessLabel.TIGHTER)
            assert (conclusion is Belief.REVERSE_GAMBLER) == (
                verdict is TightnessLabel.LOOSER
            )

    def test_second_order_forces_maturity_direction(self):
        rng = random.Random(4)
        priors = [random_symmetric_prior(rng, rng.randint(2, 10)) for _ in range(40)]
        priors += [
            from_cmp_binomial(6, fr(1, 4), 3),
            from_cmp_binomial(7, fr(2, 3), fr(1, 2)),
            from_beta_binomial(6, 2, 5),
        ]
        for prior in priors:
            verdict = second_order_class(prior).verdict
            analysis = verify_maturity(prior)
            if verdict is TightnessLabel.TIGHTER:
                assert analysis.maturity.holds is Holds.YES
            elif verdict is TightnessLabel.LOOSER:
                assert analysis.reverse_maturity.holds is Holds.YES

    def test_tighter_hazards_stay_above_half(self):
        rng = random.Random(5)
        for _ in range(40):
            prior = random_symmetric_prior(rng, rng.randint(2, 10))
            verdict = tightness_class(prior).verdict
            if verdict not in (TightnessLabel.TIGHTER, TightnessLabel.LOOSER):
                continue
            need = (
                Ordering.GREATER
                if verdict is TightnessLabel.TIGHTER
                else Ordering.LESS
            )
            for m, hazard in verify_maturity(prior).hazards:
                if m >= 2:
                    assert compare_values(hazard, HALF) is need
