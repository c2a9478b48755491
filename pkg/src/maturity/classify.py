"""Tightness classification and mechanical belief verification.

Two families of predicates live here.

Ratio tests on the count prior itself:

* first-order: is the prior tighter or looser than Binomial(N, 1/2), i.e.
  does P(count=i)/P(count=i−1) beat or trail (N−i+1)/i on the lower half of a
  symmetric support;
* second-order: does the tightness ratio P(i)²/(P(i+1)·P(i−1)) beat or trail
  the Binomial's (i+1)(N−i+1)/(i(N−i)) at every interior index.

Exhaustive belief checks on the induced predictive process:

* gambler's belief: after any history the less-observed outcome is the
  favorite (reverse: the more-observed one);
* belief in maturity: the streak-ending hazard r(m) strictly increases with
  the streak length (reverse: strictly decreases);
* indifferent belief: the predictive never moves.

All inequalities are evaluated in cross-multiplied form so zero atoms never
produce 0/0: an index where both sides vanish is recorded as VACUOUS and
excluded from the for-all.  Approximate-mode priors can yield INDETERMINATE
verdicts when a strict comparison lands inside the tolerance band; they are
never silently resolved.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from enum import Enum
from fractions import Fraction
from typing import Optional

from .errors import InvalidParameterError, ZeroProbabilityHistoryError
from .model import HistorySummary, predictive_table, streak_hazard
from .numerics import (
    ApproxReal,
    Ordering,
    Scalar,
    binomial_coefficient,
    compare_values,
    is_zero,
)
from .priors import GammaPrior


class TightnessLabel(Enum):
    TIGHTER = "TIGHTER"
    LOOSER = "LOOSER"
    BINOMIAL_BOUNDARY = "BINOMIAL_BOUNDARY"
    MIXED = "MIXED"
    NOT_SYMMETRIC = "NOT_SYMMETRIC"
    INDETERMINATE = "INDETERMINATE"


class IndexSide(Enum):
    TIGHTER = "tighter"
    LOOSER = "looser"
    EQUAL = "equal"
    VACUOUS = "vacuous"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class IndexRecord:
    i: int
    side: IndexSide


@dataclass(frozen=True)
class TightnessVerdict:
    verdict: TightnessLabel
    per_index: tuple[IndexRecord, ...]
    mode_caveat: str  # "exact" or "tolerance"


class Belief(Enum):
    GAMBLER = "GAMBLER"
    REVERSE_GAMBLER = "REVERSE_GAMBLER"
    MATURITY = "MATURITY"
    REVERSE_MATURITY = "REVERSE_MATURITY"
    INDIFFERENT = "INDIFFERENT"


class Holds(Enum):
    YES = "yes"
    NO = "no"
    INDETERMINATE = "indeterminate"


class TiesPolicy(Enum):
    #: balanced histories must have predictive exactly 1/2 (automatic for
    #: symmetric priors; generally fails for asymmetric ones)
    STRICT = "strict"
    #: balanced histories are skipped
    SKIP = "skip"


@dataclass(frozen=True)
class Counterexample:
    history: HistorySummary
    predictive: Scalar
    requirement: str


@dataclass(frozen=True)
class BeliefReport:
    belief: Belief
    holds: Holds
    counterexamples: tuple[Counterexample, ...]
    mode_caveat: str = "exact"


@dataclass(frozen=True)
class GamblerAnalysis:
    """Outcome of the exhaustive gambler's-belief check over all histories."""

    gambler: BeliefReport
    reverse_gambler: BeliefReport
    indifferent_probability: Optional[Scalar]
    ties: TiesPolicy

    @property
    def conclusion(self) -> Optional[Belief]:
        if self.indifferent_probability is not None:
            return Belief.INDIFFERENT
        if self.gambler.holds is Holds.YES:
            return Belief.GAMBLER
        if self.reverse_gambler.holds is Holds.YES:
            return Belief.REVERSE_GAMBLER
        return None


@dataclass(frozen=True)
class MaturityAnalysis:
    """Outcome of the streak-hazard monotonicity check."""

    maturity: BeliefReport
    reverse_maturity: BeliefReport
    hazards: tuple[tuple[int, Scalar], ...]
    indifferent_probability: Optional[Scalar]

    @property
    def conclusion(self) -> Optional[Belief]:
        if self.indifferent_probability is not None:
            return Belief.INDIFFERENT
        maturity_yes = self.maturity.holds is Holds.YES
        reverse_yes = self.reverse_maturity.holds is Holds.YES
        if maturity_yes and not reverse_yes:
            return Belief.MATURITY
        if reverse_yes and not maturity_yes:
            return Belief.REVERSE_MATURITY
        return None


def is_symmetric(prior: GammaPrior) -> bool:
    """pmf[i] = pmf[N−i] for all i; within tolerance in approximate mode."""
    for i in range(prior.N // 2 + 1):
        side = compare_values(prior.pmf[i], prior.pmf[prior.N - i])
        if side not in (Ordering.EQUAL, Ordering.WITHIN_TOLERANCE):
            return False
    return True


def _mode_caveat(prior: GammaPrior) -> str:
    return "exact" if prior.is_exact else "tolerance"


def _classify_comparisons(
    comparisons: list[tuple[int, Scalar, Scalar]], caveat: str
) -> TightnessVerdict:
    """Shared verdict taxonomy for the first- and second-order tests.

    Each comparison is (index, lhs, rhs) with the convention lhs > rhs on the
    tighter side.  Both sides zero → VACUOUS, excluded from the for-all; an
    empty nonvacuous set means the inequalities hold only as equalities, the
    Binomial boundary.
    """
    records: list[IndexRecord] = []
    sides: set[IndexSide] = set()
    for i, lhs, rhs in comparisons:
        if is_zero(lhs) and is_zero(rhs):
            records.append(IndexRecord(i, IndexSide.VACUOUS))
            continue
        ordering = compare_values(lhs, rhs)
        if ordering is Ordering.GREATER:
            side = IndexSide.TIGHTER
        elif ordering is Ordering.LESS:
            side = IndexSide.LOOSER
        elif ordering is Ordering.EQUAL:
            side = IndexSide.EQUAL
        else:
            side = IndexSide.INDETERMINATE
        records.append(IndexRecord(i, side))
        sides.add(side)
    if IndexSide.INDETERMINATE in sides:
        verdict = TightnessLabel.INDETERMINATE
    elif not sides or sides == {IndexSide.EQUAL}:
        verdict = TightnessLabel.BINOMIAL_BOUNDARY
    elif sides == {IndexSide.TIGHTER}:
        verdict = TightnessLabel.TIGHTER
    elif sides == {IndexSide.LOOSER}:
        verdict = TightnessLabel.LOOSER
    else:
        verdict = TightnessLabel.MIXED
    return TightnessVerdict(verdict, tuple(records), caveat)


def tightness_class(prior: GammaPrior) -> TightnessVerdict:
    """First-order comparison against Binomial(N, 1/2) on a symmetric prior.

    Evaluates i·P(i) versus (N−i+1)·P(i−1) for 1 ≤ i ≤ ⌊N/2⌋ (the ratio
    inequality cross-multiplied, so zero atoms stay decidable).  Asymmetric
    priors get NOT_SYMMETRIC: the first-order notion presumes symmetry.
    """
    if not is_symmetric(prior):
        return TightnessVerdict(TightnessLabel.NOT_SYMMETRIC, (), _mode_caveat(prior))
    N = prior.N
    comparisons = [
        (i, i * prior.pmf[i], (N - i + 1) * prior.pmf[i - 1])
        for i in range(1, N // 2 + 1)
    ]
    return _classify_comparisons(comparisons, _mode_caveat(prior))


def second_order_class(prior: GammaPrior) -> TightnessVerdict:
    """Second-order comparison: tightness ratio versus the Binomial's.

    Evaluates P(i)²·i(N−i) versus (i+1)(N−i+1)·P(i+1)P(i−1) for
    1 ≤ i ≤ N−1.  Symmetry is not required.
    """
    N = prior.N
    comparisons = [
        (
            i,
            prior.pmf[i] * prior.pmf[i] * (i * (N - i)),
            ((i + 1) * (N - i + 1)) * (prior.pmf[i + 1] * prior.pmf[i - 1]),
        )
        for i in range(1, N)
    ]
    return _classify_comparisons(comparisons, _mode_caveat(prior))


class RatioValue(Enum):
    INFINITE = "INFINITE"
    UNDEFINED = "UNDEFINED"


def tightness_ratio(prior: GammaPrior, i: int) -> Scalar | RatioValue:
    """P(i)² / (P(i+1)·P(i−1)); INFINITE or UNDEFINED at zero denominators."""
    if not 1 <= i <= prior.N - 1:
        raise InvalidParameterError(f"index must lie in [1, {prior.N - 1}], got {i}")
    numerator = prior.pmf[i] * prior.pmf[i]
    denominator = prior.pmf[i + 1] * prior.pmf[i - 1]
    if is_zero(denominator):
        return RatioValue.UNDEFINED if is_zero(numerator) else RatioValue.INFINITE
    return numerator / denominator


def binomial_tightness_ratio(N: int, i: int) -> Fraction:
    """The Binomial's tightness ratio (i+1)(N−i+1)/(i(N−i)); independent of p."""
    return Fraction((i + 1) * (N - i + 1), i * (N - i))


def is_indifferent(prior: GammaPrior) -> Optional[Scalar]:
    """The constant predictive probability, if the prior has one.

    A prior yields a constant predictive exactly when it is Binomial(N, pi),
    in which case pi must be the mean count over N.  Returns that pi, or None.
    In approximate mode the entrywise comparison is within tolerance.
    """
    N = prior.N
    pi = prior.expected_count() / N
    if prior.is_exact:
        candidate = tuple(
            _binomial_term(N, i, pi) for i in range(N + 1)
        )
        return pi if candidate == prior.pmf else None
    for i in range(N + 1):
        term = _binomial_term_approx(N, i, pi)
        if compare_values(prior.pmf[i], term) not in (
            Ordering.EQUAL,
            Ordering.WITHIN_TOLERANCE,
        ):
            return None
    return pi


def _binomial_term(N: int, i: int, p: Fraction) -> Fraction:
    return binomial_coefficient(N, i) * p**i * (1 - p) ** (N - i)


def _binomial_term_approx(N: int, i: int, p: ApproxReal) -> ApproxReal:
    term = ApproxReal(
        Decimal(binomial_coefficient(N, i)), p.precision_bits, p.tolerance
    )
    for _ in range(i):
        term = term * p
    one_minus = 1 - p
    for _ in range(N - i):
        term = term * one_minus
    return term


def verify_gambler(
    prior: GammaPrior, ties: TiesPolicy = TiesPolicy.STRICT
) -> GamblerAnalysis:
    """Exhaustively check the gambler's belief and its reverse.

    For every positive-probability history (n, s) with n < N the gambler's
    belief requires the predictive to favor the less-observed outcome:
    strictly above 1/2 when zeros lead, strictly below when ones lead, and
    exactly 1/2 on balanced histories under the STRICT ties policy.  The
    reverse belief mirrors the strict requirements.  Impossible histories are
    excluded (their predictive is undefined, not zero).
    """
    table = predictive_table(prior)
    half = Fraction(1, 2)
    caveat = _mode_caveat(prior)

    gambler_bad: list[Counterexample] = []
    reverse_bad: list[Counterexample] = []
    gambler_fuzzy = False
    reverse_fuzzy = False

    for (n, s), predictive in table.items_sorted():
        ordering = compare_values(predictive, half)
        balanced = 2 * s == n
        history = HistorySummary(n, s)
        if balanced:
            if ties is TiesPolicy.SKIP:
                continue
            # An equality requirement: within tolerance counts as satisfied
            # (flagged through the report's mode_caveat), a resolved strict
            # ordering is a violation.
            if ordering in (Ordering.LESS, Ordering.GREATER):
                gambler_bad.append(Counterexample(history, predictive, "= 1/2"))
                reverse_bad.append(Counterexample(history, predictive, "= 1/2"))
            continue
        if s < n - s:
            need_gambler, need_reverse = Ordering.GREATER, Ordering.LESS
            req_gambler, req_reverse = "> 1/2", "< 1/2"
        else:
            need_gambler, need_reverse = Ordering.LESS, Ordering.GREATER
            req_gambler, req_reverse = "< 1/2", "> 1/2"
        if ordering is Ordering.WITHIN_TOLERANCE:
            gambler_fuzzy = True
            reverse_fuzzy = True
            continue
        if ordering is not need_gambler:
            gambler_bad.append(Counterexample(history, predictive, req_gambler))
        if ordering is not need_reverse:
            reverse_bad.append(Counterexample(history, predictive, req_reverse))

    def report(belief: Belief, bad: list[Counterexample], fuzzy: bool) -> BeliefReport:
        if bad:
            holds = Holds.NO
        elif fuzzy:
            holds = Holds.INDETERMINATE
        else:
            holds = Holds.YES
        return BeliefReport(belief, holds, tuple(bad), caveat)

    return GamblerAnalysis(
        gambler=report(Belief.GAMBLER, gambler_bad, gambler_fuzzy),
        reverse_gambler=report(Belief.REVERSE_GAMBLER, reverse_bad, reverse_fuzzy),
        indifferent_probability=is_indifferent(prior),
        ties=ties,
    )


def defined_streak_hazards(prior: GammaPrior) -> tuple[tuple[int, Scalar], ...]:
    """r(m) for every m whose conditioning event is possible (a prefix of 1..N)."""
    hazards: list[tuple[int, Scalar]] = []
    for m in range(1, prior.N + 1):
        try:
            hazards.append((m, streak_hazard(prior, m)))
        except ZeroProbabilityHistoryError:
            break
    return tuple(hazards)


def verify_maturity(prior: GammaPrior) -> MaturityAnalysis:
    """Check whether the streak-ending hazard is strictly monotone.

    Belief in maturity holds when r(m) strictly increases over every defined
    m; the reverse belief when it strictly decreases.  The report carries the
    full hazard vector.
    """
    hazards = defined_streak_hazards(prior)
    caveat = _mode_caveat(prior)

    up_bad: list[Counterexample] = []
    down_bad: list[Counterexample] = []
    fuzzy = False
    for (m, current), (m_next, nxt) in zip(hazards, hazards[1:]):
        ordering = compare_values(nxt, current)
        history = HistorySummary(m, 0)
        if ordering is Ordering.WITHIN_TOLERANCE:
            fuzzy = True
            continue
        if ordering is not Ordering.GREATER:
            up_bad.append(
                Counterexample(history, nxt, f"r({m_next}) > r({m})")
            )
        if ordering is not Ordering.LESS:
            down_bad.append(
                Counterexample(history, nxt, f"r({m_next}) < r({m})")
            )

    def report(belief: Belief, bad: list[Counterexample]) -> BeliefReport:
        if bad:
            holds = Holds.NO
        elif fuzzy:
            holds = Holds.INDETERMINATE
        else:
            holds = Holds.YES
        return BeliefReport(belief, holds, tuple(bad), caveat)

    return MaturityAnalysis(
        maturity=report(Belief.MATURITY, up_bad),
        reverse_maturity=report(Belief.REVERSE_MATURITY, down_bad),
        hazards=hazards,
        indifferent_probability=is_indifferent(prior),
    )
