"""Priors on the success count of a finite exchangeable 0/1 population.

A population of size N is fully described by a distribution over the number
of ones it contains.  :class:`GammaPrior` holds that distribution; the
constructors below build every family the rest of the package classifies:
Binomial, Beta-Binomial, CMP-Binomial, Hypergeometric sub-population,
degenerate, raw PMFs, and finite Binomial mixtures.

Everything stays exact except the CMP-Binomial with a non-integer exponent,
whose weights are irrational; that constructor returns an APPROXIMATE prior
whose entries are :class:`~maturity.numerics.ApproxReal` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidParameterError
from .numerics import (
    DEFAULT_TOLERANCE,
    ApproxReal,
    Scalar,
    _context_digits,
    as_fraction,
    binomial_coefficient,
    default_precision_bits,
    format_rational,
    parse_rational,
    rising_factorial,
    scalar_to_string,
)


class PriorMode(Enum):
    EXACT = "exact"
    APPROXIMATE = "approximate"


@dataclass(frozen=True)
class GammaPrior:
    """Distribution of the number of ones in a population of size N.

    ``pmf[i]`` is the probability that exactly i of the N members are ones.
    Immutable; construction validates nonnegativity and normalization
    (exactly in EXACT mode, to within tolerance in APPROXIMATE mode).
    """

    N: int
    pmf: tuple[Scalar, ...]
    mode: PriorMode = PriorMode.EXACT
    label: str = ""

    def __post_init__(self) -> None:
        if not isinstance(self.N, int) or self.N < 1:
            raise InvalidParameterError(f"population size must be >= 1, got {self.N}")
        if len(self.pmf) != self.N + 1:
            raise InvalidParameterError(
                f"pmf needs {self.N + 1} entries for N={self.N}, got {len(self.pmf)}"
            )
        if self.mode is PriorMode.EXACT:
            if not all(isinstance(p, Fraction) for p in self.pmf):
                raise InvalidParameterError("exact priors must have Fraction entries")
            if any(p < 0 for p in self.pmf):
                raise InvalidParameterError("pmf entries must be nonnegative")
            if sum(self.pmf) != 1:
                raise InvalidParameterError("exact pmf must sum to exactly 1")
        else:
            if not all(isinstance(p, ApproxReal) for p in self.pmf):
                raise InvalidParameterError(
                    "approximate priors must have ApproxReal entries"
                )
            if any(p.value < 0 for p in self.pmf):
                raise InvalidParameterError("pmf entries must be nonnegative")
            total = self.pmf[0]
            for p in self.pmf[1:]:
                total = total + p
            if abs(total.value - 1) > total.tolerance:
                raise InvalidParameterError("approximate pmf must sum to 1 within tolerance")

    @property
    def is_exact(self) -> bool:
        return self.mode is PriorMode.EXACT

    def expected_count(self) -> Scalar:
        """Mean number of ones in the population."""
        total = 0 * self.pmf[0]
        for i, p in enumerate(self.pmf):
            total = total + i * p
        return total

    def support(self) -> tuple[int, ...]:
        """Indices with positive mass (exact mode only)."""
        if not self.is_exact:
            raise InvalidParameterError("support is only defined for exact priors")
        return tuple(i for i, p in enumerate(self.pmf) if p > 0)

    def to_json_dict(self) -> dict:
        return {
            "N": self.N,
            "pmf": [scalar_to_string(p) for p in self.pmf],
        }


def _check_probability(p: Fraction, name: str, *, strict: bool = False) -> None:
    lo_bad = p <= 0 if strict else p < 0
    hi_bad = p >= 1 if strict else p > 1
    if lo_bad or hi_bad:
        bounds = "(0,1)" if strict else "[0,1]"
        raise InvalidParameterError(f"{name} must lie in {bounds}, got {format_rational(p)}")


def _normalized(weights: Sequence[Fraction]) -> tuple[Fraction, ...]:
    total = sum(weights)
    if total <= 0:
        raise InvalidParameterError("weights must have positive total mass")
    return tuple(w / total for w in weights)


def from_binomial(N: int, p: Fraction | int | str) -> GammaPrior:
    """Binomial(N, p) count: the population behaves like independent trials.

    This is the indifference boundary: the predictive probability under this
    prior never moves, whatever has been observed.
    """
    p = as_fraction(p)
    _check_probability(p, "p")
    pmf = tuple(
        binomial_coefficient(N, i) * p**i * (1 - p) ** (N - i) for i in range(N + 1)
    )
    return GammaPrior(N, pmf, label=f"binomial(N={N}, p={format_rational(p)})")


def from_beta_binomial(
    N: int, alpha: Fraction | int | str, beta: Fraction | int | str
) -> GammaPrior:
    """Beta-Binomial(N, alpha, beta) count, exact via rising factorials.

    pmf[i] = C(N,i) · rising(alpha, i) · rising(beta, N−i) / rising(alpha+beta, N).
    Parameters must be rational (and positive) so the PMF stays exact.
    """
    alpha = as_fraction(alpha)
    beta = as_fraction(beta)
    if alpha <= 0 or beta <= 0:
        raise InvalidParameterError("alpha and beta must be positive")
    denom = rising_factorial(alpha + beta, N)
    pmf = tuple(
        binomial_coefficient(N, i)
        * rising_factorial(alpha, i)
        * rising_factorial(beta, N - i)
        / denom
        for i in range(N + 1)
    )
    return GammaPrior(
        N,
        pmf,
        label=f"beta_binomial(N={N}, alpha={format_rational(alpha)}, beta={format_rational(beta)})",
    )


def from_cmp_binomial(
    N: int,
    p: Fraction | int | str,
    nu: Fraction | int | str,
    *,
    precision_bits: int | None = None,
    tolerance: Decimal | None = None,
) -> GammaPrior:
    """CMP-Binomial(N, p, nu): pmf[i] ∝ C(N,i)^nu · p^i · (1−p)^(N−i).

    nu = 1 recovers the Binomial; nu > 1 concentrates mass toward the middle
    (under-dispersion), nu < 1 spreads it out.  Exact when nu is a
    nonnegative integer; otherwise the C(N,i)^nu weights are irrational and
    the prior is built in APPROXIMATE mode at the requested precision.
    """
    p = as_fraction(p)
    nu = as_fraction(nu)
    _check_probability(p, "p", strict=True)
    label = f"cmp_binomial(N={N}, p={format_rational(p)}, nu={format_rational(nu)})"
    if nu.denominator == 1 and nu >= 0:
        power = int(nu)
        weights = [
            Fraction(binomial_coefficient(N, i)) ** power * p**i * (1 - p) ** (N - i)
            for i in range(N + 1)
        ]
        return GammaPrior(N, _normalized(weights), label=label)

    bits = precision_bits if precision_bits is not None else default_precision_bits()
    tol = tolerance if tolerance is not None else DEFAULT_TOLERANCE
    with localcontext() as ctx:
        ctx.prec = _context_digits(bits)
        p_dec = Decimal(p.numerator) / Decimal(p.denominator)
        q_dec = Decimal((1 - p).numerator) / Decimal((1 - p).denominator)
        weights = []
        for i in range(N + 1):
            coeff = binomial_coefficient(N, i)
            # C^nu = exp(nu·ln C) keeps the rational exponent exact until the
            # final transcendental step.
            powered = (
                Decimal(coeff).ln() * Decimal(nu.numerator) / Decimal(nu.denominator)
            ).exp()
            weights.append(powered * p_dec**i * q_dec ** (N - i))
        total = sum(weights)
        entries = tuple(ApproxReal(w / total, bits, tol) for w in weights)
    return GammaPrior(N, entries, mode=PriorMode.APPROXIMATE, label=label)


def hypergeometric_pmf(population: int, ones: int, sample: int) -> tuple[Fraction, ...]:
    """PMF of the number of ones in a size-`sample` draw without replacement
    from a population of size `population` containing `ones` ones."""
    if population < 1:
        raise InvalidParameterError("population must be >= 1")
    if not 0 <= ones <= population:
        raise InvalidParameterError(
            f"ones must lie in [0, {population}], got {ones}"
        )
    if not 1 <= sample <= population:
        raise InvalidParameterError(
            f"sample must lie in [1, {population}], got {sample}"
        )
    denom = binomial_coefficient(population, sample)
    return tuple(
        Fraction(
            binomial_coefficient(ones, i) * binomial_coefficient(population - ones, sample - i),
            denom,
        )
        for i in range(sample + 1)
    )


def from_hypergeometric(population: int, ones: int, sample: int) -> GammaPrior:
    """Count prior for a sub-population of size `sample` carved out of a larger
    population with a known number of ones.

    The returned prior has N = sample: it describes the sub-population count,
    not the full-population count.
    """
    pmf = hypergeometric_pmf(population, ones, sample)
    return GammaPrior(
        sample,
        pmf,
        label=f"hypergeometric(population={population}, ones={ones}, sample={sample})",
    )


def from_degenerate(N: int, g: int) -> GammaPrior:
    """Point mass: the population is known to contain exactly g ones."""
    if not isinstance(N, int) or N < 1:
        raise InvalidParameterError(f"population size must be >= 1, got {N}")
    if not 0 <= g <= N:
        raise InvalidParameterError(f"g must lie in [0, {N}], got {g}")
    pmf = tuple(Fraction(1) if i == g else Fraction(0) for i in range(N + 1))
    return GammaPrior(N, pmf, label=f"degenerate(N={N}, g={g})")


def from_pmf(
    weights: Iterable[Fraction | int | str], *, label: str | None = None
) -> GammaPrior:
    """Custom prior from nonnegative weights; normalized on construction."""
    ws = [as_fraction(w) for w in weights]
    if len(ws) < 2:
        raise InvalidParameterError("need at least 2 weights (N >= 1)")
    if any(w < 0 for w in ws):
        raise InvalidParameterError("weights must be nonnegative")
    pmf = _normalized(ws)
    return GammaPrior(len(ws) - 1, pmf, label=label if label is not None else "pmf")


def uniform(N: int) -> GammaPrior:
    """Uniform count prior on {0, …, N} (Beta-Binomial with both shapes 1)."""
    return from_pmf([1] * (N + 1), label=f"uniform(N={N})")


def from_binomial_mixture(
    N: int,
    components: Sequence[tuple[Fraction | int | str, Fraction | int | str]],
) -> GammaPrior:
    """Finite mixture of Binomial(N, p_j) counts with positive weights.

    Weights are normalized to sum to exactly 1.  Mixing strictly distinct
    components always spreads the count distribution out, never tightens it.
    """
    if not components:
        raise InvalidParameterError("mixture needs at least one component")
    parsed: list[tuple[Fraction, Fraction]] = []
    for weight, p in components:
        w = as_fraction(weight)
        pp = as_fraction(p)
        if w <= 0:
            raise InvalidParameterError("mixture weights must be positive")
        _check_probability(pp, "component p")
        parsed.append((w, pp))
    total = sum(w for w, _ in parsed)
    pmf = tuple(
        sum(
            (w / total) * binomial_coefficient(N, i) * p**i * (1 - p) ** (N - i)
            for w, p in parsed
        )
        for i in range(N + 1)
    )
    desc = ", ".join(
        f"({format_rational(w / total)}, {format_rational(p)})" for w, p in parsed
    )
    return GammaPrior(N, pmf, label=f"binomial_mixture(N={N}, components=[{desc}])")


def prior_from_json_dict(payload: dict, *, label: str | None = None) -> GammaPrior:
    """Load the custom-prior schema: { "N": int, "pmf": ["num/den", ...] }."""
    if not isinstance(payload, dict):
        raise InvalidParameterError("prior file must contain a JSON object")
    try:
        n = payload["N"]
        raw = payload["pmf"]
    except KeyError as exc:
        raise InvalidParameterError(f"prior file is missing key {exc.args[0]!r}") from exc
    if not isinstance(n, int):
        raise InvalidParameterError('"N" must be an integer')
    if not isinstance(raw, list) or len(raw) != n + 1:
        raise InvalidParameterError(f'"pmf" must be a list of {n + 1} entries')
    weights = [parse_rational(str(entry)) for entry in raw]
    return from_pmf(weights, label=label if label is not None else "pmf-file")


def mixture_from_json_dict(payload: dict) -> GammaPrior:
    """Load the mixture schema:
    { "N": int, "components": [{"weight": "1/2", "p": "1/4"}, ...] }."""
    if not isinstance(payload, dict):
        raise InvalidParameterError("mixture file must contain a JSON object")
    try:
        n = payload["N"]
        raw = payload["components"]
    except KeyError as exc:
        raise InvalidParameterError(f"mixture file is missing key {exc.args[0]!r}") from exc
    if not isinstance(n, int):
        raise InvalidParameterError('"N" must be an integer')
    if not isinstance(raw, list) or not raw:
        raise InvalidParameterError('"components" must be a nonempty list')
    components = []
    for entry in raw:
        if not isinstance(entry, dict) or "weight" not in entry or "p" not in entry:
            raise InvalidParameterError(
                'each component needs "weight" and "p" entries'
            )
        components.append((parse_rational(str(entry["weight"])), parse_rational(str(entry["p"]))))
    return from_binomial_mixture(n, components)
