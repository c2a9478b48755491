"""M-extendibility: can the count prior come from a larger exchangeable population?

A population of size N sitting inside an exchangeable population of size
N + M has a count law that is a mixture of Hypergeometric(N+M, a, N) columns,
one per possible larger-population count a.  Deciding M-extendibility is
therefore exact linear feasibility:

    find q >= 0 with  A q = pmf,   column a of A = Hypergeometric(N+M, a, N).

Every column sums to 1, so any solution automatically has total mass 1.
Solved by a phase-one simplex over Fractions with Bland's pivoting rule —
problem sizes here are tiny, so exactness beats speed, and a floating-point
LP could misreport feasibility on the boundary (where the interesting priors
live).

Only finite M is ever decided.  A profile over M = 1..M_max approximates the
infinite-extendibility hypothesis from below; it never certifies it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import ApproximateModeError, InvalidParameterError
from .numerics import format_rational
from .priors import GammaPrior, hypergeometric_pmf


@dataclass(frozen=True)
class MixtureWitness:
    """Nonnegative weights over larger-population counts certifying feasibility.

    weights[a] is the mass on the event that the size-(N+M) population holds
    a ones; mixing the corresponding Hypergeometric columns reproduces the
    prior exactly.  Witnesses are generally nonunique; only the verification
    equation is part of the contract.
    """

    M: int
    weights: tuple[Fraction, ...]

    @property
    def is_degenerate(self) -> bool:
        return sum(1 for w in self.weights if w > 0) == 1

    def to_json_list(self) -> list[str]:
        return [format_rational(w) for w in self.weights]


@dataclass(frozen=True)
class ExtendibilityResult:
    M: int
    feasible: bool
    witness: Optional[MixtureWitness]

    @property
    def verdict(self) -> str:
        return "FEASIBLE" if self.feasible else "INFEASIBLE"


def hypergeometric_mixture_matrix(N: int, M: int) -> list[list[Fraction]]:
    """Rows i = 0..N, columns a = 0..N+M of Hypergeometric(N+M, a, N) masses."""
    columns = [hypergeometric_pmf(N + M, a, N) for a in range(N + M + 1)]
    return [[columns[a][i] for a in range(N + M + 1)] for i in range(N + 1)]


def verify_witness(prior: GammaPrior, witness: MixtureWitness) -> bool:
    """Exact check that the witness mixture reproduces the prior's pmf."""
    if not prior.is_exact:
        raise ApproximateModeError("witness verification requires an exact prior")
    if len(witness.weights) != prior.N + witness.M + 1:
        return False
    if any(w < 0 for w in witness.weights):
        return False
    if sum(witness.weights) != 1:
        return False
    matrix = hypergeometric_mixture_matrix(prior.N, witness.M)
    for i in range(prior.N + 1):
        mixed = sum(
            matrix[i][a] * witness.weights[a] for a in range(len(witness.weights))
        )
        if mixed != prior.pmf[i]:
            return False
    return True


def solve_equality_feasibility(
    matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> Optional[list[Fraction]]:
    """Find x >= 0 with matrix·x = rhs over exact rationals, or None.

    Phase-one simplex: minimize the sum of one artificial variable per row
    (rhs must be nonnegative, which probabilities are).  Bland's rule —
    entering variable of smallest index with negative reduced cost, ties in
    the ratio test broken toward the smallest basic index — guarantees
    termination despite degenerate pivots.
    """
    m = len(rhs)
    if m == 0:
        raise InvalidParameterError("feasibility system needs at least one row")
    n = len(matrix[0])
    if any(len(row) != n for row in matrix):
        raise InvalidParameterError("ragged constraint matrix")
    if any(b < 0 for b in rhs):
        raise InvalidParameterError("rhs entries must be nonnegative")

    ncols = n + m
    tableau = [
        [Fraction(v) for v in matrix[i]]
        + [Fraction(1) if j == i else Fraction(0) for j in range(m)]
        + [Fraction(rhs[i])]
        for i in range(m)
    ]
    basis = [n + i for i in range(m)]
    # Reduced costs for min Σ artificials with the artificial basis priced out.
    cost = [
        (Fraction(1) if j >= n else Fraction(0)) - sum(tableau[i][j] for i in range(m))
        for j in range(ncols)
    ]

    while True:
        enter = next((j for j in range(ncols) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        best: Optional[Fraction] = None
        for i in range(m):
            coef = tableau[i][enter]
            if coef > 0:
                ratio = tableau[i][-1] / coef
                if (
                    best is None
                    or ratio < best
                    or (ratio == best and basis[i] < basis[leave])
                ):
                    best = ratio
                    leave = i
        if leave is None:
            # The phase-one objective is bounded below by zero, so an
            # unbounded ray means the tableau got corrupted.
            raise RuntimeError("phase-one simplex found an unbounded direction")
        pivot = tableau[leave][enter]
        tableau[leave] = [v / pivot for v in tableau[leave]]
        for i in range(m):
            if i != leave and tableau[i][enter] != 0:
                factor = tableau[i][enter]
                tableau[i] = [
                    v - factor * w for v, w in zip(tableau[i], tableau[leave])
                ]
        if cost[enter] != 0:
            factor = cost[enter]
            for j in range(ncols):
                cost[j] -= factor * tableau[leave][j]
        basis[leave] = enter

    residual = sum(tableau[i][-1] for i in range(m) if basis[i] >= n)
    if residual != 0:
        return None
    solution = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            solution[basis[i]] = tableau[i][-1]
    return solution


def extendibility_check(prior: GammaPrior, M: int) -> ExtendibilityResult:
    """Decide M-extendibility; FEASIBLE results carry a re-verified witness."""
    if not prior.is_exact:
        raise ApproximateModeError(
            "extendibility is decided by exact feasibility; approximate priors are rejected"
        )
    if M < 1:
        raise InvalidParameterError(f"M must be >= 1, got {M}")
    matrix = hypergeometric_mixture_matrix(prior.N, M)
    solution = solve_equality_feasibility(matrix, list(prior.pmf))
    if solution is None:
        return ExtendibilityResult(M, False, None)
    witness = MixtureWitness(M, tuple(solution))
    if not verify_witness(prior, witness):
        raise RuntimeError(
            "simplex returned a witness that fails exact re-verification"
        )
    return ExtendibilityResult(M, True, witness)


def extendibility_profile(
    prior: GammaPrior, M_max: int
) -> tuple[ExtendibilityResult, ...]:
    """Verdicts for M = 1..M_max, asserting the once-infeasible-always rule.

    Marginalizing a larger exchangeable population yields a smaller one, so
    feasibility at M implies feasibility at every smaller M; a non-monotone
    profile would indicate a solver bug and raises.
    """
    if M_max < 1:
        raise InvalidParameterError(f"M_max must be >= 1, got {M_max}")
    results = tuple(extendibility_check(prior, M) for M in range(1, M_max + 1))
    seen_infeasible = False
    for result in results:
        if seen_infeasible and result.feasible:
            raise RuntimeError(
                f"extendibility profile is not monotone at M={result.M}"
            )
        seen_infeasible = seen_infeasible or not result.feasible
    return results
