"""Semantic exception hierarchy.

Public functions never raise bare ValueError for contract violations; they
raise one of these so callers (and the CLI) can distinguish bad input from
genuinely undefined quantities such as conditioning on an impossible history.
"""

from __future__ import annotations


class MaturityError(Exception):
    """Base error for this package."""


class InvalidParameterError(MaturityError, ValueError):
    """An argument violates a constructor or operation contract."""


class ZeroProbabilityHistoryError(MaturityError):
    """The conditioning event has probability zero; the predictive is undefined.

    Raised instead of silently returning 0/0.  Histories like this are
    excluded from belief verification rather than being resolved by fiat.
    """


class HistoryFullError(MaturityError):
    """All population members have been observed; there is no next trial."""


class ApproximateModeError(MaturityError):
    """The operation requires an exact-mode prior (e.g. exact feasibility)."""
