"""Curve data behind the package's standard diagnostic plots.

Three figures are supported:

* ``prior-shapes``      — uniform / Binomial(N, 1/2) / degenerate-at-N/2 PMFs,
                          the spectrum from loosest to tightest;
* ``prior-comparison``  — a looser-than-Binomial prior (Beta-Binomial(N,2,2)),
                          the Binomial(N, 1/2) boundary, and a tighter prior
                          (CMP-Binomial(N, 1/2, 2));
* ``tightness-ratio``   — the tightness ratio of the Binomial against two
                          Hypergeometric sub-population priors, which must
                          dominate it pointwise (checked exactly before
                          emission).

Data is exact; the CSV rendering carries both a 12-significant-digit decimal
column for plotting and the exact num/den column for testing.  Rendering to
an image is optional and imports matplotlib lazily, so the library itself
stays free of plotting dependencies.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .classify import binomial_tightness_ratio, tightness_ratio
from .errors import InvalidParameterError
from .numerics import decimal_string, format_rational
from .priors import (
    from_beta_binomial,
    from_binomial,
    from_cmp_binomial,
    from_degenerate,
    from_hypergeometric,
    uniform,
)

FIGURE_IDS = ("prior-shapes", "prior-comparison", "tightness-ratio")

CSV_HEADER = ("i", "curve_name", "value", "exact")


@dataclass(frozen=True)
class FigurePoint:
    i: int
    curve_name: str
    value: Fraction


@dataclass(frozen=True)
class FigureData:
    figure_id: str
    N: int
    points: tuple[FigurePoint, ...]

    def curves(self) -> dict[str, list[tuple[int, Fraction]]]:
        grouped: dict[str, list[tuple[int, Fraction]]] = {}
        for point in self.points:
            grouped.setdefault(point.curve_name, []).append((point.i, point.value))
        return grouped

    def csv_rows(self) -> list[tuple[str, str, str, str]]:
        return [
            (
                str(point.i),
                point.curve_name,
                decimal_string(point.value, 12),
                format_rational(point.value),
            )
            for point in self.points
        ]


def _pmf_points(curve_name: str, pmf) -> list[FigurePoint]:
    return [FigurePoint(i, curve_name, value) for i, value in enumerate(pmf)]


def emit_figure_data(figure_id: str, N: int) -> FigureData:
    """Exact table of (i, curve, value) rows for one figure."""
    if figure_id not in FIGURE_IDS:
        raise InvalidParameterError(
            f"unknown figure id {figure_id!r}; expected one of {', '.join(FIGURE_IDS)}"
        )
    if figure_id == "prior-shapes":
        if N < 2 or N % 2:
            raise InvalidParameterError("prior-shapes needs an even N >= 2")
        points = (
            _pmf_points("uniform", uniform(N).pmf)
            + _pmf_points("binomial", from_binomial(N, Fraction(1, 2)).pmf)
            + _pmf_points("degenerate", from_degenerate(N, N // 2).pmf)
        )
        return FigureData(figure_id, N, tuple(points))
    if figure_id == "prior-comparison":
        if N < 2 or N % 2:
            raise InvalidParameterError("prior-comparison needs an even N >= 2")
        points = (
            _pmf_points("looser_beta_binomial", from_beta_binomial(N, 2, 2).pmf)
            + _pmf_points("binomial", from_binomial(N, Fraction(1, 2)).pmf)
            + _pmf_points("tighter_cmp_binomial", from_cmp_binomial(N, Fraction(1, 2), 2).pmf)
        )
        return FigureData(figure_id, N, tuple(points))

    # tightness-ratio
    if N < 4 or N % 2:
        raise InvalidParameterError("tightness-ratio needs an even N >= 4")
    wide = from_hypergeometric(4 * N, 2 * N, N)
    narrow = from_hypergeometric(2 * N, N, N)
    points: list[FigurePoint] = []
    for i in range(1, N):
        base = binomial_tightness_ratio(N, i)
        wide_ratio = tightness_ratio(wide, i)
        narrow_ratio = tightness_ratio(narrow, i)
        # The sub-population curves must dominate the Binomial's pointwise;
        # anything else means the ratio algebra broke.
        if not (wide_ratio > base and narrow_ratio > base):
            raise RuntimeError(
                f"hypergeometric tightness ratio fails to dominate at i={i}"
            )
        points.append(FigurePoint(i, "binomial", base))
        points.append(FigurePoint(i, "hypergeometric_4N_2N_N", wide_ratio))
        points.append(FigurePoint(i, "hypergeometric_2N_N_N", narrow_ratio))
    points.sort(key=lambda point: (point.curve_name, point.i))
    return FigureData(figure_id, N, tuple(points))


def render_figure(data: FigureData, path: str | Path) -> Path:
    """Plot the curves to an image file.  Requires matplotlib."""
    try:
        import matplotlib
    except ImportError as exc:  # pragma: no cover - environment dependent
        raise InvalidParameterError(
            "rendering figures requires matplotlib (pip install maturity[plots])"
        ) from exc
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    path = Path(path)
    fig, ax = plt.subplots(figsize=(7, 4))
    for curve_name, values in sorted(data.curves().items()):
        xs = [i for i, _ in values]
        ys = [float(v) for _, v in values]
        ax.plot(xs, ys, marker="o", markersize=3, label=curve_name)
    ax.set_xlabel("i")
    ax.set_ylabel("probability" if data.figure_id != "tightness-ratio" else "ratio")
    ax.set_title(f"{data.figure_id} (N={data.N})")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
