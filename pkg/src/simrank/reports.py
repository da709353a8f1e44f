"""Machine- and human-readable output: ranking tables, scatter data, SVG.

Table output rounds distances to 3 decimals (round-half-to-even); csv and
json carry full precision so they parse back into the exact in-memory
values. All formatting is locale-independent with '.' as the decimal
separator, and every emitter is deterministic: identical input produces
byte-identical output.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Sequence, Union
from xml.sax.saxutils import escape

from .correlation import CorrelationCell, CorrelationMatrix
from .dataset import Dataset
from .errors import ConstantColumn, EmptySeries, UnknownCriterion
from .normalization import NormalizedMatrix
from .ranking import SimilarityRanking


@dataclass(frozen=True)
class ScatterSeries:
    """One labeled point per player for a pair of raw criteria."""

    x_criterion: str
    y_criterion: str
    points: tuple[tuple[str, float, float], ...]
    trend: tuple[float, float] | None = None  # (slope, intercept)


def emit_ranking(ranking: SimilarityRanking, fmt: str = "table") -> str:
    """Render a ranking as 'table' (3-decimal distances), 'csv' or 'json'."""
    if fmt == "table":
        lines = ["rank  player  distance"]
        lines += [f"{e.rank}  {e.player}  {e.distance:.3f}" for e in ranking.entries]
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["rank", "player", "distance"])
        for e in ranking.entries:
            writer.writerow([e.rank, e.player, repr(e.distance)])
        return out.getvalue()
    if fmt == "json":
        payload = {
            "target": ranking.target,
            "metric_p": ranking.metric.p,
            "entries": [
                {"rank": e.rank, "player": e.player, "distance": e.distance}
                for e in ranking.entries
            ],
        }
        return json.dumps(payload, indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def least_squares_line(xs: Sequence[float], ys: Sequence[float]) -> tuple[float, float]:
    """Ordinary least squares fit y = slope * x + intercept."""
    n = len(xs)
    mean_x = math.fsum(xs) / n
    mean_y = math.fsum(ys) / n
    dx = [x - mean_x for x in xs]
    ss_x = math.fsum(d * d for d in dx)
    if ss_x == 0.0:
        raise ConstantColumn("x")
    slope = math.fsum(d * (y - mean_y) for d, y in zip(dx, ys)) / ss_x
    return slope, mean_y - slope * mean_x


def scatter_data(dataset: Dataset, x: str, y: str, with_trend: bool = False) -> ScatterSeries:
    """Raw (x, y) values per player for two criteria present in the dataset."""
    columns = dataset.columns()
    for name in (x, y):
        if name not in columns:
            raise UnknownCriterion(name, "criterion not in dataset")
    points = tuple((p.name, p.values[x], p.values[y]) for p in dataset.players)
    trend = None
    if with_trend:
        trend = least_squares_line([pt[1] for pt in points], [pt[2] for pt in points])
    return ScatterSeries(x, y, points, trend)


def emit_scatter(series: ScatterSeries, fmt: str = "csv") -> str:
    """Render scatter data as 'csv' (points, optional trend comment) or 'json'."""
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["player", series.x_criterion, series.y_criterion])
        for name, xv, yv in series.points:
            writer.writerow([name, repr(xv), repr(yv)])
        text = out.getvalue()
        if series.trend is not None:
            slope, intercept = series.trend
            text += f"# trend slope={slope!r} intercept={intercept!r}\n"
        return text
    if fmt == "json":
        payload = {
            "x_criterion": series.x_criterion,
            "y_criterion": series.y_criterion,
            "points": [{"player": n, "x": xv, "y": yv} for n, xv, yv in series.points],
            "trend": None if series.trend is None else
            {"slope": series.trend[0], "intercept": series.trend[1]},
        }
        return json.dumps(payload, indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


# -- SVG -----------------------------------------------------------------

_WIDTH, _HEIGHT = 800, 560
_LEFT, _RIGHT, _TOP, _BOTTOM = 70, 40, 40, 60


def _axis_range(values: Sequence[float]) -> tuple[float, float]:
    lo, hi = min(values), max(values)
    pad = (hi - lo) * 0.05 or 1.0
    return lo - pad, hi + pad


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def render_scatter_svg(series: ScatterSeries) -> str:
    """A self-contained SVG scatter plot: axes, labeled markers, optional trend."""
    if not series.points:
        raise EmptySeries("cannot render a scatter plot without points")

    x_lo, x_hi = _axis_range([p[1] for p in series.points])
    y_lo, y_hi = _axis_range([p[2] for p in series.points])
    plot_w = _WIDTH - _LEFT - _RIGHT
    plot_h = _HEIGHT - _TOP - _BOTTOM

    def px(v: float) -> float:
        return _LEFT + (v - x_lo) / (x_hi - x_lo) * plot_w

    def py(v: float) -> float:
        return _TOP + (y_hi - v) / (y_hi - y_lo) * plot_h

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}" font-family="sans-serif">',
        f'<defs><clipPath id="plot"><rect x="{_LEFT}" y="{_TOP}" '
        f'width="{plot_w}" height="{plot_h}"/></clipPath></defs>',
        f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
        # axes
        f'<line x1="{_LEFT}" y1="{_TOP + plot_h}" x2="{_LEFT + plot_w}" '
        f'y2="{_TOP + plot_h}" stroke="black"/>',
        f'<line x1="{_LEFT}" y1="{_TOP}" x2="{_LEFT}" y2="{_TOP + plot_h}" stroke="black"/>',
        # axis titles
        f'<text x="{_LEFT + plot_w / 2:.1f}" y="{_HEIGHT - 15}" text-anchor="middle" '
        f'font-size="14">{escape(series.x_criterion)}</text>',
        f'<text x="20" y="{_TOP + plot_h / 2:.1f}" text-anchor="middle" font-size="14" '
        f'transform="rotate(-90 20 {_TOP + plot_h / 2:.1f})">{escape(series.y_criterion)}</text>',
        # extent labels
        f'<text x="{_LEFT}" y="{_TOP + plot_h + 18}" text-anchor="middle" '
        f'font-size="11">{x_lo:.3g}</text>',
        f'<text x="{_LEFT + plot_w}" y="{_TOP + plot_h + 18}" text-anchor="middle" '
        f'font-size="11">{x_hi:.3g}</text>',
        f'<text x="{_LEFT - 8}" y="{_TOP + plot_h + 4}" text-anchor="end" '
        f'font-size="11">{y_lo:.3g}</text>',
        f'<text x="{_LEFT - 8}" y="{_TOP + 4}" text-anchor="end" font-size="11">{y_hi:.3g}</text>',
    ]

    if series.trend is not None:
        slope, intercept = series.trend
        lines.append(
            f'<line x1="{_fmt(px(x_lo))}" y1="{_fmt(py(slope * x_lo + intercept))}" '
            f'x2="{_fmt(px(x_hi))}" y2="{_fmt(py(slope * x_hi + intercept))}" '
            f'stroke="steelblue" stroke-width="1.5" clip-path="url(#plot)"/>'
        )

    for name, xv, yv in series.points:
        cx, cy = px(xv), py(yv)
        lines.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="3" fill="crimson"/>')
        lines.append(
            f'<text x="{_fmt(cx + 5)}" y="{_fmt(cy - 5)}" font-size="10">{escape(name)}</text>'
        )

    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def emit_scatter_svg(series: ScatterSeries, output: Union[str, Path, IO[str]]) -> None:
    """Write the SVG rendering of ``series`` to a path or open text sink."""
    text = render_scatter_svg(series)
    if hasattr(output, "write"):
        output.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")


# -- other tabular emitters ------------------------------------------------

def normalized_to_csv(matrix: NormalizedMatrix, decimals: int = 6) -> str:
    """The scaled matrix as CSV with fixed-point values (default 6 decimals)."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["Player", *matrix.criteria])
    for player, row in zip(matrix.players, matrix.values):
        writer.writerow([player, *(f"{v:.{decimals}f}" for v in row)])
    return out.getvalue()


def correlation_to_csv(matrix: CorrelationMatrix) -> str:
    """The full correlation matrix as CSV with full-precision rho values."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["criterion", *matrix.criteria])
    for name, row in zip(matrix.criteria, matrix.cells):
        writer.writerow([name, *(repr(c.rho) for c in row)])
    return out.getvalue()


def top_pairs_table(cells: Sequence[CorrelationCell]) -> str:
    """Readable top-k listing: pair, rho to 2 decimals, p-value, stars."""
    lines = ["pair  rho  p_value  stars"]
    for c in cells:
        lines.append(
            f"{c.criterion_a}/{c.criterion_b}  {c.rho:.2f}  {c.p_value:.3g}  {c.stars}"
        )
    return "\n".join(lines) + "\n"


def top_pairs_csv(cells: Sequence[CorrelationCell]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["criterion_a", "criterion_b", "rho", "p_value", "stars"])
    for c in cells:
        writer.writerow([c.criterion_a, c.criterion_b, repr(c.rho), repr(c.p_value), c.stars])
    return out.getvalue()


def top_pairs_json(cells: Sequence[CorrelationCell]) -> str:
    payload = [
        {
            "criterion_a": c.criterion_a,
            "criterion_b": c.criterion_b,
            "rho": c.rho,
            "p_value": c.p_value,
            "stars": c.stars,
        }
        for c in cells
    ]
    return json.dumps(payload, indent=2) + "\n"
