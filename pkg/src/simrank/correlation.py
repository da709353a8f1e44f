"""Pearson correlation across criteria, with two-tailed significance labels.

Correlations are computed on RAW values of the included criteria, not on
scaled ones: scaling is a positive affine map for maximization criteria
(correlation unchanged) but flips the sign for minimization criteria,
which would hide genuinely positive relationships such as
dispossessions vs dribbles.

Significance uses the exact t-test for a correlation coefficient,
t = rho * sqrt((n - 2) / (1 - rho^2)) with n - 2 degrees of freedom.
Stars follow the usual ladder: *** for p <= 0.01, ** for p <= 0.05,
* for p <= 0.10.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .dataset import Dataset
from .errors import ConstantColumn, InsufficientSamples, KOutOfRange, LengthMismatch, UnknownCriterion
from .special import student_t_two_tailed


@dataclass(frozen=True)
class CorrelationCell:
    """One criterion pair: Pearson rho, two-tailed p-value, significance label.

    An undefined cell (a constant column is involved) carries NaN for rho
    and p_value and an empty stars label.
    """

    criterion_a: str
    criterion_b: str
    rho: float
    p_value: float
    stars: str

    @property
    def defined(self) -> bool:
        return not math.isnan(self.rho)


@dataclass(frozen=True)
class CorrelationMatrix:
    """Symmetric grid of correlation cells with a unit diagonal."""

    criteria: tuple[str, ...]
    cells: tuple[tuple[CorrelationCell, ...], ...]

    def cell(self, a: str, b: str) -> CorrelationCell:
        try:
            i = self.criteria.index(a)
        except ValueError:
            raise UnknownCriterion(a) from None
        try:
            j = self.criteria.index(b)
        except ValueError:
            raise UnknownCriterion(b) from None
        return self.cells[i][j]


def pearson(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Sample Pearson correlation coefficient of two equal-length columns."""
    if len(xs) != len(ys):
        raise LengthMismatch(f"column lengths differ: {len(xs)} vs {len(ys)}")
    n = len(xs)
    if n < 3:
        raise InsufficientSamples(f"need at least 3 paired values, got {n}")
    mean_x = math.fsum(xs) / n
    mean_y = math.fsum(ys) / n
    dx = [x - mean_x for x in xs]
    dy = [y - mean_y for y in ys]
    ss_x = math.fsum(d * d for d in dx)
    ss_y = math.fsum(d * d for d in dy)
    if ss_x == 0.0 or ss_y == 0.0:
        raise ConstantColumn()
    rho = math.fsum(a * b for a, b in zip(dx, dy)) / math.sqrt(ss_x * ss_y)
    # rounding can push an exactly collinear pair a hair past +-1
    return max(-1.0, min(1.0, rho))


def two_tailed_p_value(rho: float, n: int) -> float:
    """Two-tailed p-value of a sample correlation under the null rho = 0.

    Equivalent to 2 * (1 - F_t(|t|; n - 2)) for t = rho * sqrt((n-2)/(1-rho^2));
    monotone decreasing in |rho| for fixed n.
    """
    if n < 3:
        raise InsufficientSamples(f"need n >= 3, got {n}")
    if abs(rho) > 1.0:
        raise ValueError(f"correlation must lie in [-1, 1], got {rho}")
    if abs(rho) == 1.0:
        return 0.0
    df = n - 2
    t = rho * math.sqrt(df / (1.0 - rho * rho))
    return student_t_two_tailed(t, df)


def significance_stars(p_value: float) -> str:
    """Label a p-value: '***' <= 0.01 < '**' <= 0.05 < '*' <= 0.10 < ''."""
    if math.isnan(p_value):
        return ""
    if p_value <= 0.01:
        return "***"
    if p_value <= 0.05:
        return "**"
    if p_value <= 0.10:
        return "*"
    return ""


def _cell(a: str, b: str, xs: Sequence[float], ys: Sequence[float], n: int) -> CorrelationCell:
    try:
        rho = pearson(xs, ys)
    except ConstantColumn:
        return CorrelationCell(a, b, math.nan, math.nan, "")
    p = two_tailed_p_value(rho, n)
    return CorrelationCell(a, b, rho, p, significance_stars(p))


def correlation_matrix(dataset: Dataset) -> CorrelationMatrix:
    """Full symmetric correlation matrix over the raw included criteria."""
    criteria = dataset.schema.included_names()
    columns = {c: dataset.column(c) for c in criteria}
    n = len(dataset.players)

    grid: list[list[CorrelationCell]] = []
    for i, a in enumerate(criteria):
        row: list[CorrelationCell] = []
        for j, b in enumerate(criteria):
            if i == j:
                row.append(CorrelationCell(a, b, 1.0, 0.0, "***"))
            elif j < i:
                mirror = grid[j][i]
                row.append(CorrelationCell(a, b, mirror.rho, mirror.p_value, mirror.stars))
            else:
                row.append(_cell(a, b, columns[a], columns[b], n))
        grid.append(row)
    return CorrelationMatrix(criteria, tuple(tuple(r) for r in grid))


def top_correlated_pairs(matrix: CorrelationMatrix, k: int) -> list[CorrelationCell]:
    """The k off-diagonal pairs with largest |rho|, ties broken by pair name."""
    pairs = [
        matrix.cells[i][j]
        for i in range(len(matrix.criteria))
        for j in range(i + 1, len(matrix.criteria))
        if matrix.cells[i][j].defined
    ]
    if not 0 <= k <= len(pairs):
        raise KOutOfRange(f"k must be between 0 and {len(pairs)}, got {k}")
    pairs.sort(key=lambda c: (-abs(c.rho), c.criterion_a, c.criterion_b))
    return pairs[:k]
