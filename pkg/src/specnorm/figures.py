"""Unit circles of the norms restricted to 2x2 diagonal matrices.

For direction (cos t, sin t) the point on the unit circle is
(cos t, sin t) / ||diag(cos t, sin t)||.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .distributions import (
    Bernoulli,
    Distribution,
    Exponential,
    Normal,
    Pareto,
    require_moments,
    sample_block,
)
from .errors import OutOfRangeError, TooFewSamplesError
from .hermitian import MIN_SAMPLES, estimate_from_projections, norm_exact

FIELDS = ("theta", "dir1", "dir2", "norm", "x", "y")


@dataclass(frozen=True)
class CircleRow:
    theta: float
    dir1: float
    dir2: float
    norm: float
    x: float
    y: float


@dataclass(frozen=True)
class CircleTable:
    label: str
    d: float
    rows: tuple[CircleRow, ...]

    def __len__(self):
        return len(self.rows)

    def points(self) -> np.ndarray:
        return np.array([(r.x, r.y) for r in self.rows])

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(FIELDS)
        for r in self.rows:
            writer.writerow([f"{getattr(r, f):.17g}" for f in FIELDS])
        return buf.getvalue()

    def write_csv(self, path) -> None:
        Path(path).write_text(self.to_csv())

    def to_svg(self, size: int = 400) -> str:
        pts = self.points()
        extent = float(np.max(np.abs(pts))) * 1.1 or 1.0
        half = size / 2
        coords = " ".join(
            f"{half + px / extent * half:.3f},{half - py / extent * half:.3f}" for px, py in pts
        )
        if len(pts):
            coords += f" {half + pts[0, 0] / extent * half:.3f},{half - pts[0, 1] / extent * half:.3f}"
        return (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
            f'viewBox="0 0 {size} {size}">\n'
            f"  <title>{self.label}, d={self.d:g}</title>\n"
            f'  <polyline fill="none" stroke="black" stroke-width="1.5" points="{coords}"/>\n'
            "</svg>\n"
        )


def read_circle_csv(text: str, label: str = "", d: float = float("nan")) -> CircleTable:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if tuple(header) != FIELDS:
        raise ValueError(f"unexpected header {header}")
    rows = tuple(CircleRow(*(float(v) for v in row)) for row in reader if row)
    return CircleTable(label, d, rows)


def circle_samples(
    dist: Distribution,
    d: float,
    resolution: int = 360,
    method: str = "exact",
    n_samples: int = 100_000,
    seed: int = 0,
) -> CircleTable:
    """Unit-circle table at angles 2 pi k / resolution, k = 0..resolution-1.

    ``method="exact"`` needs an even integer d. ``method="mc"`` works for any
    d >= 1 and reuses the same draws at every angle.
    """
    if resolution < 1:
        raise OutOfRangeError("resolution must be positive")
    if method not in ("exact", "mc"):
        raise OutOfRangeError(f"unknown method {method!r}")
    thetas = 2.0 * math.pi * np.arange(resolution) / resolution
    if method == "mc":
        if n_samples < MIN_SAMPLES:
            raise TooFewSamplesError(f"need at least {MIN_SAMPLES} samples")
        if d < 1:
            raise OutOfRangeError("d must be >= 1")
        require_moments(dist, d)
        X = sample_block(dist, 2, seed, 0, n_samples)
    rows = []
    for t in thetas:
        c, s = math.cos(t), math.sin(t)
        lam = np.array([c, s])
        if method == "exact":
            r = norm_exact(lam, dist, d)
        else:
            r = estimate_from_projections(X @ lam, d).value
        rows.append(CircleRow(float(t), c, s, r, c / r, s / r))
    return CircleTable(dist.label, d, tuple(rows))


def figure_sets() -> dict[str, list[tuple[Distribution, float, str]]]:
    """Parameter sets of the published unit-circle figures.

    Each entry is (distribution, d, method); odd or fractional d uses
    Monte Carlo.
    """

    def method(d):
        return "exact" if float(d).is_integer() and int(d) % 2 == 0 else "mc"

    sets = {
        "normal_standard": [(Normal(0, 1), d, method(d)) for d in (1, 2, 4, 20)],
        "normal_means": [(Normal(mu, 1), 10, "exact") for mu in (-2, -1, 0, 1, 6)],
        "exponential": [(Exponential(), d, method(d)) for d in (1, 2, 3, 4, 20)],
        "bernoulli_half": [(Bernoulli(0.5), d, "exact") for d in (2, 4, 20)],
        "bernoulli_q_d2": [(Bernoulli(q), 2, "exact") for q in (0.1, 0.25, 0.5, 0.75, 0.9)],
        "bernoulli_q_d10": [(Bernoulli(q), 10, "exact") for q in (0.1, 0.25, 0.5, 0.75, 0.9)],
        "pareto_alpha": [(Pareto(a, 1), 2, "exact") for a in (2.1, 3, 4, 10)],
        "pareto_d": [(Pareto(5, 1), d, method(d)) for d in (1, 2, 4)],
    }
    return sets


def figure_tables(resolution: int = 360, n_samples: int = 100_000, seed: int = 0):
    """Yield (figure name, CircleTable) for every curve in :func:`figure_sets`."""
    for name, curves in figure_sets().items():
        for dist, d, method in curves:
            yield name, circle_samples(dist, d, resolution, method, n_samples, seed)
