"""
Unit circles
============

Each norm restricted to 2x2 diagonal matrices is a norm on the plane.
This writes CSV tables and SVG outlines for a handful of curves into
./circles/.
"""

from pathlib import Path

import numpy as np

from specnorm import Bernoulli, Exponential, Normal, Pareto
from specnorm.figures import circle_samples

out = Path("circles")
out.mkdir(exist_ok=True)

curves = [
    (Normal(0, 1), 2, "exact"),
    (Normal(0, 1), 1, "mc"),
    (Exponential(), 2, "exact"),
    (Exponential(), 20, "exact"),
    (Bernoulli(0.5), 4, "exact"),
    (Pareto(5, 1), 4, "exact"),
]

for dist, d, method in curves:
    table = circle_samples(dist, d, resolution=180, method=method, n_samples=100_000)
    stem = f"{dist.label}_d{d}".replace(" ", "").replace("=", "").replace(",", "_").replace("(", "_").replace(")", "")
    table.write_csv(out / f"{stem}.csv")
    (out / f"{stem}.svg").write_text(table.to_svg())
    radii = np.hypot(*table.points().T)
    print(f"{table.label:>28} d={d:<3} radius in [{radii.min():.4f}, {radii.max():.4f}]")

print("\nstandard normal, d=2 is a round circle of radius sqrt(2) =", np.sqrt(2))
print("wrote", len(list(out.iterdir())), "files to", out.resolve())
