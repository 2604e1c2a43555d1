"""
Continuity in d
===============

Reusing one batch of draws across a grid of exponents gives a smooth
curve: the only noise left is shared by every point.
"""

import numpy as np

from specnorm import Normal
from specnorm.hermitian import continuity_scan

grid = np.linspace(1, 3, 41)
est = continuity_scan(np.diag([1.0, -1.0]), Normal(0, 1), grid, n_samples=1_000_000, seed=0)
values = np.array([e.value for e in est])

for d, e in list(zip(grid, est))[::5]:
    print(f"d={d:4.2f}  {e.value:.5f} +/- {e.stderr:.5f}")

print("\nlargest jump between neighbours:", np.abs(np.diff(values)).max())
# at d=2 the exact value is ||diag(1,-1)||_F / sqrt(2) = 1
print("value at d=2:", values[20])
