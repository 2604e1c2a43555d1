"""
One norm, three ways
====================

Monte Carlo, the Bell-polynomial form and the power-sum partition form
should all agree on the same matrix.
"""

import math

import numpy as np

from specnorm import Exponential, Normal, random_hermitian
from specnorm.hermitian import norm_exact_bell, norm_exact_mgf, norm_exact_partition, norm_mc
from specnorm.combinatorics import complete_homogeneous

A = random_hermitian(4, seed=2)
print("A has eigenvalues", np.round(A.eigenvalues, 4))

dist = Exponential()
for d in (2, 4, 6):
    bell = norm_exact_bell(A, dist, d)
    part = norm_exact_partition(A, dist, d)
    mgf = norm_exact_mgf(A, dist, d)
    print(f"d={d}: bell={bell:.12f} partition={part:.12f} mgf={mgf:.12f}")

# exponential entries turn the partition sum into h_d of the eigenvalues
h4 = complete_homogeneous(A.eigenvalues, 4)
print("h_4(lambda) =", h4, " norm^4 =", norm_exact_partition(A, dist, 4) ** 4)

print("\nMonte Carlo works for any real d >= 1, not just even integers:")
for d in (1, 1.5, 2, 3):
    est = norm_mc(A, Normal(0, 1), d, n_samples=400_000, seed=1)
    print(f"  d={d}: {est.value:.5f} +/- {est.stderr:.5f}")

# for standard normal entries and d=2 the answer is ||A||_F / sqrt(2)
print("Frobenius check:", np.linalg.norm(A.matrix) / math.sqrt(2), norm_exact_partition(A, Normal(0, 1), 2))
