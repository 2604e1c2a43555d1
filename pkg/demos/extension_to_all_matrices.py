"""
Norms on non-Hermitian matrices
===============================

For even d the norm extends to every complex square matrix by averaging
trace words with d/2 adjoints placed among d copies of Z.
"""

import math

import numpy as np

from specnorm import Exponential, Normal, random_hermitian
from specnorm.linalg import random_complex
from specnorm.extension import adjoint_placements, norm_extended, trace_T
from specnorm.hermitian import norm_exact_partition

N = np.array([[0, 1], [0, 0]])
print("nilpotent N: eigenvalues all zero, yet")
print("  ||N||_{normal,2} =", norm_extended(N, Normal(0, 1), 2), "(1/sqrt 2 =", 1 / math.sqrt(2), ")")
print("  T_(2)(N) =", trace_T((2,), N), " T_(1,1)(N) =", trace_T((1, 1), N))

print("\nd=4 averages over", len(adjoint_placements(4)), "placements:")
for mask in adjoint_placements(4):
    print("  ", "".join("*" if m else "Z" for m in mask))

A = random_hermitian(3, seed=4)
print("\non Hermitian input the extension changes nothing:")
for d in (2, 4, 6):
    print(f"  d={d}: {norm_extended(A.matrix, Exponential(), d):.12f} vs {norm_exact_partition(A, Exponential(), d):.12f}")

Z = random_complex(3, seed=5)
c = 2 - 1j
print("\nhomogeneity with complex c:", norm_extended(c * Z, Exponential(), 4), abs(c) * norm_extended(Z, Exponential(), 4))
