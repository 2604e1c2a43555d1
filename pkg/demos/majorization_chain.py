"""
From Ky Fan to Birkhoff
=======================

lambda(A+B) is majorized by lambda(A) + lambda(B). A doubly stochastic D
carries one to the other, and D splits into permutations.
"""

import numpy as np

from specnorm import random_hermitian
from specnorm.majorization import birkhoff_decompose, hlp_transfer, ky_fan_check, majorizes

A = random_hermitian(4, seed=10)
B = random_hermitian(4, seed=11)

target = (A + B).eigenvalues
source = A.eigenvalues + B.eigenvalues
print("lambda(A+B)         =", np.round(target, 4))
print("lambda(A)+lambda(B) =", np.round(source, 4))
print("Ky Fan holds:", ky_fan_check(A, B), " majorized:", majorizes(target, source))

D = hlp_transfer(target, source)
print("\nD =")
print(np.round(D.entries, 4))

dec = birkhoff_decompose(D)
print(f"\n{len(dec)} permutations (at most {4 * 4 - 4 + 1} needed):")
for term in dec:
    print(f"  {term.coefficient:.4f} * {term.permutation}")

print("\nsum c_i P_i (lambda(A)+lambda(B)) =", np.round(dec.apply(source), 10))
print("max error:", np.abs(dec.apply(source) - target).max())
