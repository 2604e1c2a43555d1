"""Majorization, doubly stochastic matrices and the Ky Fan inequality.

Convention: x is majorized by y (x < y) when both have the same total and,
after sorting each in decreasing order, every partial sum of x is at most
the matching partial sum of y. So (1, 1) < (2, 0).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .errors import (
    DimensionMismatchError,
    InconsistencyError,
    NoPerfectMatchingError,
    NotMajorizedError,
    OutOfRangeError,
)
from .linalg import HermitianMatrix

MAJORIZATION_TOL = 1e-10
STOCHASTIC_TOL = 1e-10
NEGATIVE_FLOOR = -1e-14
MATCH_THRESHOLD = 1e-12
RESIDUAL_TOL = 1e-10
KY_FAN_TOL = 1e-8


def _pair(x, y) -> tuple[np.ndarray, np.ndarray]:
    x = np.asarray(x, dtype=float).ravel()
    y = np.asarray(y, dtype=float).ravel()
    if x.size != y.size:
        raise DimensionMismatchError(f"length mismatch: {x.size} vs {y.size}")
    return x, y


def decreasing(v) -> np.ndarray:
    return np.sort(np.asarray(v, dtype=float))[::-1]


def majorizes(x, y, tol: float = MAJORIZATION_TOL) -> bool:
    """True when x is majorized by y (y majorizes x)."""
    x, y = _pair(x, y)
    cx = np.cumsum(decreasing(x))
    cy = np.cumsum(decreasing(y))
    if abs(cx[-1] - cy[-1]) > tol:
        return False
    return bool(np.all(cx[:-1] <= cy[:-1] + tol))


@dataclass(frozen=True, eq=False)
class DoublyStochastic:
    entries: np.ndarray

    def __post_init__(self):
        D = np.array(self.entries, dtype=float)
        if D.ndim != 2 or D.shape[0] != D.shape[1]:
            raise DimensionMismatchError(f"expected a square matrix, got shape {D.shape}")
        if np.any(D < NEGATIVE_FLOOR):
            raise OutOfRangeError(f"negative entry {D.min():.3e}")
        D[D < 0] = 0.0
        for axis, what in ((1, "row"), (0, "column")):
            err = np.max(np.abs(D.sum(axis=axis) - 1.0))
            if err > STOCHASTIC_TOL:
                raise OutOfRangeError(f"{what} sums deviate from 1 by {err:.3e}")
        D.setflags(write=False)
        object.__setattr__(self, "entries", D)

    @property
    def n(self) -> int:
        return self.entries.shape[0]


def t_transform(n: int, j: int, k: int, weight: float) -> np.ndarray:
    """weight * I + (1 - weight) * (transposition of j and k)."""
    T = np.eye(n)
    T[j, j] = T[k, k] = weight
    T[j, k] = T[k, j] = 1.0 - weight
    return T


def hlp_transfer(x, y) -> DoublyStochastic:
    """Doubly stochastic D with D @ decreasing(y) == decreasing(x), for x < y.

    Built as a product of at most n - 1 T-transforms: each step moves mass
    from coordinate j (the last place y exceeds x) to the first later
    coordinate k where x exceeds y, fixing at least one coordinate.
    """
    x, y = _pair(x, y)
    if not majorizes(x, y):
        raise NotMajorizedError("x is not majorized by y")
    xs, cur = decreasing(x), decreasing(y)
    n = xs.size
    scale = 1.0 + float(np.max(np.abs(cur)))
    tol = MAJORIZATION_TOL * scale
    D = np.eye(n)
    for _ in range(2 * n):
        excess = cur - xs
        above = np.nonzero(excess > tol)[0]
        if above.size == 0:
            break
        j = int(above[-1])
        below = np.nonzero(excess[j + 1 :] < -tol)[0]
        if below.size == 0:
            break
        k = j + 1 + int(below[0])
        delta = min(cur[j] - xs[j], xs[k] - cur[k])
        gap = cur[j] - cur[k]
        weight = 1.0 - delta / gap
        T = t_transform(n, j, k, weight)
        cur = T @ cur
        D = T @ D
    return DoublyStochastic(D)


@dataclass(frozen=True)
class BirkhoffTerm:
    coefficient: float
    permutation: tuple[int, ...]  # row i maps to column permutation[i]

    def matrix(self) -> np.ndarray:
        n = len(self.permutation)
        P = np.zeros((n, n))
        P[np.arange(n), self.permutation] = 1.0
        return P


@dataclass(frozen=True)
class BirkhoffDecomposition:
    terms: tuple[BirkhoffTerm, ...]

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def reconstruct(self) -> np.ndarray:
        return sum(t.coefficient * t.matrix() for t in self.terms)

    def apply(self, v) -> np.ndarray:
        """sum_i c_i P_i v."""
        v = np.asarray(v, dtype=float)
        return sum(t.coefficient * (t.matrix() @ v) for t in self.terms)


def _perfect_matching(R: np.ndarray) -> np.ndarray:
    graph = csr_matrix((R > MATCH_THRESHOLD).astype(np.int8))
    match = maximum_bipartite_matching(graph, perm_type="column")
    if np.any(match < 0):
        raise NoPerfectMatchingError("positive entries admit no perfect matching")
    return match


def birkhoff_decompose(D) -> BirkhoffDecomposition:
    """Greedy Birkhoff decomposition D = sum c_i P_i.

    Repeatedly matches rows to columns through positive entries, removes the
    smallest matched entry times that permutation, and stops once the
    residual is negligible.
    """
    if not isinstance(D, DoublyStochastic):
        D = DoublyStochastic(D)
    R = np.array(D.entries)
    n = D.n
    rows = np.arange(n)
    terms = []
    while R.max() > RESIDUAL_TOL:
        if len(terms) >= n * n - n + 1:
            raise InconsistencyError("term budget exhausted before residual vanished")
        perm = _perfect_matching(R)
        c = float(R[rows, perm].min())
        R[rows, perm] -= c
        R[R < MATCH_THRESHOLD] = 0.0
        terms.append(BirkhoffTerm(c, tuple(int(p) for p in perm)))
    return BirkhoffDecomposition(tuple(terms))


def ky_fan_check(A, B, tol: float = KY_FAN_TOL) -> bool:
    """Check sum_{i<=k} lambda_i(A+B) <= sum_{i<=k} (lambda_i(A) + lambda_i(B))
    for every k, with equality at k = n."""
    A = A if isinstance(A, HermitianMatrix) else HermitianMatrix(A)
    B = B if isinstance(B, HermitianMatrix) else HermitianMatrix(B)
    if A.n != B.n:
        raise DimensionMismatchError(f"dimension mismatch: {A.n} vs {B.n}")
    lhs = np.cumsum((A + B).eigenvalues)
    rhs = np.cumsum(A.eigenvalues + B.eigenvalues)
    return bool(np.all(lhs <= rhs + tol) and abs(lhs[-1] - rhs[-1]) <= tol)


def sinkhorn(M: np.ndarray, iterations: int = 200) -> np.ndarray:
    """Alternate row and column normalization of a positive matrix."""
    M = np.array(M, dtype=float)
    for _ in range(iterations):
        M /= M.sum(axis=1, keepdims=True)
        M /= M.sum(axis=0, keepdims=True)
    return M


def majorization_pair_generator(n: int, seed: int, scale: float = 1.0) -> tuple[np.ndarray, np.ndarray]:
    """Random (x, y) with x < y: y uniform in [-scale, scale]^n and x = D y
    for a random doubly stochastic D.

    D mixes a Sinkhorn-balanced positive matrix with a random permutation,
    so the pairs range from nearly averaged x to x close to a rearranged y.
    """
    if n < 2:
        raise OutOfRangeError("n must be >= 2")
    rng = np.random.default_rng(seed)
    y = rng.uniform(-scale, scale, n)
    S = sinkhorn(rng.uniform(0.0, 1.0, (n, n)) + 1e-3)
    P = np.eye(n)[rng.permutation(n)]
    w = rng.uniform()
    D = w * P + (1.0 - w) * S
    return D @ y, y
