"""Complex matrix helpers: validation, a cyclic Jacobi eigensolver for
Hermitian matrices, traces of words in Z and Z*, and seeded random matrices.

Matrices are plain ``numpy`` complex arrays. ``HermitianMatrix`` wraps one
after checking A = A* and caches its spectrum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import (
    DimensionMismatchError,
    EmptyWordError,
    NoConvergenceError,
    NotHermitianError,
    OutOfRangeError,
)

MAX_DIM = 64
HERMITIAN_RTOL = 1e-12
JACOBI_TOL = 1e-12
MAX_SWEEPS = 100

PLAIN = False
ADJOINT = True


def as_matrix(Z) -> np.ndarray:
    """Return ``Z`` as a read-only square complex128 array, validating shape,
    finiteness and the size cap."""
    M = np.array(Z, dtype=np.complex128)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {M.shape}")
    n = M.shape[0]
    if not 1 <= n <= MAX_DIM:
        raise OutOfRangeError(f"matrix dimension must be in [1, {MAX_DIM}], got {n}")
    if not np.all(np.isfinite(M)):
        raise OutOfRangeError("matrix entries must be finite")
    M.setflags(write=False)
    return M


def hermitian_defect(M: np.ndarray) -> float:
    return float(np.max(np.abs(M - M.conj().T)))


@dataclass(frozen=True, eq=False)
class HermitianMatrix:
    """A validated Hermitian matrix with a lazily computed, descending spectrum."""

    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        M = as_matrix(self.matrix)
        scale = 1.0 + float(np.max(np.abs(M)))
        if hermitian_defect(M) > HERMITIAN_RTOL * scale:
            raise NotHermitianError(
                f"matrix is not Hermitian (max |A - A*| = {hermitian_defect(M):.3e})"
            )
        object.__setattr__(self, "matrix", M)

    @classmethod
    def from_eigenvalues(cls, values, unitary=None) -> "HermitianMatrix":
        """Build U diag(values) U* (diagonal when ``unitary`` is omitted)."""
        D = np.diag(np.asarray(values, dtype=float)).astype(np.complex128)
        if unitary is None:
            return cls(D)
        U = as_matrix(unitary)
        A = U @ D @ U.conj().T
        return cls((A + A.conj().T) / 2)

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @cached_property
    def eigenvalues(self) -> np.ndarray:
        return hermitian_eigenvalues(self)

    def __add__(self, other: "HermitianMatrix") -> "HermitianMatrix":
        S = self.matrix + other.matrix
        return HermitianMatrix((S + S.conj().T) / 2)

    def __mul__(self, c: float) -> "HermitianMatrix":
        return HermitianMatrix(float(c) * self.matrix)

    __rmul__ = __mul__

    def conjugate_by(self, U) -> "HermitianMatrix":
        """Return U* A U."""
        U = as_matrix(U)
        B = U.conj().T @ self.matrix @ U
        return HermitianMatrix((B + B.conj().T) / 2)


def _jacobi(A: np.ndarray, want_vectors: bool):
    """Cyclic two-sided complex Jacobi. Returns (diagonal, V) with A = V diag V*."""
    A = np.array(A, dtype=np.complex128)
    n = A.shape[0]
    V = np.eye(n, dtype=np.complex128) if want_vectors else None
    frob = np.linalg.norm(A)
    target = JACOBI_TOL * frob

    def off_diagonal():
        return np.linalg.norm(A - np.diag(np.diag(A)))

    sweeps = 0
    while off_diagonal() > target:
        if sweeps >= MAX_SWEEPS:
            raise NoConvergenceError(
                f"Jacobi did not converge in {MAX_SWEEPS} sweeps (off-diagonal {off_diagonal():.3e})"
            )
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                g = A[p, q]
                ag = abs(g)
                if ag == 0.0:
                    continue
                phase = g / ag
                a = A[p, p].real
                b = A[q, q].real
                theta = (b - a) / (2.0 * ag)
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.hypot(theta, 1.0))
                c = 1.0 / np.hypot(t, 1.0)
                s = t * c
                e = phase.conjugate()
                J = np.array([[c, s], [-s * e, c * e]], dtype=np.complex128)
                idx = [p, q]
                A[:, idx] = A[:, idx] @ J
                A[idx, :] = J.conj().T @ A[idx, :]
                A[p, q] = A[q, p] = 0.0
                A[p, p] = A[p, p].real
                A[q, q] = A[q, q].real
                if V is not None:
                    V[:, idx] = V[:, idx] @ J
    return np.diag(A).real.copy(), V


def _descending(values: np.ndarray) -> np.ndarray:
    # stable sort on the negated values keeps ties in Jacobi output order
    return np.argsort(-values, kind="stable")


def _hermitian_array(A) -> np.ndarray:
    if isinstance(A, HermitianMatrix):
        return A.matrix
    return HermitianMatrix(A).matrix


def hermitian_eigenvalues(A) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, sorted descending.

    Accepts a ``HermitianMatrix`` or anything convertible to one.

    >>> hermitian_eigenvalues([[2, 1j], [-1j, 2]])
    array([3., 1.])
    """
    vals, _ = _jacobi(_hermitian_array(A), want_vectors=False)
    vals = vals[_descending(vals)]
    vals.setflags(write=False)
    return vals


def hermitian_eigh(A) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (descending) and the matching unitary eigenvector matrix."""
    vals, V = _jacobi(_hermitian_array(A), want_vectors=True)
    order = _descending(vals)
    return vals[order], V[:, order]


def trace_word(Z, word: Sequence[bool]) -> complex:
    """tr(W_1 W_2 ... W_k) with W_j = Z* where ``word[j]`` is true (ADJOINT),
    else Z."""
    if len(word) == 0:
        raise EmptyWordError("trace of an empty word is undefined")
    Z = as_matrix(Z)
    Zs = Z.conj().T
    P = Zs if word[0] else Z
    for mark in word[1:]:
        P = P @ (Zs if mark else Z)
    return complex(np.trace(P))


def random_unitary(n: int, seed: int) -> np.ndarray:
    """Unitary from the QR factorization of a complex Gaussian matrix, with
    the phases of R's diagonal absorbed so the law is Haar."""
    if n < 1:
        raise OutOfRangeError("n must be >= 1")
    rng = np.random.default_rng(seed)
    G = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    Q, R = np.linalg.qr(G)
    d = np.diag(R)
    Q = Q * (d / np.abs(d))
    return Q


def random_hermitian(n: int, seed: int, scale: float = 1.0) -> HermitianMatrix:
    """(G + G*)/2 with real and imaginary parts of G uniform in [-scale, scale]."""
    if n < 1:
        raise OutOfRangeError("n must be >= 1")
    if scale < 0:
        raise OutOfRangeError("scale must be nonnegative")
    rng = np.random.default_rng(seed)
    G = rng.uniform(-scale, scale, (n, n)) + 1j * rng.uniform(-scale, scale, (n, n))
    return HermitianMatrix((G + G.conj().T) / 2)


def random_complex(n: int, seed: int, scale: float = 1.0) -> np.ndarray:
    """General complex matrix with entries uniform in the square [-scale, scale]^2."""
    rng = np.random.default_rng(seed)
    return rng.uniform(-scale, scale, (n, n)) + 1j * rng.uniform(-scale, scale, (n, n))


def check_same_size(A, B) -> None:
    if np.shape(A) != np.shape(B):
        raise DimensionMismatchError(f"shapes differ: {np.shape(A)} vs {np.shape(B)}")
