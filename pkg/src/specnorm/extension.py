"""Extension of the even-d norms from Hermitian to all complex matrices.

T_pi(Z) averages, over every way of marking d/2 of the d copies of Z as
adjoints, the product of traces tr(Z..Z)_{pi_1} tr(Z..Z)_{pi_2} ... .
Positions 1..d are split into contiguous blocks of sizes pi_1, pi_2, ...;
since all C(d, d/2) markings are averaged, the choice of blocks does not
change the result.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

import numpy as np

from .combinatorics import Partition, enumerate_partitions
from .distributions import Distribution, cumulants, require_moments
from .errors import InconsistencyError, OddExponentError, OutOfRangeError
from .hermitian import _root, even_order, partition_sum
from .linalg import as_matrix

MAX_EXTENSION_D = 12
IMAG_RTOL = 1e-9


@lru_cache(maxsize=None)
def adjoint_placements(d: int) -> tuple[tuple[bool, ...], ...]:
    """All length-d boolean masks with exactly d/2 entries set, in
    lexicographic order of the set positions."""
    out = []
    for chosen in itertools.combinations(range(d), d // 2):
        mask = [False] * d
        for i in chosen:
            mask[i] = True
        out.append(tuple(mask))
    return tuple(out)


class _WordTraces:
    """Memoized traces of words in Z and Z* for a single matrix."""

    def __init__(self, Z: np.ndarray):
        self.factors = (Z, Z.conj().T)
        self.cache: dict[tuple[bool, ...], complex] = {}

    def __call__(self, word: tuple[bool, ...]) -> complex:
        val = self.cache.get(word)
        if val is None:
            P = self.factors[word[0]]
            for mark in word[1:]:
                P = P @ self.factors[mark]
            val = complex(np.trace(P))
            self.cache[word] = val
        return val


def _trace_T(pi: Partition, traces: _WordTraces) -> float:
    d = pi.d
    bounds = list(itertools.accumulate(pi.parts, initial=0))
    re_terms, im_terms = [], []
    for mask in adjoint_placements(d):
        prod = 1.0 + 0.0j
        for lo, hi in zip(bounds, bounds[1:]):
            prod *= traces(mask[lo:hi])
        re_terms.append(prod.real)
        im_terms.append(prod.imag)
    count = len(re_terms)
    value = math.fsum(re_terms) / count
    imag = math.fsum(im_terms) / count
    if abs(imag) > IMAG_RTOL * (1.0 + abs(value)):
        raise InconsistencyError(f"T_pi has imaginary part {imag:.3e} (real part {value:.3e})")
    return value


def _check_order(d: int) -> int:
    if d % 2:
        raise OddExponentError(f"T_pi needs an even total degree, got {d}")
    if d > MAX_EXTENSION_D:
        raise OutOfRangeError(f"T_pi enumeration is capped at d <= {MAX_EXTENSION_D}")
    return d


def trace_T(pi, Z) -> float:
    """Averaged trace polynomial T_pi(Z) (real by construction)."""
    if not isinstance(pi, Partition):
        pi = Partition(tuple(pi))
    _check_order(pi.d)
    return _trace_T(pi, _WordTraces(as_matrix(Z)))


def norm_extended(Z, dist: Distribution, d: int) -> float:
    """(sum_{pi |- d} kappa_pi T_pi(Z) / y_pi)^{1/d} for any complex square Z."""
    d = _check_order(even_order(d))
    require_moments(dist, d)
    kappa = cumulants(dist, d)
    traces = _WordTraces(as_matrix(Z))
    T = {pi: _trace_T(pi, traces) for pi in enumerate_partitions(d)}
    return _root(partition_sum(kappa, T, d), d)
