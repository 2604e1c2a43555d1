"""Integer partitions, complete Bell polynomials, complete homogeneous
symmetric polynomials, multinomials and the gamma function."""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence

from .errors import OutOfRangeError

MAX_PARTITION_D = 20
MAX_BELL_D = 20
MAX_H_D = 12
MAX_H_N = 8


@dataclass(frozen=True)
class Partition:
    """A partition of ``d``: nonincreasing positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if not parts or any(p < 1 for p in parts):
            raise OutOfRangeError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise OutOfRangeError(f"partition parts must be nonincreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def d(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @cached_property
    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.parts))

    @cached_property
    def y(self) -> int:
        return partition_y(self)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)


@lru_cache(maxsize=None)
def _partitions(d: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if d == 0:
        return ((),)
    out = []
    for first in range(min(d, largest), 0, -1):
        for rest in _partitions(d - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_partitions(d: int) -> tuple[Partition, ...]:
    """All partitions of ``d`` in reverse-lexicographic order.

    >>> [p.parts for p in enumerate_partitions(4)]
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if not 1 <= d <= MAX_PARTITION_D:
        raise OutOfRangeError(f"d must be in [1, {MAX_PARTITION_D}], got {d}")
    return tuple(Partition(p) for p in _partitions(d, d))


def partition_y(pi: Partition | Sequence[int]) -> int:
    """y_pi = prod_i (i!)^{m_i} m_i!.

    d!/y_pi is the number of set partitions of {1..d} with block sizes pi.
    """
    if not isinstance(pi, Partition):
        pi = Partition(tuple(pi))
    y = 1
    for i, m in pi.multiplicities.items():
        y *= math.factorial(i) ** m * math.factorial(m)
    return y


def complete_bell(x: Sequence[float]) -> float:
    """Complete Bell polynomial B_d(x_1, ..., x_d), d = len(x).

    Uses B_{l+1} = sum_{k=0}^{l} C(l, k) B_{l-k} x_{k+1} with B_0 = 1.
    """
    d = len(x)
    if not 1 <= d <= MAX_BELL_D:
        raise OutOfRangeError(f"Bell order must be in [1, {MAX_BELL_D}], got {d}")
    B = [1.0]
    for ell in range(d):
        B.append(math.fsum(math.comb(ell, k) * B[ell - k] * x[k] for k in range(ell + 1)))
    return B[d]


def complete_homogeneous(lam: Sequence[float], d: int) -> float:
    """h_d(lam): sum of all degree-d monomials, one per multiset of indices."""
    lam = [float(v) for v in lam]
    if d < 0 or d > MAX_H_D or len(lam) > MAX_H_N:
        raise OutOfRangeError(f"need 0 <= d <= {MAX_H_D} and n <= {MAX_H_N}")
    if d == 0:
        return 1.0
    return math.fsum(
        math.prod(combo) for combo in itertools.combinations_with_replacement(lam, d)
    )


def compositions(d: int, n: int):
    """Yield all (i_1, ..., i_n) of nonnegative integers summing to d."""
    for bars in itertools.combinations(range(d + n - 1), n - 1):
        prev = -1
        out = []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(d + n - 1 - prev - 1)
        yield tuple(out)


def multinomial(parts: Sequence[int]) -> int:
    out = 1
    total = 0
    for k in parts:
        total += k
        out *= math.comb(total, k)
    return out


def gamma(x: float) -> float:
    """Gamma function on [1, inf)."""
    if not x >= 1:
        raise OutOfRangeError(f"gamma is only provided for x >= 1, got {x}")
    return math.gamma(x)

