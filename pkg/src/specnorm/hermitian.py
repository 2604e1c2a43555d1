"""Random-vector norms on Hermitian matrices.

For an iid random vector X and real d >= 1,

    ||A||_{X,d} = ( E|<X, lambda(A)>|^d / Gamma(d+1) )^{1/d}.

``norm_mc`` estimates the expectation directly. For even integer d the two
exact engines evaluate it through cumulants: the complete Bell form and the
power-sum partition form. The ``closed_form_*`` functions are independent
closed expressions for particular distributions.

Every function accepting a matrix also accepts a bare eigenvalue vector
(1-D array), which is treated as the spectrum of the diagonal matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import combinatorics
from .combinatorics import complete_bell, compositions, enumerate_partitions, multinomial
from .distributions import (
    Distribution,
    cumulants,
    mgf_product_coefficient,
    require_moments,
    sample_block,
)
from .errors import (
    AlphaTooSmallError,
    InconsistencyError,
    OddExponentError,
    OutOfRangeError,
    TooFewSamplesError,
)
from .linalg import HermitianMatrix

MIN_SAMPLES = 1000
CHUNK = 1 << 16
NEGATIVE_CLAMP = 1e-12


@dataclass(frozen=True)
class NormEstimate:
    value: float
    stderr: float
    samples: int

    def __float__(self):
        return self.value


def spectrum(A) -> np.ndarray:
    """Descending eigenvalues of ``A`` (HermitianMatrix, square array or 1-D vector)."""
    if isinstance(A, HermitianMatrix):
        return A.eigenvalues
    arr = np.asarray(A)
    if arr.ndim == 1:
        return np.sort(arr.astype(float))[::-1]
    return HermitianMatrix(arr).eigenvalues


def even_order(d) -> int:
    """Validate that ``d`` is an even integer >= 2 and return it as int."""
    if float(d) != int(d) or int(d) < 2 or int(d) % 2:
        raise OddExponentError(f"exact formulas need an even integer d >= 2, got {d}")
    return int(d)


def power_sums(lam: np.ndarray, d: int) -> list[float]:
    """p_1..p_d of ``lam``."""
    return [math.fsum(lam**k) for k in range(1, d + 1)]


def _root(inner: float, d: int) -> float:
    if inner < 0:
        if inner < -NEGATIVE_CLAMP:
            raise InconsistencyError(f"negative d-th power of a norm: {inner!r}")
        inner = 0.0
    return inner ** (1.0 / d)


# --- Monte Carlo ------------------------------------------------------------


def projections(lam, dist: Distribution, n_samples: int, seed: int) -> np.ndarray:
    """Samples of <X, lam> for draw indices 0..n_samples-1 under ``seed``."""
    lam = np.asarray(lam, dtype=float)
    out = np.empty(n_samples)
    for start in range(0, n_samples, CHUNK):
        count = min(CHUNK, n_samples - start)
        out[start : start + count] = sample_block(dist, lam.size, seed, start, count) @ lam
    return out


def estimate_from_projections(values: np.ndarray, d: float) -> NormEstimate:
    """Turn samples of <X, lam> into a norm estimate with delta-method stderr."""
    N = values.size
    powered = np.abs(values) ** d
    mean = float(np.mean(powered))
    if mean == 0.0:
        return NormEstimate(0.0, 0.0, N)
    sd = float(np.std(powered, ddof=1))
    value = (mean / combinatorics.gamma(d + 1)) ** (1.0 / d)
    stderr = value * (sd / mean) / (d * math.sqrt(N))
    return NormEstimate(value, stderr, N)


def norm_mc(A, dist: Distribution, d: float, n_samples: int = 100_000, seed: int = 0) -> NormEstimate:
    """Monte Carlo estimate of ||A||_{X,d} for any real d >= 1."""
    if d < 1:
        raise OutOfRangeError(f"d must be >= 1, got {d}")
    if n_samples < MIN_SAMPLES:
        raise TooFewSamplesError(f"need at least {MIN_SAMPLES} samples, got {n_samples}")
    require_moments(dist, d)
    lam = spectrum(A)
    if not np.any(lam):
        return NormEstimate(0.0, 0.0, n_samples)
    return estimate_from_projections(projections(lam, dist, n_samples, seed), d)


# --- exact engines (even d) ---------------------------------------------------


def _exact_setup(A, dist: Distribution, d):
    d = even_order(d)
    require_moments(dist, d)
    return spectrum(A), d, cumulants(dist, d)


def norm_exact_bell(A, dist: Distribution, d: int) -> float:
    """((1/d!) B_d(kappa_1 p_1, ..., kappa_d p_d))^{1/d}."""
    lam, d, kappa = _exact_setup(A, dist, d)
    p = power_sums(lam, d)
    inner = complete_bell([k * pk for k, pk in zip(kappa, p)]) / math.factorial(d)
    return _root(inner, d)


def partition_sum(kappa: Sequence[float], traces: dict, d: int) -> float:
    """sum over pi |- d of kappa_pi * traces[pi] / y_pi."""
    terms = []
    for pi in enumerate_partitions(d):
        k_pi = math.prod(kappa[j - 1] for j in pi.parts)
        terms.append(k_pi * traces[pi] / pi.y)
    return math.fsum(terms)


def norm_exact_partition(A, dist: Distribution, d: int) -> float:
    """(sum_{pi |- d} kappa_pi p_pi(lambda) / y_pi)^{1/d}."""
    lam, d, kappa = _exact_setup(A, dist, d)
    p = power_sums(lam, d)
    traces = {pi: math.prod(p[j - 1] for j in pi.parts) for pi in enumerate_partitions(d)}
    return _root(partition_sum(kappa, traces, d), d)


def norm_exact_mgf(A, dist: Distribution, d: int) -> float:
    """d-th root of the t^d coefficient of prod_i M(lambda_i t)."""
    d = even_order(d)
    return _root(mgf_product_coefficient(dist, spectrum(A), d), d)


def norm_exact(A, dist: Distribution, d: int) -> float:
    """Default exact engine (partition form)."""
    return norm_exact_partition(A, dist, d)


# --- closed forms --------------------------------------------------------------


def closed_form_normal(A, mu: float, sigma: float, d: int) -> float:
    """Normal(mu, sigma^2) entries:

    ||A||^d = sum_{k=0}^{d/2} mu^{2k} (tr A)^{2k} / (2k)!
              * sigma^{d-2k} ||A||_F^{d-2k} / (2^{d/2-k} (d/2-k)!)
    """
    d = even_order(d)
    if not sigma > 0:
        raise OutOfRangeError("sigma must be positive")
    lam = spectrum(A)
    tr = math.fsum(lam)
    fro = math.sqrt(math.fsum(lam**2))
    half = d // 2
    inner = math.fsum(
        (mu * tr) ** (2 * k) / math.factorial(2 * k)
        * (sigma * fro) ** (d - 2 * k) / (2 ** (half - k) * math.factorial(half - k))
        for k in range(half + 1)
    )
    return _root(inner, d)


def closed_form_bernoulli(A, q: float, d: int) -> float:
    """Bernoulli(q) entries, summing over compositions i_1 + ... + i_n = d:

    ||A||^d = (1/d!) sum multinomial(d; i) q^{#nonzero i_k} prod lambda_k^{i_k}
    """
    d = even_order(d)
    if not 0 < q < 1:
        raise OutOfRangeError("q must lie in (0, 1)")
    lam = spectrum(A)
    if lam.size > 6 or d > 10:
        raise OutOfRangeError("composition enumeration is capped at n <= 6, d <= 10")
    terms = []
    for comp in compositions(d, lam.size):
        support = sum(1 for i in comp if i)
        terms.append(multinomial(comp) * q**support * math.prod(l**i for l, i in zip(lam, comp)))
    return _root(math.fsum(terms) / math.factorial(d), d)


def closed_form_pareto_2x2(lam: Sequence[float], alpha: float) -> float:
    """d = 2, n = 2, x_m = 1 Pareto entries:

    ||A||^2 = (alpha/2) (l1^2/(alpha-2) + 2 alpha l1 l2/(alpha-1)^2 + l2^2/(alpha-2))
    """
    if not alpha > 2:
        raise AlphaTooSmallError(f"need alpha > 2, got {alpha}")
    l1, l2 = (float(v) for v in lam)
    inner = alpha / 2 * (
        l1**2 / (alpha - 2) + 2 * alpha * l1 * l2 / (alpha - 1) ** 2 + l2**2 / (alpha - 2)
    )
    return _root(inner, 2)


# --- continuity in d --------------------------------------------------------------


def continuity_scan(
    A, dist: Distribution, d_grid: Sequence[float], n_samples: int = 100_000, seed: int = 0
) -> list[NormEstimate]:
    """``norm_mc`` over a grid of exponents reusing one set of draws, so the
    sampling noise is shared across the curve."""
    grid = [float(v) for v in d_grid]
    if not grid:
        return []
    if any(b < a for a, b in zip(grid, grid[1:])):
        raise OutOfRangeError("d_grid must be sorted ascending")
    if grid[0] < 1:
        raise OutOfRangeError("exponents must be >= 1")
    if n_samples < MIN_SAMPLES:
        raise TooFewSamplesError(f"need at least {MIN_SAMPLES} samples, got {n_samples}")
    require_moments(dist, grid[-1])
    lam = spectrum(A)
    if not np.any(lam):
        return [NormEstimate(0.0, 0.0, n_samples) for _ in grid]
    values = projections(lam, dist, n_samples, seed)
    return [estimate_from_projections(values, d) for d in grid]
