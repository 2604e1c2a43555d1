"""The random variables used to build norms: exact moments, cumulants,
MGF series and a counter-based sampler.

Sampling is stateless. The k-th uniform consumed at vector position ``pos``
of draw ``index`` under ``seed`` is a fixed function of that triple (plus a
slot number for Box-Muller's second uniform), so Monte Carlo results do not
depend on chunking or evaluation order.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    MgfUnavailableError,
    MomentDoesNotExistError,
    OddExponentError,
    OutOfRangeError,
)

MAX_SERIES_D = 20


@dataclass(frozen=True)
class Normal:
    mu: float = 0.0
    sigma: float = 1.0

    def __post_init__(self):
        if not self.sigma > 0:
            raise OutOfRangeError("Normal requires sigma > 0")

    @property
    def label(self) -> str:
        return f"normal(mu={self.mu:g}, sigma={self.sigma:g})"

    def moment(self, r: int) -> float:
        m_prev, m = 1.0, self.mu
        if r == 0:
            return 1.0
        for k in range(2, r + 1):
            m_prev, m = m, self.mu * m + (k - 1) * self.sigma**2 * m_prev
        return m

    def _transform(self, u1, u2):
        # Box-Muller; 1 - u1 lies in (0, 1]
        z = np.sqrt(-2.0 * np.log1p(-u1)) * np.cos(2.0 * np.pi * u2)
        return self.mu + self.sigma * z


@dataclass(frozen=True)
class Exponential:
    """Standard exponential (rate 1)."""

    @property
    def label(self) -> str:
        return "exponential"

    def moment(self, r: int) -> float:
        return float(math.factorial(r))

    def _transform(self, u1, u2):
        return -np.log1p(-u1)


@dataclass(frozen=True)
class Bernoulli:
    q: float = 0.5

    def __post_init__(self):
        if not 0 < self.q < 1:
            raise OutOfRangeError("Bernoulli requires 0 < q < 1")

    @property
    def label(self) -> str:
        return f"bernoulli(q={self.q:g})"

    def moment(self, r: int) -> float:
        return 1.0 if r == 0 else self.q

    def _transform(self, u1, u2):
        return (u1 < self.q).astype(float)


@dataclass(frozen=True)
class Pareto:
    alpha: float
    xm: float = 1.0

    def __post_init__(self):
        if not (self.alpha > 0 and self.xm > 0):
            raise OutOfRangeError("Pareto requires alpha > 0 and xm > 0")

    @property
    def label(self) -> str:
        return f"pareto(alpha={self.alpha:g}, xm={self.xm:g})"

    def moment(self, r: int) -> float:
        if r == 0:
            return 1.0
        if not self.alpha > r:
            raise MomentDoesNotExistError(
                f"Pareto moment of order {r} needs alpha > {r} (alpha = {self.alpha:g})"
            )
        return self.alpha * self.xm**r / (self.alpha - r)

    def _transform(self, u1, u2):
        return self.xm * (1.0 - u1) ** (-1.0 / self.alpha)


Distribution = Normal | Exponential | Bernoulli | Pareto

_USES_TWO_UNIFORMS = (Normal,)


def require_moments(dist: Distribution, order: float) -> None:
    """Raise unless E|X|^order is finite."""
    if isinstance(dist, Pareto) and not dist.alpha > order:
        raise MomentDoesNotExistError(
            f"Pareto needs alpha > {order:g} for order-{order:g} moments (alpha = {dist.alpha:g})"
        )


def moment(dist: Distribution, r: int) -> float:
    """Exact r-th raw moment E[X^r]."""
    if r < 0:
        raise OutOfRangeError("moment order must be nonnegative")
    return dist.moment(r)


def moments_to_cumulants(mu: Sequence[float]) -> list[float]:
    """Solve mu_r = sum_{l=0}^{r-1} C(r-1, l) mu_l kappa_{r-l} for kappa_1..kappa_d.

    ``mu`` holds mu_1..mu_d (mu_0 = 1 implied).
    """
    m = [1.0] + [float(v) for v in mu]
    kappa = [0.0]
    for r in range(1, len(m)):
        s = math.fsum(math.comb(r - 1, ell) * m[ell] * kappa[r - ell] for ell in range(1, r))
        kappa.append(m[r] - s)
    return kappa[1:]


def cumulants_to_moments(kappa: Sequence[float]) -> list[float]:
    """Inverse of :func:`moments_to_cumulants` using the same recursion."""
    k = [0.0] + [float(v) for v in kappa]
    m = [1.0]
    for r in range(1, len(k)):
        m.append(math.fsum(math.comb(r - 1, ell) * m[ell] * k[r - ell] for ell in range(r)))
    return m[1:]


def cumulants(dist: Distribution, d: int) -> np.ndarray:
    """kappa_1..kappa_d of ``dist``."""
    if d < 1:
        raise OutOfRangeError("cumulant order must be >= 1")
    mu = [dist.moment(r) for r in range(1, d + 1)]
    return np.array(moments_to_cumulants(mu))


def mgf_product_coefficient(dist: Distribution, lam: Sequence[float], d: int) -> float:
    """Coefficient of t^d in prod_i M(lam_i t), from the moment series of M.

    For even d this coefficient is the d-th power of the norm of any
    Hermitian matrix with spectrum ``lam``.
    """
    if isinstance(dist, Pareto):
        raise MgfUnavailableError("Pareto variables have no moment generating function")
    if d < 2 or d % 2 or d > MAX_SERIES_D:
        raise OddExponentError(f"d must be an even integer in [2, {MAX_SERIES_D}], got {d}")
    base = [dist.moment(k) / math.factorial(k) for k in range(d + 1)]
    series = np.zeros(d + 1)
    series[0] = 1.0
    for li in lam:
        factor = np.array([base[k] * float(li) ** k for k in range(d + 1)])
        series = np.convolve(series, factor)[: d + 1]
    return float(series[d])


# --- counter-based uniforms -------------------------------------------------

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)
_MASK64 = (1 << 64) - 1


def _mix64(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * _M1
    z = (z ^ (z >> np.uint64(27))) * _M2
    return z ^ (z >> np.uint64(31))


def _seed_key(seed: int) -> np.ndarray:
    return _mix64(np.array([seed & _MASK64], dtype=np.uint64) ^ np.uint64(0x5851F42D4C957F2D))


def uniforms(seed: int, indices: np.ndarray, n: int, slot: int = 0) -> np.ndarray:
    """Uniforms in [0, 1) of shape (len(indices), n).

    Entry (i, j) is SplitMix64 evaluated at counter
    ``indices[i] * 256 + 2 * j + slot`` of the stream keyed by ``seed``.
    """
    if not 1 <= n <= 64:
        raise OutOfRangeError("vector dimension must be in [1, 64]")
    idx = np.asarray(indices, dtype=np.uint64).reshape(-1, 1)
    pos = (2 * np.arange(n, dtype=np.uint64) + np.uint64(slot)).reshape(1, -1)
    counter = (idx << np.uint64(8)) | pos
    bits = _mix64(_seed_key(seed) + counter * _GOLDEN)
    return (bits >> np.uint64(11)).astype(np.float64) * (1.0 / 9007199254740992.0)


def sample_block(dist: Distribution, n: int, seed: int, start: int, count: int) -> np.ndarray:
    """Draws for indices start..start+count-1, shape (count, n)."""
    idx = np.arange(start, start + count, dtype=np.uint64)
    u1 = uniforms(seed, idx, n, 0)
    u2 = uniforms(seed, idx, n, 1) if isinstance(dist, _USES_TWO_UNIFORMS) else None
    return dist._transform(u1, u2)


def sample_vector(dist: Distribution, n: int, seed: int, index: int) -> np.ndarray:
    """The ``index``-th iid draw of an n-vector under ``seed``."""
    return sample_block(dist, n, seed, index, 1)[0]


# --- "normal:mu=0,sigma=1" style specs ---------------------------------------

_SPEC_RE = re.compile(r"^\s*([a-zA-Z]+)\s*(?::(.*))?$")


def parse_distribution(spec: str) -> Distribution:
    """Parse ``normal:mu=0,sigma=1``, ``exp``, ``bernoulli:q=0.5`` or
    ``pareto:alpha=4,xm=1``."""
    m = _SPEC_RE.match(spec)
    if not m:
        raise ValueError(f"bad distribution spec {spec!r}")
    name = m.group(1).lower()
    params: dict[str, float] = {}
    if m.group(2):
        for item in m.group(2).split(","):
            if not item.strip():
                continue
            key, sep, value = item.partition("=")
            if not sep:
                raise ValueError(f"bad parameter {item!r} in {spec!r}")
            params[key.strip().lower()] = float(value)
    if name == "exponential":
        name = "exp"
    if name not in _FACTORIES:
        raise ValueError(f"unknown distribution {name!r}")
    factory, allowed = _FACTORIES[name]
    unknown = set(params) - set(allowed)
    if unknown:
        raise ValueError(f"unknown parameters {sorted(unknown)} in {spec!r}")
    try:
        return factory(**params)
    except TypeError:
        raise ValueError(f"missing parameters in {spec!r}") from None


_FACTORIES = {
    "normal": (Normal, ("mu", "sigma")),
    "exp": (Exponential, ()),
    "bernoulli": (Bernoulli, ("q",)),
    "pareto": (Pareto, ("alpha", "xm")),
}


def format_distribution(dist: Distribution) -> str:
    if isinstance(dist, Normal):
        return f"normal:mu={dist.mu!r},sigma={dist.sigma!r}"
    if isinstance(dist, Exponential):
        return "exp"
    if isinstance(dist, Bernoulli):
        return f"bernoulli:q={dist.q!r}"
    return f"pareto:alpha={dist.alpha!r},xm={dist.xm!r}"
