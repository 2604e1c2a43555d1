"""Self-check suites run by ``specnorm verify``.

Each suite returns a :class:`Report` holding one :class:`Check` per
property: how many cases were tried, whether all passed and the worst
deviation seen.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import hermitian as H
from .combinatorics import complete_homogeneous, enumerate_partitions
from .distributions import Bernoulli, Exponential, Normal, Pareto
from .errors import UnknownSuiteError
from .extension import norm_extended, trace_T
from .figures import circle_samples, figure_sets, read_circle_csv
from .linalg import HermitianMatrix, random_complex, random_hermitian, random_unitary, trace_word
from .majorization import (
    birkhoff_decompose,
    hlp_transfer,
    ky_fan_check,
    majorization_pair_generator,
    majorizes,
)

ENGINE_DISTS = (Normal(1, 2), Exponential(), Bernoulli(0.3))


@dataclass
class Check:
    name: str
    passed: bool = True
    cases: int = 0
    max_deviation: float = 0.0
    note: str = ""

    def record(self, ok: bool, deviation: float = 0.0) -> None:
        self.cases += 1
        self.passed &= bool(ok)
        if not math.isnan(deviation):
            self.max_deviation = max(self.max_deviation, float(deviation))

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] {self.name}: {self.cases} cases, max deviation {self.max_deviation:.3e}"
        return f"{text} ({self.note})" if self.note else text


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, note: str = "") -> Check:
        check = Check(name, note=note)
        self.checks.append(check)
        return check

    def format(self) -> str:
        lines = [f"suite {self.suite}"] + ["  " + c.line() for c in self.checks]
        lines.append(f"suite {self.suite}: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def rel(a: float, b: float) -> float:
    return abs(a - b) / (1.0 + abs(b))


def _hermitian(seed: int, nmax: int = 5) -> HermitianMatrix:
    n = 1 + seed % nmax
    return random_hermitian(n, seed, scale=1.0)


EXACT_ENGINES: dict[str, Callable] = {
    "bell": H.norm_exact_bell,
    "partition": H.norm_exact_partition,
}


def suite_axioms(seed: int = 0, pairs: int = 1000, mc_samples: int = 200_000) -> Report:
    rep = Report("axioms")
    homog = rep.add("homogeneity |c|", "exact engines, c in {-2, -0.5, 3}")
    tri = rep.add("triangle inequality")
    posdef = rep.add("positive definiteness")
    unitary = rep.add("weak unitary invariance")
    rng = np.random.default_rng(seed)
    dists = ENGINE_DISTS + (Pareto(10),)
    for i in range(pairs):
        dist = dists[i % len(dists)]
        d = (2, 4, 6)[i % 3]
        engine = EXACT_ENGINES["bell" if i % 2 else "partition"]
        n = 1 + i % 5
        A = random_hermitian(n, seed * 100_003 + 2 * i)
        B = random_hermitian(n, seed * 100_003 + 2 * i + 1)
        nA, nB, nAB = engine(A, dist, d), engine(B, dist, d), engine(A + B, dist, d)
        tri.record(nAB <= nA + nB + 1e-10, max(0.0, nAB - nA - nB))
        posdef.record(nA > 0, 0.0)
        if i < 100:
            for c in (-2.0, -0.5, 3.0):
                val = engine(c * A, dist, d)
                dev = abs(val - abs(c) * nA) / (abs(c) * nA)
                homog.record(dev <= 1e-10, dev)
            U = random_unitary(n, int(rng.integers(1 << 31)))
            val = engine(A.conjugate_by(U), dist, d)
            dev = abs(val - nA) / nA
            unitary.record(dev <= 1e-8, dev)

    # Monte Carlo normalization by Gamma(d+1) must reproduce the exact engine.
    mc = rep.add("Monte Carlo matches exact", "4 standard errors")
    for j, (dist, d) in enumerate(itertools.product(ENGINE_DISTS, (2, 4))):
        A = random_hermitian(3, seed * 7 + j)
        est = H.norm_mc(A, dist, d, mc_samples, seed + j)
        exact = H.norm_exact_partition(A, dist, d)
        z = abs(est.value - exact) / est.stderr
        mc.record(z <= 4.0, z)
    return rep


def suite_engines(seed: int = 0, matrices: int = 50) -> Report:
    rep = Report("engines")
    agree = rep.add("bell = partition = mgf", "relative, tolerance 1e-9")
    expo = rep.add("exponential: norm^d = h_d")
    normal = rep.add("normal closed form")
    bern = rep.add("bernoulli closed form")
    pareto = rep.add("pareto 2x2 closed form")
    for i in range(matrices):
        A = random_hermitian(1 + i % 5, seed * 10_007 + i)
        for dist, d in itertools.product(ENGINE_DISTS, (2, 4, 6, 8)):
            b = H.norm_exact_bell(A, dist, d)
            p = H.norm_exact_partition(A, dist, d)
            m = H.norm_exact_mgf(A, dist, d)
            dev = max(rel(b, p), rel(m, p))
            agree.record(dev <= 1e-9, dev)
        lam = A.eigenvalues
        for d in (2, 4, 6, 8):
            h = complete_homogeneous(lam, d)
            val = H.norm_exact_partition(A, Exponential(), d) ** d
            dev = abs(val - h) / (1e-300 + abs(h))
            expo.record(dev <= 1e-9, dev)
        for mu, sigma, d in itertools.product((-1, 0, 2), (0.5, 1, 3), (2, 4, 6)):
            if (mu + sigma + d + i) % 9:
                continue
            cf = H.closed_form_normal(A, mu, sigma, d)
            dev = rel(cf, H.norm_exact_partition(A, Normal(mu, sigma), d))
            normal.record(dev <= 1e-9, dev)
        if A.n <= 4:
            for q, d in itertools.product((0.2, 0.5, 0.8), (2, 4, 6)):
                cf = H.closed_form_bernoulli(A, q, d)
                dev = rel(cf, H.norm_exact_partition(A, Bernoulli(q), d))
                bern.record(dev <= 1e-9, dev)
    rng = np.random.default_rng(seed)
    for alpha in (2.1, 3, 4, 10):
        for _ in range(10):
            lam = rng.uniform(-1, 1, 2)
            cf = H.closed_form_pareto_2x2(lam, alpha)
            eng = H.norm_exact_partition(lam, Pareto(alpha, 1), 2)
            dev = abs(cf**2 - eng**2) / (1e-300 + cf**2)
            pareto.record(dev <= 1e-12, dev)
    return rep


def exponential_d4_trace_polynomial(Z) -> float:
    """The ten-term trace polynomial equal to ||Z||^4 for standard exponentials."""
    Z = np.asarray(Z, dtype=complex)
    S = Z.conj().T
    tr = np.trace
    t_z, t_s = tr(Z), tr(S)
    val = (
        t_z**2 * t_s**2
        + t_s**2 * tr(Z @ Z)
        + 4 * t_z * t_s * tr(S @ Z)
        + 2 * tr(S @ Z) ** 2
        + t_z**2 * tr(S @ S)
        + tr(Z @ Z) * tr(S @ S)
        + 4 * t_s * tr(S @ Z @ Z)
        + 4 * t_z * tr(S @ S @ Z)
        + 2 * tr(S @ Z @ S @ Z)
        + 4 * tr(S @ S @ Z @ Z)
    ) / 24
    return float(val.real)


def suite_extension(seed: int = 0, cases: int = 50, pairs: int = 500) -> Report:
    rep = Report("extension")
    restrict = rep.add("restriction to Hermitian matrices")
    ten = rep.add("exponential d=4 ten-term trace polynomial")
    homog = rep.add("homogeneity |c| (complex c)")
    tri = rep.add("triangle inequality on M_n")
    posdef = rep.add("positive definiteness on M_n")
    unitary = rep.add("weak unitary invariance on M_n")
    relabel = rep.add("block assignment independence (d=4)")
    rng = np.random.default_rng(seed)
    for i in range(cases):
        A = random_hermitian(1 + i % 4, seed * 1009 + i)
        for dist, d in itertools.product(ENGINE_DISTS, (2, 4, 6)):
            dev = rel(norm_extended(A.matrix, dist, d), H.norm_exact_partition(A, dist, d))
            restrict.record(dev <= 1e-9, dev)
        Z = random_complex(1 + i % 4, seed * 2003 + i)
        oracle = exponential_d4_trace_polynomial(Z)
        val = norm_extended(Z, Exponential(), 4) ** 4
        dev = abs(val - oracle) / abs(oracle)
        ten.record(dev <= 1e-9, dev)
        for pi in enumerate_partitions(4):
            dev = abs(trace_T(pi, Z) - _trace_T_interleaved(pi.parts, Z))
            relabel.record(dev <= 1e-10 * (1 + abs(trace_T(pi, Z))), dev)
        U = random_unitary(Z.shape[0], seed * 31 + i)
        for dist in ENGINE_DISTS:
            a = norm_extended(Z, dist, 4)
            b = norm_extended(U.conj().T @ Z @ U, dist, 4)
            unitary.record(rel(b, a) <= 1e-8, rel(b, a))
            c = complex(rng.normal(), rng.normal())
            dev = abs(norm_extended(c * Z, dist, 4) - abs(c) * a) / (abs(c) * a)
            homog.record(dev <= 1e-10, dev)
    for i in range(pairs):
        n = 1 + i % 4
        dist = ENGINE_DISTS[i % 3]
        d = (2, 4)[i % 2]
        Z = random_complex(n, seed * 5003 + 2 * i)
        W = random_complex(n, seed * 5003 + 2 * i + 1)
        a, b, ab = norm_extended(Z, dist, d), norm_extended(W, dist, d), norm_extended(Z + W, dist, d)
        tri.record(ab <= a + b + 1e-10, max(0.0, ab - a - b))
        posdef.record(a > 0)
    return rep


def _trace_T_interleaved(parts, Z) -> float:
    """T_pi with positions dealt to trace factors round-robin instead of in
    contiguous blocks."""
    d = sum(parts)
    owners = []
    remaining = list(parts)
    f = 0
    while len(owners) < d:
        if remaining[f]:
            owners.append(f)
            remaining[f] -= 1
        f = (f + 1) % len(parts)
    total = 0.0 + 0.0j
    count = 0
    for chosen in itertools.combinations(range(d), d // 2):
        prod = 1.0 + 0.0j
        for fac in range(len(parts)):
            word = [pos in chosen for pos in range(d) if owners[pos] == fac]
            prod *= trace_word(Z, word)
        total += prod
        count += 1
    return (total / count).real


def suite_majorization(seed: int = 0, ky_pairs: int = 500, chain_pairs: int = 100, schur_pairs: int = 1000) -> Report:
    rep = Report("majorization")
    ky = rep.add("Ky Fan partial sums")
    chain = rep.add("lambda(A+B) = sum c_i P_i (lambda(A)+lambda(B))", "tolerance 1e-7")
    count = rep.add("Birkhoff term count <= n^2 - n + 1")
    coef = rep.add("Birkhoff coefficients sum to 1")
    schur = rep.add("Schur convexity f(x) <= f(y) + 1e-12")
    for i in range(ky_pairs):
        n = 1 + i % 6
        A = random_hermitian(n, seed * 40_009 + 2 * i)
        B = random_hermitian(n, seed * 40_009 + 2 * i + 1)
        ky.record(ky_fan_check(A, B))
        if i < chain_pairs:
            x = (A + B).eigenvalues
            y = A.eigenvalues + B.eigenvalues
            dec = birkhoff_decompose(hlp_transfer(x, y))
            dev = float(np.max(np.abs(dec.apply(y) - x)))
            chain.record(dev <= 1e-7, dev)
            count.record(len(dec) <= n * n - n + 1, 0.0)
            s = math.fsum(t.coefficient for t in dec)
            coef.record(abs(s - 1) <= 1e-10 and all(t.coefficient >= 0 for t in dec), abs(s - 1))
    dists = ENGINE_DISTS + (Normal(0, 1), Pareto(9))
    for i in range(schur_pairs):
        n = 2 + i % 5
        x, y = majorization_pair_generator(n, seed * 70_001 + i)
        assert majorizes(x, y)
        dist = dists[i % len(dists)]
        d = (2, 4, 6, 8)[(i // len(dists)) % 4]
        engines = [H.norm_exact_bell, H.norm_exact_partition]
        if not isinstance(dist, Pareto):
            engines.append(H.norm_exact_mgf)
        for f in engines:
            fx, fy = f(x, dist, d), f(y, dist, d)
            schur.record(fx <= fy + 1e-12, max(0.0, fx - fy))
    return rep


def suite_figures(seed: int = 0, resolution: int = 72, mc_samples: int = 20_000) -> Report:
    rep = Report("figures")
    round_ = rep.add("normal(0,1) d=2 circle radius sqrt(2)")
    expo = rep.add("exponential circles match exact engine")
    built = rep.add("figure tables generated")
    roundtrip = rep.add("CSV round trip bit-exact")
    mono = rep.add("exponential diagonal radius nondecreasing in d (2, 4, 20)")
    t = circle_samples(Normal(0, 1), 2, resolution)
    for r in t.rows:
        dev = abs(math.hypot(r.x, r.y) - math.sqrt(2))
        round_.record(dev <= 1e-9, dev)
    for d in (2, 4, 20):
        t = circle_samples(Exponential(), d, resolution)
        for r in t.rows:
            dev = rel(r.norm, H.norm_exact_partition(np.array([r.dir1, r.dir2]), Exponential(), d))
            expo.record(dev <= 1e-12, dev)
        back = read_circle_csv(t.to_csv())
        roundtrip.record(back.rows == t.rows)
    for name, curves in figure_sets().items():
        for dist, d, method in curves:
            t = circle_samples(dist, d, resolution, method, mc_samples, seed)
            ok = len(t) == resolution and all(np.isfinite(r.norm) and r.norm > 0 for r in t.rows)
            built.record(ok)
    u = np.array([1.0, 1.0]) / math.sqrt(2)
    radii = [1.0 / H.norm_exact_partition(u, Exponential(), d) for d in (2, 4, 20)]
    for a, b in zip(radii, radii[1:]):
        mono.record(b >= a - 1e-9, max(0.0, a - b))
    return rep


def suite_continuity(seed: int = 0, samples: int = 1_000_000, steps: int = 41) -> Report:
    rep = Report("continuity")
    jump = rep.add("max adjacent jump <= 0.02 on d in [1, 3]", "diag(1,-1), normal(0,1)")
    anchors = rep.add("scan hits exact values at even d", "4 standard errors")
    grid = np.linspace(1.0, 3.0, steps)
    A = np.array([1.0, -1.0])
    est = H.continuity_scan(A, Normal(0, 1), grid, samples, seed)
    for a, b in zip(est, est[1:]):
        dev = abs(b.value - a.value)
        jump.record(dev <= 0.02, dev)
    exps = H.continuity_scan(np.array([1.0, 1.0]), Exponential(), [2.0, 4.0], samples, seed)
    for e, exact in zip(exps, (math.sqrt(3), 5**0.25)):
        z = abs(e.value - exact) / e.stderr
        anchors.record(z <= 4, z)
    return rep


SUITES: dict[str, Callable[..., Report]] = {
    "axioms": suite_axioms,
    "engines": suite_engines,
    "extension": suite_extension,
    "majorization": suite_majorization,
    "figures": suite_figures,
    "continuity": suite_continuity,
}


def run_verify(suite: str, seed: int = 0, **kwargs) -> Report:
    """Run one named suite."""
    try:
        fn = SUITES[suite]
    except KeyError:
        raise UnknownSuiteError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}") from None
    return fn(seed=seed, **kwargs)
