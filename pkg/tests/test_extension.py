import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from specnorm.combinatorics import Partition, enumerate_partitions
from specnorm.distributions import Bernoulli, Exponential, Normal, Pareto
from specnorm.errors import InconsistencyError, MomentDoesNotExistError, OddExponentError, OutOfRangeError
from specnorm.extension import adjoint_placements, norm_extended, trace_T
from specnorm.hermitian import norm_exact_partition
from specnorm.linalg import random_complex, random_hermitian, random_unitary

import specnorm.extension as extension

N = np.array([[0, 1], [0, 0]], dtype=complex)
DISTS = [Normal(1, 2), Exponential(), Bernoulli(0.3)]


def ten_term(Z):
    """||Z||^4 for standard exponential entries, written out term by term."""
    S = Z.conj().T
    tr = np.trace
    return (
        tr(Z) ** 2 * tr(S) ** 2
        + tr(S) ** 2 * tr(Z @ Z)
        + 4 * tr(Z) * tr(S) * tr(S @ Z)
        + 2 * tr(S @ Z) ** 2
        + tr(Z) ** 2 * tr(S @ S)
        + tr(Z @ Z) * tr(S @ S)
        + 4 * tr(S) * tr(S @ Z @ Z)
        + 4 * tr(Z) * tr(S @ S @ Z)
        + 2 * tr(S @ Z @ S @ Z)
        + 4 * tr(S @ S @ Z @ Z)
    ).real / 24


def test_adjoint_placements():
    masks = adjoint_placements(4)
    assert len(masks) == 6
    assert all(sum(m) == 2 and len(m) == 4 for m in masks)
    assert len(set(masks)) == 6
    assert len(adjoint_placements(12)) == math.comb(12, 6)


def test_trace_T_examples():
    assert trace_T((2,), N) == pytest.approx(1.0)
    assert trace_T((1, 1), N) == 0
    A = random_hermitian(3, 4)
    assert trace_T(Partition((2,)), A.matrix) == pytest.approx(np.sum(A.eigenvalues**2))


def test_trace_T_order_checks():
    with pytest.raises(OddExponentError):
        trace_T((3,), N)
    with pytest.raises(OutOfRangeError):
        trace_T((14,), N)


@pytest.mark.parametrize("seed", range(8))
def test_trace_T_is_power_sum_product_on_hermitian(seed):
    A = random_hermitian(1 + seed % 4, seed)
    lam = A.eigenvalues
    for d in (2, 4, 6):
        for pi in enumerate_partitions(d):
            expected = math.prod(np.sum(lam**k) for k in pi.parts)
            assert trace_T(pi, A.matrix) == pytest.approx(expected, rel=1e-9, abs=1e-9)


def test_norm_extended_examples():
    assert norm_extended(N, Normal(0, 1), 2) == pytest.approx(1 / math.sqrt(2))
    assert norm_extended(np.zeros((3, 3)), Exponential(), 4) == 0
    with pytest.raises(OddExponentError):
        norm_extended(N, Normal(), 3)
    with pytest.raises(MomentDoesNotExistError):
        norm_extended(N, Pareto(3, 1), 4)


@pytest.mark.parametrize("seed", range(10))
def test_normal_d2_closed_form(seed):
    # ||Z||^2 = (mu^2 |tr Z|^2 + sigma^2 tr Z*Z) / 2
    Z = random_complex(1 + seed % 4, seed)
    mu, sigma = 1.3, 0.7
    expected = (mu**2 * abs(np.trace(Z)) ** 2 + sigma**2 * np.trace(Z.conj().T @ Z).real) / 2
    assert norm_extended(Z, Normal(mu, sigma), 2) ** 2 == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("seed", range(20))
def test_exponential_d4_ten_terms(seed):
    Z = random_complex(1 + seed % 4, 1000 + seed)
    assert norm_extended(Z, Exponential(), 4) ** 4 == pytest.approx(ten_term(Z), rel=1e-9)


@pytest.mark.parametrize("seed", range(10))
def test_restriction_to_hermitian(seed):
    A = random_hermitian(1 + seed % 4, seed)
    for dist, d in itertools.product(DISTS, (2, 4, 6)):
        assert norm_extended(A.matrix, dist, d) == pytest.approx(norm_exact_partition(A, dist, d), rel=1e-9)


def test_imaginary_part_guard(monkeypatch):
    class Skewed:
        def __call__(self, word):
            return 1j if word[0] else 1.0

    pi = Partition((2,))
    monkeypatch.setattr(extension, "_WordTraces", lambda Z: Skewed())
    with pytest.raises(InconsistencyError):
        trace_T(pi, N)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**31 - 1), d=st.sampled_from([2, 4, 6]))
def test_axioms_on_complex_matrices(seed, d):
    n = 1 + seed % 4
    Z, W = random_complex(n, seed), random_complex(n, seed + 1)
    U = random_unitary(n, seed + 2)
    c = complex(np.cos(seed), np.sin(seed)) * (1 + seed % 3)
    for dist in DISTS:
        f = lambda M: norm_extended(M, dist, d)  # noqa: E731
        a = f(Z)
        assert a > 0
        assert f(c * Z) == pytest.approx(abs(c) * a, rel=1e-10)
        assert f(Z + W) <= a + f(W) + 1e-10
        assert f(U.conj().T @ Z @ U) == pytest.approx(a, rel=1e-8)
