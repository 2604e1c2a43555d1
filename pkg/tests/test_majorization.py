import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from specnorm.errors import (
    DimensionMismatchError,
    NoPerfectMatchingError,
    NotMajorizedError,
    OutOfRangeError,
)
from specnorm.majorization import (
    DoublyStochastic,
    birkhoff_decompose,
    hlp_transfer,
    ky_fan_check,
    majorization_pair_generator,
    majorizes,
)
from specnorm.linalg import random_hermitian
import specnorm.majorization as majorization

SWAP = np.array([[0.5, 0.5], [0.5, 0.5]])


def test_majorizes_examples():
    assert majorizes([1, 1], [2, 0])
    assert not majorizes([2, 0], [1, 1])
    assert majorizes([3, -1, 0.5], [3, -1, 0.5])
    assert majorizes([0, 2], [2, 0])  # rearrangement invariant
    assert not majorizes([1, 1], [2, 1])  # totals differ
    with pytest.raises(DimensionMismatchError):
        majorizes([1, 2], [1, 2, 3])


def test_hlp_examples():
    np.testing.assert_allclose(hlp_transfer([1, 1], [2, 0]).entries, SWAP)
    np.testing.assert_allclose(hlp_transfer([3, 1, 2], [3, 1, 2]).entries, np.eye(3))
    D = hlp_transfer([2, 1, 1], [2, 2, 0])
    np.testing.assert_allclose(D.entries @ [2, 2, 0], [2, 1, 1], atol=1e-12)
    with pytest.raises(NotMajorizedError):
        hlp_transfer([2, 0], [1, 1])
    with pytest.raises(DimensionMismatchError):
        hlp_transfer([1], [1, 0])


@settings(max_examples=100, deadline=None)
@given(n=st.integers(2, 8), seed=st.integers(0, 2**31 - 1))
def test_hlp_transfer_contract(n, seed):
    x, y = majorization_pair_generator(n, seed)
    D = hlp_transfer(x, y)
    np.testing.assert_allclose(D.entries @ np.sort(y)[::-1], np.sort(x)[::-1], atol=1e-9)
    assert D.entries.min() >= 0


def test_doubly_stochastic_validation():
    with pytest.raises(OutOfRangeError):
        DoublyStochastic([[1.0, 0.0], [0.5, 0.5]])
    with pytest.raises(OutOfRangeError):
        DoublyStochastic([[1.1, -0.1], [-0.1, 1.1]])
    with pytest.raises(DimensionMismatchError):
        DoublyStochastic(np.ones((2, 3)) / 3)
    D = DoublyStochastic([[1 + 1e-15, -1e-15], [-1e-15, 1 + 1e-15]])
    assert D.entries.min() == 0


def test_birkhoff_examples():
    dec = birkhoff_decompose(np.eye(3))
    assert [(t.coefficient, t.permutation) for t in dec] == [(1.0, (0, 1, 2))]
    dec = birkhoff_decompose(SWAP)
    assert sorted((t.coefficient, t.permutation) for t in dec) == [(0.5, (0, 1)), (0.5, (1, 0))]


@pytest.mark.parametrize("seed", range(20))
def test_birkhoff_from_known_permutations(seed):
    rng = np.random.default_rng(seed)
    n = 4
    weights = rng.dirichlet(np.ones(5))
    D = sum(w * np.eye(n)[rng.permutation(n)] for w in weights)
    dec = birkhoff_decompose(D)
    assert len(dec) <= n * n - n + 1
    assert all(t.coefficient >= 0 for t in dec)
    assert sum(t.coefficient for t in dec) == pytest.approx(1, abs=1e-10)
    np.testing.assert_allclose(dec.reconstruct(), D, atol=1e-10)
    for t in dec:
        assert sorted(t.permutation) == list(range(n))


@settings(max_examples=60, deadline=None)
@given(n=st.integers(2, 9), seed=st.integers(0, 2**31 - 1))
def test_birkhoff_term_bound_on_dense_inputs(n, seed):
    M = np.random.default_rng(seed).uniform(0.01, 1, (n, n))
    D = majorization.sinkhorn(M, 2000)
    dec = birkhoff_decompose(D)
    assert len(dec) <= n * n - n + 1
    np.testing.assert_allclose(dec.reconstruct(), D, atol=1e-9)


def test_birkhoff_without_matching(monkeypatch):
    monkeypatch.setattr(majorization, "_perfect_matching", lambda R: (_ for _ in ()).throw(NoPerfectMatchingError("x")))
    with pytest.raises(NoPerfectMatchingError):
        birkhoff_decompose(SWAP)


def test_ky_fan_examples():
    A = random_hermitian(3, 1)
    assert ky_fan_check(A, np.zeros((3, 3)))
    assert ky_fan_check(np.diag([1.0, 0.0]), [[0, 1], [1, 0]])
    with pytest.raises(DimensionMismatchError):
        ky_fan_check(np.eye(2), np.eye(3))


@pytest.mark.parametrize("seed", range(50))
def test_ky_fan_and_chain(seed):
    n = 1 + seed % 6
    A, B = random_hermitian(n, 2 * seed), random_hermitian(n, 2 * seed + 1)
    assert ky_fan_check(A, B)
    target = (A + B).eigenvalues
    source = A.eigenvalues + B.eigenvalues
    dec = birkhoff_decompose(hlp_transfer(target, source))
    assert len(dec) <= n * n - n + 1
    np.testing.assert_allclose(dec.apply(source), target, atol=1e-7)


def test_generator_contract():
    for seed in range(200):
        x, y = majorization_pair_generator(2 + seed % 5, seed)
        assert majorizes(x, y)
        assert x.sum() == pytest.approx(y.sum(), abs=1e-10)
    # n = 2: x is a convex combination of y and its swap
    for seed in range(50):
        x, y = majorization_pair_generator(2, seed)
        t = (x[0] - y[1]) / (y[0] - y[1])
        assert -1e-12 <= t <= 1 + 1e-12
        np.testing.assert_allclose(x, [[t, 1 - t], [1 - t, t]] @ y, atol=1e-12)
    with pytest.raises(OutOfRangeError):
        majorization_pair_generator(1, 0)
