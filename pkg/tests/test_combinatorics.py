import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from specnorm.combinatorics import (
    Partition,
    complete_bell,
    complete_homogeneous,
    compositions,
    enumerate_partitions,
    gamma,
    multinomial,
    partition_y,
)
from specnorm.errors import OutOfRangeError


def partition_count(d):
    """p(d) from the part-size recurrence."""
    table = [1] + [0] * d
    for part in range(1, d + 1):
        for total in range(part, d + 1):
            table[total] += table[total - part]
    return table[d]


def poly_mul(a, b, deg):
    out = [0] * (deg + 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b[: deg + 1 - i]):
            out[i + j] += x * y
    return out


def bell_by_series(x):
    """d! [t^d] exp(sum_j x_j t^j / j!) via the truncated exponential series."""
    d = len(x)
    S = [Fraction(0)] + [Fraction(x[j - 1]) / math.factorial(j) for j in range(1, d + 1)]
    total = [Fraction(1)] + [Fraction(0)] * d
    power = [Fraction(1)] + [Fraction(0)] * d
    for m in range(1, d + 1):
        power = poly_mul(power, S, d)
        total = [t + p / math.factorial(m) for t, p in zip(total, power)]
    return total[d] * math.factorial(d)


def h_by_series(lam, d):
    """[t^d] prod_i 1/(1 - lam_i t)."""
    series = [1.0] + [0.0] * d
    for li in lam:
        series = poly_mul(series, [li**k for k in range(d + 1)], d)
    return series[d]


def test_partition_examples():
    assert [p.parts for p in enumerate_partitions(1)] == [(1,)]
    assert [p.parts for p in enumerate_partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(enumerate_partitions(8)) == partition_count(8) == 22


@pytest.mark.parametrize("d", range(1, 21))
def test_partition_counts_and_invariants(d):
    parts = enumerate_partitions(d)
    assert len(parts) == partition_count(d)
    assert len(set(parts)) == len(parts)
    for p in parts:
        assert p.d == d
        assert sum(i * m for i, m in p.multiplicities.items()) == d
        assert list(p.parts) == sorted(p.parts, reverse=True)
    # reverse lexicographic
    assert [p.parts for p in parts] == sorted((p.parts for p in parts), reverse=True)


def test_partition_range():
    with pytest.raises(OutOfRangeError):
        enumerate_partitions(0)
    with pytest.raises(OutOfRangeError):
        enumerate_partitions(21)
    with pytest.raises(OutOfRangeError):
        Partition((1, 2))


@pytest.mark.parametrize("parts, y", [((2,), 2), ((1, 1), 2), ((2, 1, 1), 4), ((3, 3, 1), 72)])
def test_partition_y(parts, y):
    assert partition_y(parts) == y
    assert Partition(parts).y == y


@pytest.mark.parametrize("d", range(1, 13))
def test_exponential_formula_identities(d):
    parts = enumerate_partitions(d)
    # permutations by cycle type: sum d!/y_pi prod (pi_j - 1)! = d!
    assert sum(math.factorial(d) // p.y * math.prod(math.factorial(k - 1) for k in p) for p in parts) == math.factorial(d)
    # set partitions by block type: sum d!/y_pi x^len(pi) = B_d(x, ..., x)
    for x in (1, 2, 3):
        lhs = sum(Fraction(math.factorial(d), p.y) * x ** len(p) for p in parts)
        assert lhs == bell_by_series([x] * d)


def test_bell_examples():
    assert complete_bell([5]) == 5
    assert complete_bell([3, 4]) == 13 == bell_by_series([3, 4])
    assert complete_bell([1, 1, 1, 1]) == 15 == bell_by_series([1, 1, 1, 1])


def test_bell_four_expansion():
    import sympy as sp

    t = sp.symbols("t")
    xs = sp.symbols("x1:5")
    gen = sp.exp(sum(x * t**j / sp.factorial(j) for j, x in enumerate(xs, 1)))
    derived = sp.expand(sp.series(gen, t, 0, 5).removeO().coeff(t, 4) * sp.factorial(4))
    x1, x2, x3, x4 = xs
    assert sp.simplify(derived - (x1**4 + 6 * x1**2 * x2 + 4 * x1 * x3 + 3 * x2**2 + x4)) == 0
    rng = np.random.default_rng(1)
    for x in rng.normal(size=(100, 4)):
        a, b, c, e = x
        expected = a**4 + 6 * a**2 * b + 4 * a * c + 3 * b**2 + e
        assert abs(complete_bell(x) - expected) <= 1e-10 * (1 + abs(expected))


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=10))
def test_bell_matches_series(x):
    assert complete_bell(x) == pytest.approx(float(bell_by_series(x)), rel=1e-10, abs=1e-6)


def test_bell_range():
    with pytest.raises(OutOfRangeError):
        complete_bell([])
    with pytest.raises(OutOfRangeError):
        complete_bell([1.0] * 21)


def test_complete_homogeneous_examples():
    assert complete_homogeneous([1.0, -2.0, 3.5], 0) == 1
    assert complete_homogeneous([1, 1], 2) == 3
    assert complete_homogeneous([1, 2], 3) == 15 == h_by_series([1, 2], 3)


@settings(max_examples=80, deadline=None)
@given(
    lam=st.lists(st.floats(-2, 2), min_size=1, max_size=4),
    d=st.integers(0, 8),
)
def test_complete_homogeneous_matches_series(lam, d):
    expected = h_by_series(lam, d)
    assert complete_homogeneous(lam, d) == pytest.approx(expected, rel=1e-10, abs=1e-10)


def test_compositions_and_multinomial():
    comps = list(compositions(4, 3))
    assert len(comps) == math.comb(6, 2)
    assert len(set(comps)) == len(comps)
    assert all(sum(c) == 4 and min(c) >= 0 for c in comps)
    assert multinomial((2, 1, 1)) == 12
    assert sum(multinomial(c) for c in comps) == 3**4


def test_gamma():
    assert gamma(1) == 1
    assert gamma(5) == pytest.approx(24, rel=1e-12)
    assert gamma(1.5) == pytest.approx(math.sqrt(math.pi) / 2, rel=1e-12)
    for k in range(1, 20):
        assert gamma(k + 1) == pytest.approx(math.factorial(k), rel=1e-12)
    with pytest.raises(OutOfRangeError):
        gamma(0.5)
