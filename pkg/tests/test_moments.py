"""Moment integration: divided differences, exact simplex moments, MC oracle.

The exact path is certified three ways: high-precision naive divided
differences (mpmath), closed-form values for the standard simplex, and the
seeded Monte Carlo estimator.
"""

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lpmink import geometry as geo, moments as mo
from lpmink.geometry import Body, Hyperplane

mpmath.mp.dps = 50


def naive_divided_difference(nodes, q):
    """Textbook recursive divided difference at 50 digits; distinct nodes only."""
    values = [mpmath.mpf(float(x)) for x in nodes]

    def rec(ns):
        if len(ns) == 1:
            return ns[0] ** q
        return (rec(ns[1:]) - rec(ns[:-1])) / (ns[-1] - ns[0])

    return float(rec(values))


def random_full_simplex(n, rng, low=-1.0, high=1.0):
    while True:
        verts = rng.uniform(low, high, (n + 1, n))
        if geo.affine_rank(verts) == n:
            return verts


# ---------------------------------------------------------------------------
# normalization constant


def test_pochhammer_reciprocal_values():
    assert mo.pochhammer_reciprocal(2.0, 3) == pytest.approx(1 / 60, rel=1e-15)
    assert mo.pochhammer_reciprocal(1.0, 1) == pytest.approx(0.5, rel=1e-15)
    assert mo.pochhammer_reciprocal(2.5, 3) == pytest.approx(1 / 86.625, rel=1e-15)
    assert mo.pochhammer_reciprocal(2.0, 0) == 1.0


def test_pochhammer_reciprocal_matches_gamma():
    for p in (1.3, 2.0, 3.7):
        for n in (1, 2, 3, 4, 6):
            expected = float(mpmath.gamma(p + 1) / mpmath.gamma(p + 1 + n))
            assert mo.pochhammer_reciprocal(p, n) == pytest.approx(expected, rel=1e-14)


# ---------------------------------------------------------------------------
# divided differences


def test_divided_difference_frozen_cases():
    # confluent expansion: contributions at 0 vanish, leaving the value at 1
    assert mo.divided_difference_power([0, 0, 0, 1], 5.5) == pytest.approx(1.0, rel=1e-13)
    assert mo.divided_difference_power([0, 1], 2.0) == pytest.approx(1.0, rel=1e-15)
    # two equal nodes: the derivative 3 t^2 at t = 1
    assert mo.divided_difference_power([1, 1], 3.0) == pytest.approx(3.0, rel=1e-15)
    assert mo.divided_difference_power([2.0], 3.0) == pytest.approx(8.0, rel=1e-15)


def test_divided_difference_against_mpmath():
    rng = np.random.default_rng(0)
    for _ in range(80):
        m = int(rng.integers(1, 6))
        nodes = np.sort(rng.uniform(0.0, 3.0, m + 1))
        if m and np.min(np.diff(nodes)) < 1e-3:
            continue
        q = float(rng.uniform(m + 0.5, m + 6.0))
        mine = mo.divided_difference_power(nodes, q)
        reference = naive_divided_difference(nodes, q)
        assert mine == pytest.approx(reference, rel=1e-11, abs=1e-13)


def test_divided_difference_confluent_limit():
    # clustered nodes agree with the separated-node limit computed at 50 digits
    q = 6.25
    merged = mo.divided_difference_power([0.0, 0.5, 0.5, 1.0], q)
    delta = 1e-12
    reference = naive_divided_difference([0.0, 0.5, 0.5 + delta, 1.0], q)
    assert merged == pytest.approx(reference, rel=1e-9)
    all_equal = mo.divided_difference_power([2.0, 2.0, 2.0], q)
    # second derivative of t^q at 2, halved
    assert all_equal == pytest.approx(q * (q - 1) * 2 ** (q - 2) / 2, rel=1e-13)


@settings(max_examples=50, deadline=None)
@given(
    seed=st.integers(0, 2**31 - 1),
    m=st.integers(1, 5),
    q_shift=st.floats(0.5, 5.0),
)
def test_divided_difference_scaling(seed, m, q_shift):
    # dd of t^q over s * nodes equals s^(q-m) times dd over the nodes
    rng = np.random.default_rng(seed)
    nodes = np.sort(rng.uniform(0.1, 2.0, m + 1))
    if np.min(np.diff(nodes)) < 1e-4:
        return
    q = m + q_shift
    s = float(rng.uniform(0.2, 3.0))
    base = mo.divided_difference_power(nodes, q)
    scaled = mo.divided_difference_power(s * nodes, q)
    assert scaled == pytest.approx(s ** (q - m) * base, rel=1e-9)


def test_divided_difference_errors():
    with pytest.raises(ValueError):
        mo.divided_difference_power([-0.5, 1.0], 4.0)
    with pytest.raises(ValueError):
        mo.divided_difference_power([0.0, 1.0, 2.0], 1.5)  # q too small
    with pytest.raises(ValueError):
        mo.divided_difference_power([], 2.0)


# ---------------------------------------------------------------------------
# exact simplex and body moments


def test_moment_standard_simplex_closed_form():
    for n, p in [(3, 1.5), (3, 2.0), (3, 3.0), (4, 2.0), (2, 2.5)]:
        body = geo.standard_simplex(n)
        expected = mo.pochhammer_reciprocal(p, n)
        for i in range(n):
            e = np.zeros(n)
            e[i] = 1.0
            assert mo.body_positive_moment(body, e, p) == pytest.approx(expected, rel=1e-12)
            assert mo.body_positive_moment(body, -e, p) == 0.0


def test_moment_scaled_simplex():
    p = 2.0
    body = geo.standard_simplex(3)
    base = mo.body_positive_moment(body, [1.0, 0, 0], p)
    for s in (0.5, 1.5, 2.0):
        scaled = mo.body_positive_moment(geo.dilate(body, s), [1.0, 0, 0], p)
        assert scaled == pytest.approx(s ** (3 + p) * base, rel=1e-12)


def test_moment_homogeneous_in_direction():
    rng = np.random.default_rng(2)
    p = 2.5
    body = Body(3, random_full_simplex(3, rng), (tuple(range(4)),))
    u = rng.standard_normal(3)
    base = mo.body_positive_moment(body, u, p)
    for s in (0.5, 2.0, 7.0):
        assert mo.body_positive_moment(body, s * u, p) == pytest.approx(
            s**p * base, rel=1e-10
        )


def test_moment_body_scaling_invariant():
    rng = np.random.default_rng(3)
    p = 1.8
    for _ in range(10):
        body = Body(3, random_full_simplex(3, rng), (tuple(range(4)),))
        u = rng.standard_normal(3)
        base = mo.body_positive_moment(body, u, p)
        for s in (0.5, 1.5):
            scaled = mo.body_positive_moment(geo.dilate(body, s), u, p)
            assert scaled == pytest.approx(s ** (3 + p) * base, rel=1e-9, abs=1e-15)


def test_moment_split_additive():
    rng = np.random.default_rng(4)
    p = 2.0
    for _ in range(20):
        n = int(rng.integers(2, 5))
        body = Body(n, random_full_simplex(n, rng), (tuple(range(n + 1)),))
        normal = rng.standard_normal(n)
        offset = float(normal @ body.vertices.mean(axis=0))
        plus, minus, cut = geo.clip(body, Hyperplane(normal, offset))
        u = rng.standard_normal(n)
        whole = mo.body_positive_moment(body, u, p)
        parts = mo.body_positive_moment(plus, u, p) + mo.body_positive_moment(minus, u, p)
        assert mo.body_positive_moment(cut, u, p) == 0.0  # measure zero
        assert parts == pytest.approx(whole, rel=1e-9, abs=1e-15)


def test_moment_reflection_duality():
    rng = np.random.default_rng(5)
    p = 2.2
    for _ in range(20):
        body = Body(3, random_full_simplex(3, rng), (tuple(range(4)),))
        u = rng.standard_normal(3)
        lhs = mo.body_positive_moment(body, -u, p)
        rhs = mo.body_positive_moment(geo.reflect(body), u, p)
        assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-16)


def test_moment_lower_dimensional_body_is_zero():
    body = geo.probability_simplex(3)
    assert mo.body_positive_moment(body, [1.0, 1.0, 1.0], 2.0) == 0.0
    assert mo.body_positive_moment(geo.unit_segment(3), [1.0, 0, 0], 2.0) == 0.0


def test_simplex_moment_errors():
    with pytest.raises(ValueError):
        mo.simplex_positive_moment(np.zeros((3, 3)), [1.0, 0, 0], 2.0)  # wrong count
    degenerate = np.array([[0.0, 0], [1.0, 0], [2.0, 0]])
    with pytest.raises(ValueError):
        mo.simplex_positive_moment(degenerate, [1.0, 0], 2.0)
    with pytest.raises(ValueError):
        mo.body_positive_moment(geo.standard_simplex(3), [1.0, 0, 0], 1.0)  # p too small
    with pytest.raises(ValueError):
        mo.body_positive_moment(geo.minkowski_sum(geo.unit_segment(2), geo.unit_segment(2)),
                                [1.0, 0], 2.0)  # no triangulation


# ---------------------------------------------------------------------------
# Monte Carlo oracle


def test_monte_carlo_matches_exact():
    rng = np.random.default_rng(6)
    checked = 0
    while checked < 8:
        n = int(rng.integers(2, 5))
        verts = random_full_simplex(n, rng)
        body = Body(n, verts, (tuple(range(n + 1)),))
        u = rng.standard_normal(n)
        p = float(rng.uniform(1.1, 4.0))
        exact = mo.body_positive_moment(body, u, p)
        estimate = mo.monte_carlo_positive_moment(body, u, p, 200_000, 100 + checked)
        assert abs(exact - estimate.value) <= 3.5 * max(estimate.stderr, 1e-15)
        checked += 1


def test_monte_carlo_known_value():
    body = geo.standard_simplex(3)
    estimate = mo.monte_carlo_positive_moment(body, [1.0, 0, 0], 2.0, 1_000_000, 7)
    assert abs(estimate.value - 1 / 60) <= 3.5 * estimate.stderr


def test_monte_carlo_zero_integrand():
    body = geo.standard_simplex(3)
    estimate = mo.monte_carlo_positive_moment(body, [-1.0, 0, 0], 2.0, 10_000, 1)
    assert estimate.value == 0.0 and estimate.stderr == 0.0


def test_monte_carlo_deterministic():
    body = geo.standard_simplex(3)
    a = mo.monte_carlo_positive_moment(body, [1.0, 2.0, -0.5], 2.0, 50_000, 11)
    b = mo.monte_carlo_positive_moment(body, [1.0, 2.0, -0.5], 2.0, 50_000, 11)
    assert a == b


def test_monte_carlo_degenerate_body():
    estimate = mo.monte_carlo_positive_moment(geo.probability_simplex(3), [1.0, 0, 0], 2.0, 5_000, 3)
    assert estimate.value == 0.0 and estimate.stderr == 0.0


def test_monte_carlo_sample_floor():
    with pytest.raises(ValueError):
        mo.monte_carlo_positive_moment(geo.standard_simplex(2), [1.0, 0], 2.0, 10, 0)
