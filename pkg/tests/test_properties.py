"""Randomized invariants.

Each property is checked against either an algebraic identity or a
brute-force reference computed inline, never against the tested code.
"""
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weightseq import Unknown, from_quotients, gevrey
from weightseq.conditions import (almost_increasing_defect, lambda_ps,
                                  preceq_defect)
from weightseq.serialization import read_sequence, write_sequence
from weightseq.weights import recover_sequence

G2_128 = gevrey(2.0, 128)


def close(x):
    return pytest.approx(x, rel=1e-9, abs=1e-9)


def quotient_arrays(min_size=8, max_size=32):
    """Finite quotient arrays with a normalized first entry."""
    return st.lists(
        st.floats(-5.0, 5.0, allow_nan=False, width=64),
        min_size=min_size, max_size=max_size,
    ).map(lambda xs: np.array([abs(xs[0])] + xs[1:], dtype=float))


@given(quotient_arrays())
@settings(max_examples=50, deadline=None)
def test_terms_telescope(q):
    W = from_quotients(q, Unknown, label="prop")
    want = np.concatenate([[0.0], np.cumsum(q)])
    assert np.allclose(W.log_terms(), want, rtol=0.0, atol=1e-12)
    assert W.log_term(0) == 0.0
    assert W.log_term(W.horizon) == W.log_terms()[-1]


@given(quotient_arrays(), st.floats(0.5, 3.0, allow_nan=False))
@settings(max_examples=50, deadline=None)
def test_power_scales_terms(q, r):
    W = from_quotients(q, Unknown, label="prop")
    V = W.power(r)
    assert np.allclose(V.log_terms(), r * W.log_terms(),
                       rtol=1e-12, atol=1e-9)
    assert np.allclose(V.log_quotients, r * W.log_quotients,
                       rtol=1e-12, atol=1e-9)


@given(st.floats(1.0, 3.0, allow_nan=False))
@settings(max_examples=20, deadline=None)
def test_power_transforms_growth_model(r):
    assert G2_128.power(r).tail.s == 2.0 * r


@given(quotient_arrays(), st.floats(0.25, 4.0, allow_nan=False))
@settings(max_examples=50, deadline=None)
def test_rescale_shifts_uniformly(q, c):
    W = from_quotients(q, Unknown, label="prop")
    V = W.geometric_rescale(c, strict=False)
    assert np.allclose(V.log_quotients, W.log_quotients - math.log(c),
                       rtol=0.0, atol=1e-12)
    # Subtracting a linear ramp from the terms leaves second differences
    # of the term sequence unchanged.
    d2 = np.diff(W.log_quotients)
    e2 = np.diff(V.log_quotients)
    assert np.allclose(d2, e2, rtol=0.0, atol=1e-12)


@given(quotient_arrays(), st.floats(0.25, 4.0, allow_nan=False))
@settings(max_examples=50, deadline=None)
def test_rescale_pair_defects(q, c):
    W = from_quotients(q, Unknown, label="prop")
    V = W.geometric_rescale(c, strict=False)
    forward = preceq_defect(W, V)
    backward = preceq_defect(V, W)
    assert forward.defect == close(math.log(c))
    assert backward.defect == close(-math.log(c))


@given(quotient_arrays())
@settings(max_examples=50, deadline=None)
def test_serialization_round_trip(q):
    W = from_quotients(q, Unknown, label="prop")
    text = write_sequence(W)
    V = read_sequence(text)
    assert np.array_equal(V.log_quotients, W.log_quotients)
    assert V.label == W.label
    assert write_sequence(V) == text


@given(quotient_arrays(min_size=8, max_size=16),
       quotient_arrays(min_size=8, max_size=16),
       st.integers(1, 8),
       st.floats(1.0, 3.0, allow_nan=False),
       st.floats(1.0, 2.0, allow_nan=False))
@settings(max_examples=50, deadline=None)
def test_lambda_power_identity(qm, qn, p, s, r):
    M = from_quotients(qm, Unknown, label="m")
    N = from_quotients(qn, Unknown, label="n")
    lam = lambda_ps(M, N, p, s)
    scaled = lambda_ps(M.power(r), N.power(r), p, s ** r)
    assert scaled == close(r * lam)


@given(st.lists(st.floats(-10.0, 10.0, allow_nan=False, width=64),
                min_size=1, max_size=40))
@settings(max_examples=100, deadline=None)
def test_almost_increasing_matches_brute_force(xs):
    arr = np.array(xs, dtype=float)
    res = almost_increasing_defect(arr)
    brute = 0.0
    for i in range(len(xs)):
        for j in range(i):
            brute = max(brute, xs[j] - xs[i])
    assert res.defect == close(brute)
    if res.defect > 0.0:
        j, i = res.pair
        assert arr[j - 1] - arr[i - 1] == close(res.defect)


@given(st.lists(st.floats(-10.0, 10.0, allow_nan=False, width=64),
                min_size=1, max_size=40).map(sorted))
@settings(max_examples=50, deadline=None)
def test_almost_increasing_zero_on_sorted(xs):
    res = almost_increasing_defect(np.array(xs, dtype=float))
    assert res.defect == 0.0


@given(st.floats(0.5, 1e4, allow_nan=False),
       st.floats(0.5, 1e4, allow_nan=False))
@settings(max_examples=50, deadline=None)
def test_weight_monotone_in_argument(t1, t2):
    from weightseq.weights import omega
    lo, hi = sorted((t1, t2))
    a = omega(G2_128, lo)
    b = omega(G2_128, hi)
    assert 0.0 <= a <= b


@given(st.lists(st.floats(0.0, 5.0, allow_nan=False, width=64),
                min_size=8, max_size=16).map(np.array))
@settings(max_examples=30, deadline=None)
def test_recovered_terms_are_the_convex_minorant(q):
    # Nonnegative quotients keep the terms nondecreasing; decreasing
    # stretches are invisible through the weight, which is zero below 1.
    W = from_quotients(q, Unknown, label="prop")
    lt = W.log_terms()
    n = W.horizon
    rec = np.array([recover_sequence(W, p) for p in range(n + 1)])
    assert rec[0] == 0.0
    env = lt.copy()
    for p in range(n + 1):
        for i in range(p):
            for j in range(p + 1, n + 1):
                chord = lt[i] + (lt[j] - lt[i]) * (p - i) / (j - i)
                env[p] = min(env[p], chord)
    assert np.allclose(rec, env, rtol=1e-9, atol=1e-8)
    assert np.all(np.diff(rec, n=2) >= -1e-9)
