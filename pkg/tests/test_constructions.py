"""Comparison-sequence constructions.

For Gevrey-2 input the descendant data has closed-form anchors: tau_1
encloses 1 + pi^2/6 and sigma_p / p^2 approaches (1 + pi^2/6) / 2 from
below.  The optimal sequence on the same input collapses its minimizing
index to j = p - 1, which gives a one-line formula to check the assembly
against.
"""
import math

import numpy as np
import pytest

from weightseq import (
    NotLogConvex,
    Quasianalytic,
    TailUnknown,
    Unknown,
    check_SV_ramified,
    descendant,
    from_quotients,
    gevrey,
    is_log_convex,
    log_convex_minorant,
    modified_descendant,
    optimal_sequence,
    ramified_descendant,
    ramified_optimal,
    ramified_root,
    tail_sum,
)

LIMIT = (1.0 + math.pi ** 2 / 6.0) / 2.0


def bumpy():
    logq = np.array([0.0, 3.0, 1.0, 4.0, 4.0, 4.0, 4.0, 4.0])
    return from_quotients(logq, Unknown, label="bumpy")


class TestDescendant:
    def test_tau1_encloses_limit(self, gevrey2_64):
        res = descendant(gevrey2_64)
        assert res.tau1.contains(1.0 + math.pi ** 2 / 6.0)
        assert res.tau1.width < 1e-3

    def test_normalized_and_log_convex(self, gevrey2_64):
        seq = descendant(gevrey2_64).sequence
        assert seq.log_quotients[0] == 0.0
        assert np.all(seq.log_quotients >= -1e-12)
        assert is_log_convex(seq)

    def test_sigma_tracks_p_squared(self, gevrey2_64):
        seq = descendant(gevrey2_64).sequence
        ratio = math.exp(seq.log_quotients[62]) / 63.0 ** 2
        assert ratio == pytest.approx(1.3172462026384992, rel=1e-9)
        assert ratio < LIMIT

    def test_quotient_gap_stays_small(self, gevrey2_64):
        seq = descendant(gevrey2_64).sequence
        gap = float(np.max(np.abs(seq.log_quotients
                                  - gevrey2_64.log_quotients)))
        assert gap == pytest.approx(0.2756062801157739, rel=1e-9)

    def test_rejects_unusable_input(self, gevrey1_64, ones_64):
        with pytest.raises(Quasianalytic):
            descendant(gevrey1_64)
        with pytest.raises(TailUnknown):
            descendant(ones_64)
        with pytest.raises(NotLogConvex):
            descendant(bumpy())


class TestModifiedDescendant:
    def test_label_and_prefix(self, gevrey2_256):
        S = modified_descendant(gevrey2_256)
        assert S.label == "modified-descendant(C=2,p_C=2)"
        assert S.log_quotients[0] == 0.0

    def test_dominated_by_input(self, gevrey2_256):
        S = modified_descendant(gevrey2_256)
        assert np.all(S.log_quotients <= gevrey2_256.log_quotients + 1e-12)
        assert np.all(S.log_terms() <= gevrey2_256.log_terms() + 1e-12)

    def test_log_convex(self, gevrey2_256):
        assert is_log_convex(modified_descendant(gevrey2_256))


class TestOptimalSequence:
    def test_argmin_collapses_for_gevrey(self, gevrey2_64):
        res = optimal_sequence(gevrey2_64, 1, 2.0)
        ps = np.arange(1, 65)
        assert np.array_equal(res.argmin[1:], ps - 1)

    def test_closed_form_assembly(self, gevrey2_64):
        res = optimal_sequence(gevrey2_64, 1, 2.0)
        for p in (1, 2, 9, 40, 64):
            T = tail_sum(gevrey2_64, p)
            lnT_mid = 0.5 * (math.log(T.lo) + math.log(T.hi))
            want = (math.log(2.0) + math.log(p) - lnT_mid
                    + gevrey2_64.log_term(p - 1))
            assert res.sequence.log_term(p) == pytest.approx(want, rel=1e-9)

    def test_argmin_nondecreasing(self, gevrey2_256):
        res = optimal_sequence(gevrey2_256)
        assert np.all(np.diff(res.argmin[1:]) >= 0)

    def test_shift_scales_terms(self, gevrey2_64):
        base = optimal_sequence(gevrey2_64, 1, 2.0).sequence
        shifted = optimal_sequence(gevrey2_64, 3, 2.0).sequence
        ps = np.arange(65)
        want = base.log_terms() + ps * math.log(3.0)
        assert np.allclose(shifted.log_terms(), want, rtol=0.0, atol=1e-9)

    def test_rejects_bad_parameters(self, gevrey2_64, gevrey1_64, ones_64):
        with pytest.raises(ValueError):
            optimal_sequence(gevrey2_64, 1, 0.5)
        with pytest.raises(ValueError):
            optimal_sequence(gevrey2_64, 0)
        with pytest.raises(Quasianalytic):
            optimal_sequence(gevrey1_64)
        with pytest.raises(TailUnknown):
            optimal_sequence(ones_64)
        with pytest.raises(NotLogConvex):
            optimal_sequence(bumpy())


class TestLogConvexMinorant:
    def test_log_convex_input_is_fixed(self, gevrey2_64):
        res = log_convex_minorant(gevrey2_64)
        assert np.array_equal(res.log_terms, gevrey2_64.log_terms())
        assert res.vertices == tuple(range(65))
        assert res.boundary == (63, 64)

    def test_bumpy_hull(self):
        W = bumpy()
        res = log_convex_minorant(W)
        y = W.log_terms()
        # the single hump at x = 2 is bridged by the chord from 1 to 3
        want = y.copy()
        want[2] = 2.0
        assert np.allclose(res.log_terms, want, rtol=0.0, atol=1e-12)
        assert res.vertices == (0, 1, 3, 4, 5, 6, 7, 8)
        assert np.all(res.log_terms <= y + 1e-12)

    def test_envelope_is_convex(self):
        res = log_convex_minorant(bumpy())
        assert np.all(np.diff(res.log_terms, 2) >= -1e-12)

    def test_p_max_window(self, gevrey2_64):
        res = log_convex_minorant(gevrey2_64, p_max=16)
        assert res.log_terms.shape == (17,)
        with pytest.raises(ValueError):
            log_convex_minorant(gevrey2_64, p_max=65)


class TestRamified:
    def test_root_of_gevrey2_is_gevrey1(self, gevrey2_64, gevrey1_64):
        root = ramified_root(gevrey2_64, 2.0)
        assert np.allclose(root.log_quotients, gevrey1_64.log_quotients,
                           rtol=0.0, atol=1e-12)
        assert root.tail.s == 1.0

    def test_r_one_is_identity(self, gevrey2_64):
        L1 = ramified_optimal(gevrey2_64, 1.0)
        L2 = optimal_sequence(gevrey2_64).sequence
        assert np.allclose(L1.log_terms(), L2.log_terms(), rtol=0.0,
                           atol=1e-12)

    def test_ramified_optimal_profile_near_one(self):
        g4 = gevrey(4, 64)
        L = ramified_optimal(g4, 2.0)
        rep = check_SV_ramified(L, g4, 2.0, 1)
        assert rep.running_sup.hi <= 1.02

    def test_ramified_descendant_shape(self):
        g4 = gevrey(4, 64)
        D = ramified_descendant(g4, 2.0)
        assert is_log_convex(D)
        assert D.log_quotients[0] == 0.0

    def test_root_must_stay_nonquasianalytic(self, gevrey2_64):
        with pytest.raises(Quasianalytic):
            ramified_descendant(gevrey2_64, 2.0)
