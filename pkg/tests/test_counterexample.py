"""Block construction and its verifier.

The default two-block build is fully pinned: every recorded block field was
frozen from a reference run and is asserted to the last digit, so any drift
in the recurrences shows up here first.  Tampered and hand-crafted block
lists exercise the failure precedence of the verifier.
"""
import dataclasses
import math

import numpy as np
import pytest

from weightseq import (
    OverflowHalt,
    ScheduleInvalid,
    VerificationFailed,
    build_counterexample,
    log_factorial,
    verify_blocks,
)
from weightseq.counterexample import BlockRecord

LN2 = math.log(2.0)

BLOCK1 = dict(i=1, p=3, q=5, a=3.0, b=0.22722288243865593,
              log_C=-0.36024419214755754, log_A=-9.210340371976182,
              A=1.0e-4, log_nu_inner=2.4999987500162746e-06,
              log_nu_outer=1.0986147886668598, p_next=12)
BLOCK2 = dict(i=2, p=12, q=23, a=4.0, b=0.2616850124648864,
              log_C=1.3392474311963527, log_A=-0.031425125363061586,
              A=0.9690635120160526, log_nu_inner=4.649998925382297,
              log_nu_outer=6.036293286502188, p_next=109)


def assert_block_matches(blk, want):
    for name, value in want.items():
        got = getattr(blk, name)
        if isinstance(value, int):
            assert got == value, name
        else:
            assert got == pytest.approx(value, rel=1e-12), name


class TestDefaultBuild:
    def test_block_records(self, ce_default):
        result, _ = ce_default
        assert len(result.blocks) == 2
        assert_block_matches(result.blocks[0], BLOCK1)
        assert_block_matches(result.blocks[1], BLOCK2)

    def test_materialization(self, ce_default):
        result, _ = ce_default
        assert not result.halted
        assert result.requested == 2
        assert result.materialized_horizon == 109
        assert result.sequence.horizon == 109
        # seed run: quotients stay at 1 through p1 = 3
        assert np.all(result.sequence.log_quotients[:3] == 0.0)

    def test_runs_are_piecewise_constant(self, ce_default):
        result, _ = ce_default
        lq = result.sequence.log_quotients
        b1, b2 = result.blocks
        assert np.allclose(lq[3:5], b1.log_nu_inner, rtol=0.0, atol=1e-15)
        assert np.allclose(lq[5:12], b1.log_nu_outer, rtol=0.0, atol=1e-15)
        assert np.allclose(lq[12:23], b2.log_nu_inner, rtol=0.0, atol=1e-15)
        assert np.allclose(lq[23:109], b2.log_nu_outer, rtol=0.0, atol=1e-15)

    def test_deterministic(self, ce_default):
        result, _ = ce_default
        again = build_counterexample(2)
        assert again.blocks == result.blocks
        assert np.array_equal(again.sequence.log_quotients,
                              result.sequence.log_quotients)


class TestVerifyDefault:
    def test_continuation_rest(self, ce_default):
        _, report = ce_default
        assert report.continuation_rest == pytest.approx(
            0.8333312500036458, rel=1e-12)

    def test_notes(self, ce_default):
        _, report = ce_default
        assert report.notes == (
            "A_i < 1 at some block beyond the first",
            "airequirement fails as displayed; the alpha/beta targets "
            "are the operative bound",
        )

    def test_c_floors_sit_at_slack(self, ce_default):
        result, report = ce_default
        want = (-0.3602451921470575, 1.3392464311968526)
        for chk, blk, floor in zip(report.blocks, result.blocks, want):
            assert chk.c_floor_log == pytest.approx(floor, rel=1e-12)
            assert blk.log_C - chk.c_floor_log == pytest.approx(
                math.log1p(1e-6), rel=1e-6)

    def test_ansatz_holds(self, ce_default):
        _, report = ce_default
        for chk in report.blocks:
            assert chk.ansatz_rel_err <= 1e-9
            assert chk.junction_ok

    def test_profile_enclosure_second_block(self, ce_default):
        _, report = ce_default
        iv = report.blocks[1].profile_I
        assert iv.lo == pytest.approx(0.16102162672435474, rel=1e-12)
        assert iv.hi == pytest.approx(0.36935496005768809, rel=1e-12)
        # requirement (I): the profile at p_2 stays below 1
        assert iv.hi <= 1.0

    def test_requirement_two_clears_level(self, ce_default):
        result, report = ce_default
        for chk, blk in zip(report.blocks, result.blocks):
            assert chk.profile_II is not None
            assert chk.profile_II > blk.A

    def test_defect_enclosures(self, ce_default):
        _, report = ce_default
        d1, d2 = report.defect_through_block
        assert d1.lo == 0.0 and d1.hi == 0.0
        assert d2.lo == pytest.approx(0.10450416975727794, rel=1e-12)
        assert d2.hi == pytest.approx(0.21487737055745026, rel=1e-12)

    def test_d_excess(self, ce_default):
        _, report = ce_default
        assert report.blocks[0].d_excess_lo == pytest.approx(
            -0.8329742943128328, rel=1e-12)
        assert report.blocks[1].d_excess_lo == pytest.approx(
            0.08204415752209343, rel=1e-12)

    def test_log_ratio_strictly_increases(self, ce_default):
        _, report = ce_default
        r1, r2 = (chk.log_ratio for chk in report.blocks)
        assert r1 == pytest.approx(-1.4818238822476788, rel=1e-12)
        assert r2 == pytest.approx(-1.3406137409947467, rel=1e-12)
        assert r1 < r2

    def test_alpha_beta_targets(self, ce_default):
        _, report = ce_default
        chk1, chk2 = report.blocks
        assert chk1.alpha_target_ok is None and chk1.beta_target_ok is None
        assert chk2.alpha_target_ok is True and chk2.beta_target_ok is True
        assert not chk2.A_at_least_one


class TestDeeperBuilds:
    @pytest.mark.parametrize("n,horizon", [(3, 2660), (4, 199917),
                                           (5, 399833)])
    def test_build_and_verify(self, n, horizon):
        result = build_counterexample(n)
        assert len(result.blocks) == n
        assert result.materialized_horizon == horizon
        verify_blocks(result.sequence, result.blocks)

    def test_prefix_stable_under_depth(self, ce_default):
        result, _ = ce_default
        deeper = build_counterexample(3)
        assert deeper.blocks[:2] == result.blocks


class TestOverflow:
    def test_deep_build_halts_with_partial(self):
        with pytest.raises(OverflowHalt) as exc:
            build_counterexample(50)
        assert "log N overflow entering block 29" in str(exc.value)
        partial = exc.value.partial
        assert partial.halted
        assert len(partial.blocks) == 28
        verify_blocks(partial.sequence, partial.blocks)


class TestTampering:
    def test_halved_c_second_block(self, ce_default):
        result, _ = ce_default
        blocks = list(result.blocks)
        blocks[1] = dataclasses.replace(blocks[1],
                                        log_C=blocks[1].log_C - LN2,
                                        C=blocks[1].C / 2.0)
        with pytest.raises(VerificationFailed) as exc:
            verify_blocks(result.sequence, blocks)
        assert exc.value.block == 2
        assert exc.value.which == "sequencecrequire"

    def test_halved_c_first_block(self, ce_default):
        result, _ = ce_default
        blocks = list(result.blocks)
        blocks[0] = dataclasses.replace(blocks[0],
                                        log_C=blocks[0].log_C - LN2,
                                        C=blocks[0].C / 2.0)
        with pytest.raises(VerificationFailed) as exc:
            verify_blocks(result.sequence, blocks)
        assert exc.value.block == 1
        assert exc.value.which == "sequencecrequirebasic"


class TestCraftedBlock:
    def test_level_above_profile_fails_requirement_two(self, gevrey2_64):
        # log C solves the anchor identity on the Gevrey-2 data, so every
        # earlier check passes and the level A = 2 is the first to fail:
        # the profile at q = 5 sits near 1.1
        log_C = (2.0 * math.log(16.0) - log_factorial(5)
                 + (5.0 / 3.0) * log_factorial(3)) / 5.0
        assert log_C == pytest.approx(0.748790296748855, rel=1e-12)
        blk = BlockRecord(
            i=1, p=3, q=5, a=3.0, b=math.exp(LN2 / 5.0 - log_C),
            C=math.exp(log_C), A=2.0, log_A=LN2, log_C=log_C,
            log_nu_inner=math.log(16.0),
            log_nu_outer=math.log(16.0) + math.log(3.0), p_next=None)
        with pytest.raises(VerificationFailed) as exc:
            verify_blocks(gevrey2_64, [blk])
        assert exc.value.block == 1
        assert exc.value.which == "requirement (II)"


class TestLiteralSchedule:
    def test_two_blocks(self):
        result = build_counterexample(2, b_schedule=lambda j: float(j + 1))
        b1, b2 = result.blocks
        assert b1.log_A == pytest.approx(1.6645149420619387, rel=1e-12)
        assert b1.p_next == 82
        assert (b2.p, b2.q) == (82, 163)
        assert b2.log_C == pytest.approx(2.0403040457352035, rel=1e-12)
        assert b2.log_A == pytest.approx(511.64336250774005, rel=1e-12)
        assert b2.A == pytest.approx(1.599149400286003e+222, rel=1e-9)
        # the outer extent exists as an integer but dwarfs any horizon
        assert b2.p_next is not None and b2.p_next > 10 ** 200
        assert result.materialized_horizon == 163

    def test_verify_skips_unseen_extent(self):
        result = build_counterexample(2, b_schedule=lambda j: float(j + 1))
        report = verify_blocks(result.sequence, result.blocks)
        assert report.blocks[0].profile_II == pytest.approx(
            5.358029711011948, rel=1e-12)
        assert report.blocks[1].profile_II is None
        joined = "\n".join(report.notes)
        assert "beta target unchecked for block 2" in joined
        assert "requirement (II) unchecked for block 2" in joined
        assert len(report.notes) == 3


class TestScheduleValidation:
    def test_rejects_bad_schedules(self):
        with pytest.raises(ScheduleInvalid):
            build_counterexample(1)
        with pytest.raises(ScheduleInvalid):
            build_counterexample(2, seed=(2, 5))
        with pytest.raises(ScheduleInvalid):
            build_counterexample(2, seed=(3, 4))
        with pytest.raises(ScheduleInvalid):
            build_counterexample(2, a_schedule=lambda j: 3.0)
        with pytest.raises(ScheduleInvalid):
            build_counterexample(2, a_schedule=lambda j: 1.0)
        with pytest.raises(ScheduleInvalid):
            build_counterexample(2, b_schedule=lambda j: 0.0)
        with pytest.raises(ScheduleInvalid):
            build_counterexample(2, max_index=4)
