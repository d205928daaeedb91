"""Command line behaviors, driven through main(argv).

Outputs go to pytest temp dirs or are captured from stdout; both the exit
code contract and byte determinism of the emitted files are covered.
"""
import dataclasses
import math

import numpy as np
import pytest

from weightseq import read_blocks, read_condition_report, read_sequence
from weightseq.cli import main
from weightseq.serialization import BlocksDocument, write_blocks, write_sequence

PI2_6 = math.pi ** 2 / 6.0

BUMPY_QUOTIENTS = [0.0, 3.0, 1.0, 4.0, 4.0, 4.0, 4.0, 4.0]


def write_bumpy(path):
    from weightseq import Unknown, from_quotients
    W = from_quotients(np.array(BUMPY_QUOTIENTS), Unknown, label="bumpy")
    path.write_text(write_sequence(W))
    return path


class TestConstruct:
    def test_descendant_files(self, tmp_path):
        ret = main(["construct", "--family", "gevrey:2:64",
                    "--what", "descendant", "--out", str(tmp_path)])
        assert ret == 0
        seq = read_sequence((tmp_path / "descendant.seq.txt").read_text())
        assert seq.horizon == 64
        assert seq.log_quotients[0] == 0.0
        report = (tmp_path / "descendant.report.txt").read_text()
        tau1_line = next(l for l in report.splitlines()
                         if l.startswith("tau1 "))
        lo, hi = (float(tok) for tok in tau1_line.split()[1:])
        assert lo <= 1.0 + PI2_6 <= hi
        sigma_row = [l for l in report.splitlines()
                     if l.startswith("63 ")][-1]
        assert float(sigma_row.split()[1]) == pytest.approx(
            1.3172462026384992, rel=1e-9)

    def test_out_directory_created(self, tmp_path):
        # --out may name a directory that does not exist yet.
        out = tmp_path / "fresh" / "nested"
        ret = main(["construct", "--family", "gevrey:2:64",
                    "--what", "descendant", "--out", str(out)])
        assert ret == 0
        assert (out / "descendant.seq.txt").exists()

    def test_optimal_rejects_quasianalytic(self, tmp_path, capsys):
        ret = main(["construct", "--family", "gevrey:1:64",
                    "--what", "optimal", "--out", str(tmp_path)])
        assert ret == 2
        err = capsys.readouterr().err
        assert err.startswith("error 2 Quasianalytic")

    def test_minorant_from_file(self, tmp_path):
        infile = write_bumpy(tmp_path / "bumpy.seq.txt")
        ret = main(["construct", "--in", str(infile), "--what", "minorant",
                    "--out", str(tmp_path)])
        assert ret == 0
        report = (tmp_path / "minorant.report.txt").read_text()
        assert "vertices 0 1 3 4 5 6 7 8" in report
        assert "boundary 7 8" in report
        seq = read_sequence((tmp_path / "minorant.seq.txt").read_text())
        want = np.array([0.0, 2.0, 2.0, 4.0, 4.0, 4.0, 4.0, 4.0])
        assert np.allclose(seq.log_quotients, want, rtol=0.0, atol=1e-12)

    def test_needs_a_source(self, capsys):
        ret = main(["construct", "--what", "descendant"])
        assert ret == 2
        assert "needs --family or --in" in capsys.readouterr().err


class TestCheck:
    def test_gamma1_holds_on_stdout(self, capsys):
        ret = main(["check", "--cond", "gamma1", "--family", "gevrey:2:64"])
        assert ret == 0
        doc = read_condition_report(capsys.readouterr().out)
        assert doc.state == "Holds"
        assert doc.bound.lo <= PI2_6 <= doc.bound.hi

    def test_nq_fails_on_factorials(self, capsys):
        ret = main(["check", "--cond", "nq", "--family", "gevrey:1:64"])
        assert ret == 0
        doc = read_condition_report(capsys.readouterr().out)
        assert doc.state == "Fails"

    def test_sv_on_constructed_optimal(self, tmp_path, capsys):
        assert main(["construct", "--family", "gevrey:2:128",
                     "--what", "optimal", "--out", str(tmp_path)]) == 0
        capsys.readouterr()
        ret = main(["check", "--cond", "sv",
                    "--M", str(tmp_path / "optimal.seq.txt"),
                    "--N", "gevrey:2:128"])
        assert ret == 0
        doc = read_condition_report(capsys.readouterr().out)
        assert doc.state == "Inconclusive"
        assert doc.bound.hi <= 1.01

    def test_lc_flags_bumpy(self, tmp_path, capsys):
        infile = write_bumpy(tmp_path / "bumpy.seq.txt")
        ret = main(["check", "--cond", "lc", "--in", str(infile)])
        assert ret == 0
        doc = read_condition_report(capsys.readouterr().out)
        assert doc.state == "Fails"
        assert doc.bound.lo == pytest.approx(2.0, rel=1e-12)

    def test_preceq_of_equal_pair(self, capsys):
        ret = main(["check", "--cond", "preceq",
                    "--M", "gevrey:2:64", "--N", "gevrey:2:64"])
        assert ret == 0
        doc = read_condition_report(capsys.readouterr().out)
        assert doc.bound.lo == 0.0 and doc.bound.hi == 0.0
        assert doc.witness == 1

    def test_mg_csv_output(self, capsys):
        ret = main(["check", "--cond", "mg", "--family", "gevrey:2:64",
                    "--format", "csv"])
        assert ret == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "p,lo,hi"
        assert len(lines) == 33
        lo = float(lines[1].split(",")[1])
        assert lo == pytest.approx(2.0 * math.log(2.0), rel=1e-12)

    def test_missing_file_is_io_error(self, tmp_path, capsys):
        ret = main(["check", "--cond", "gamma1",
                    "--in", str(tmp_path / "absent.seq.txt")])
        assert ret == 3
        assert capsys.readouterr().err.startswith("error 3")

    def test_malformed_file_is_io_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.seq.txt"
        bad.write_text("not a sequence document\n")
        ret = main(["check", "--cond", "gamma1", "--in", str(bad)])
        assert ret == 3
        assert "error 3 FormatError" in capsys.readouterr().err


class TestCompare:
    def test_equal_pair(self, capsys):
        ret = main(["compare", "--M", "gevrey:2:64", "--N", "gevrey:2:64"])
        assert ret == 0
        out = capsys.readouterr().out
        assert "defect_first_over_second 0 at 1" in out
        assert "defect_second_over_first 0 at 1" in out
        assert "trend_first_over_second steady" in out
        assert "almost_increasing_first 0 pair 1 1" in out

    def test_csv_gaps(self, capsys):
        ret = main(["compare", "--M", "gevrey:2:64", "--N", "gevrey:1:64",
                    "--format", "csv"])
        assert ret == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "p,log_root_diff"
        assert len(lines) == 65
        assert float(lines[64].split(",")[1]) == pytest.approx(
            math.lgamma(65.0) / 64.0, rel=1e-12)


class TestCounterexample:
    def test_generate_default(self, tmp_path):
        ret = main(["counterexample", "--out", str(tmp_path)])
        assert ret == 0
        seq = read_sequence((tmp_path / "counterexample.seq.txt").read_text())
        assert seq.horizon == 109
        doc = read_blocks((tmp_path / "counterexample.blocks.txt").read_text())
        assert [(b.p, b.q) for b in doc.blocks] == [(3, 5), (12, 23)]
        verify = (tmp_path / "counterexample.verify.txt").read_text()
        assert verify.splitlines()[0] == "weightseq-verify 1"
        assert "blocks 2" in verify

    def test_byte_determinism(self, tmp_path):
        d1 = tmp_path / "a"
        d2 = tmp_path / "b"
        d1.mkdir()
        d2.mkdir()
        assert main(["counterexample", "--out", str(d1)]) == 0
        assert main(["counterexample", "--out", str(d2)]) == 0
        for name in ("counterexample.seq.txt", "counterexample.blocks.txt",
                     "counterexample.verify.txt"):
            assert (d1 / name).read_bytes() == (d2 / name).read_bytes()

    def test_verify_tampered_blocks(self, tmp_path, capsys):
        assert main(["counterexample", "--out", str(tmp_path)]) == 0
        doc = read_blocks((tmp_path / "counterexample.blocks.txt").read_text())
        blocks = list(doc.blocks)
        blocks[1] = dataclasses.replace(
            blocks[1], log_C=blocks[1].log_C - math.log(2.0),
            C=blocks[1].C / 2.0)
        tampered = BlocksDocument(doc.requested, doc.halted, doc.halt_reason,
                                  tuple(blocks))
        bad = tmp_path / "tampered.blocks.txt"
        bad.write_text(write_blocks(tampered))
        ret = main(["counterexample", "--verify", str(bad),
                    "--sequence", str(tmp_path / "counterexample.seq.txt"),
                    "--out", str(tmp_path)])
        assert ret == 4
        err = capsys.readouterr().err
        assert "error 4 VerificationFailed" in err
        assert "which sequencecrequire" in err

    def test_deep_build_overflows_with_partials(self, tmp_path, capsys):
        ret = main(["counterexample", "--blocks", "50", "--out",
                    str(tmp_path)])
        assert ret == 5
        err = capsys.readouterr().err
        assert "error 5 OverflowHalt" in err
        assert "log N overflow entering block 29" in err
        doc = read_blocks((tmp_path / "counterexample.blocks.txt").read_text())
        assert doc.halted
        assert len(doc.blocks) == 28

    def test_bad_seed(self, capsys):
        ret = main(["counterexample", "--seed", "2,5"])
        assert ret == 2
        assert "error 2 ScheduleInvalid" in capsys.readouterr().err


class TestReport:
    def test_jet(self, capsys):
        ret = main(["report", "--family", "gevrey:2:64", "--what", "jet",
                    "--j", "4", "--K", "40"])
        assert ret == 0
        out = capsys.readouterr().out
        jet_line = next(l for l in out.splitlines() if l.startswith("jet "))
        _, j, K, lo, hi = jet_line.split()
        assert (j, K) == ("4", "40")
        assert float(lo) >= 2.0 * math.log(24.0)
        assert float(lo) <= float(hi)

    def test_omega_csv(self, capsys):
        ret = main(["report", "--family", "gevrey:1:64", "--what", "omega",
                    "--t-grid", "1:10:5", "--format", "csv"])
        assert ret == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "t,omega"
        vals = [float(l.split(",")[1]) for l in lines[1:]]
        assert len(vals) == 5
        assert vals == sorted(vals)
        assert vals[0] == 0.0

    def test_render_report_file_as_csv(self, tmp_path, capsys):
        out_file = tmp_path / "gamma1.report.txt"
        assert main(["check", "--cond", "gamma1", "--family", "gevrey:2:64",
                     "--out", str(out_file)]) == 0
        ret = main(["report", "--in", str(out_file), "--format", "csv"])
        assert ret == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "p,lo,hi"
        assert len(lines) == 65

    def test_kappa_needs_convergent_tail(self, capsys):
        ret = main(["report", "--family", "gevrey:1:64", "--what", "kappa",
                    "--t-grid", "2:4:3"])
        assert ret == 2
        assert "error 2 RemainderUnbounded" in capsys.readouterr().err

    def test_bad_t_grid(self, capsys):
        ret = main(["report", "--family", "gevrey:2:64", "--what", "omega",
                    "--t-grid", "nonsense"])
        assert ret == 2
        assert "error 2 ValueError" in capsys.readouterr().err
