"""Driving the command line from python.

Same entry point the console script uses; every command is a plain
argv list and the exit code comes back as an int.
"""
import pathlib
import tempfile

from weightseq.cli import main

out = pathlib.Path(tempfile.mkdtemp(prefix="weightseq-tour-"))
print("writing into", out)

# condition report straight to a file
rc = main(["check", "--cond", "gamma1", "--family", "gevrey:2:128",
           "--out", str(out / "gamma1.report.txt")])
print("check gamma1 ->", rc)
print((out / "gamma1.report.txt").read_text().splitlines()[:6])

# constructions write a sequence file and a companion report
rc = main(["construct", "--family", "gevrey:2:128", "--what", "descendant",
           "--out", str(out)])
print("construct descendant ->", rc,
      sorted(p.name for p in out.glob("descendant.*")))

# the block construction drops three files: sequence, blocks, verify log
rc = main(["counterexample", "--blocks", "2", "--out", str(out)])
print("counterexample ->", rc,
      sorted(p.name for p in out.glob("counterexample.*")))

# and everything re-verifies from the files alone
rc = main(["counterexample",
           "--verify", str(out / "counterexample.blocks.txt"),
           "--sequence", str(out / "counterexample.seq.txt"),
           "--out", str(out)])
print("re-verify from disk ->", rc)

# csv renderings for anything tabular
rc = main(["report", "--in", str(out / "gamma1.report.txt"),
           "--format", "csv"])
print("csv render ->", rc)
