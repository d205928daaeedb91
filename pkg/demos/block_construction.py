"""Two-scale block construction and its verifier.

Blocks are laid out pair by pair; every closed-form requirement is then
re-checked from the materialized sequence, in logs, with exact integer
index bookkeeping. Tampering with a block is caught by name.
"""
import dataclasses
import math

from weightseq import build_counterexample, verify_blocks
from weightseq.errors import OverflowHalt, VerificationFailed

res = build_counterexample(3)
print("label:", res.sequence.label, "horizon:", res.sequence.horizon)
for blk in res.blocks:
    print(f"  block {blk.i}: p={blk.p} q={blk.q} a={blk.a} "
          f"b={blk.b:.6f} A={blk.A:.6g} next={blk.p_next}")

rep = verify_blocks(res.sequence, res.blocks)
print("verified", len(rep.blocks), "blocks, continuation rest",
      rep.continuation_rest)
for chk, dfb in zip(rep.blocks, rep.defect_through_block):
    print(f"  block {chk.i}: ansatz rel err {chk.ansatz_rel_err:.2e} "
          f"defect so far {dfb}")
for note in rep.notes:
    print("  note:", note)

# the defect trend is the point: it never shrinks and keeps rising
los = [iv.lo for iv in rep.defect_through_block]
his = [iv.hi for iv in rep.defect_through_block]
print("defect lower bounds nondecreasing:",
      all(a <= b for a, b in zip(los, los[1:])))
print("defect upper bounds strictly increase:",
      all(a < b for a, b in zip(his, his[1:])))

# a corrupted block fails verification with the offending check named
blocks = list(res.blocks)
blocks[1] = dataclasses.replace(blocks[1], log_C=blocks[1].log_C - math.log(2),
                                C=blocks[1].C / 2.0)
try:
    verify_blocks(res.sequence, tuple(blocks))
except VerificationFailed as exc:
    print("tampering caught: block", exc.block, "check", exc.which)

# very deep schedules halt cleanly once log N overflows, keeping the
# finished prefix
try:
    build_counterexample(50)
except OverflowHalt as exc:
    print("halt:", exc)
    print("finished blocks kept:", len(exc.partial.blocks))
