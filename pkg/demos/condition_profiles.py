"""Condition checks and their reports.

Each check returns a profile of enclosures, a running sup and a three
valued verdict. Nothing is ever silently clamped; when the tail model
cannot settle a question the verdict says so.
"""
from weightseq import (check_SV, check_gamma1, check_mg, gevrey,
                       optimal_sequence, preceq_defect)

g15 = gevrey(1.5, 256)
g1 = gevrey(1, 256)

rep = check_gamma1(g15)
print(rep.name, rep.verdict.state, "sup", rep.running_sup)
# the model extends the profile beyond the stored horizon
print("  beyond-band:", rep.verdict.bound)

rep = check_gamma1(g1)
print(rep.name, rep.verdict.state, "-", rep.verdict.reason)

rep = check_mg(g15)
print(rep.name, rep.verdict.state, "sup", rep.running_sup)
print("  roots vs quotients gap:", dict(rep.notes)["roots_quotient_gap_sup"])

# pair condition: the maximal partner of a sequence against the sequence
N = gevrey(2, 128)
L = optimal_sequence(N, 1, 1).sequence
rep = check_SV(L, N, 1)
print(rep.name, rep.verdict.state, "sup", rep.running_sup)
for p in (1, 32, 128):
    print(f"  profile at {p}: {rep.profile_at(p)}")
# the verdict stays open because L carries no tail model, but the
# stored-range profile is pinned at 1 as it should be

d = preceq_defect(N, L)
print("defect of N over L:", d.defect, "attained at", d.argmax)
