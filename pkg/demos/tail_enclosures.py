"""Tail sums as two-sided enclosures.

Everything downstream (profiles, constructions, verdicts) consumes
these intervals, so the demo checks them against closed forms.
"""
import math

from weightseq import RatioTail, from_quotients, gamma1_profile, gevrey, tail_sum
import numpy as np

N = gevrey(2, 256)

# sum of 1/k^2 from k=2 on is pi^2/6 - 1
enc = tail_sum(N, 2)
target = math.pi ** 2 / 6.0 - 1.0
print(f"tail from 2: [{enc.lo:.12f}, {enc.hi:.12f}] width {enc.width:.2e}")
print("contains pi^2/6 - 1:", enc.lo <= target <= enc.hi)

# geometric quotients, remainder closed exactly by the ratio model
lq = np.arange(1, 17) * math.log(2.0)
G = from_quotients(lq, RatioTail(2.0, 1), label="geometric")
enc = tail_sum(G, 1)
print("geometric tail from 1:", enc, "(exact value 1)")

# profile p * tail(p), the quantity behind the surjectivity checks
for p in (1, 8, 64):
    iv = gamma1_profile(N, p)
    print(f"profile at {p:3d}: [{iv.lo:.9f}, {iv.hi:.9f}]")
# at p=8 the exact value is 8 * psi'(8) = 1.0650912...
