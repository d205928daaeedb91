"""The three constructions, each checked against something it promises.
"""
import math

import numpy as np

from weightseq import (Unknown, descendant, from_quotients, gevrey,
                       log_convex_minorant, modified_descendant,
                       optimal_sequence, tail_sum)

N = gevrey(2, 64)

# descendant: largest log-convex-quotient sequence still paired with N
des = descendant(N)
S = des.sequence
print("descendant label:", S.label)
print("tau1 enclosure:", des.tau1, " (1 + pi^2/6 =", 1 + math.pi ** 2 / 6, ")")
print("first quotient log:", S.log_quotients[0], " (normalized)")
print("sup |log sigma - log nu|:",
      np.max(np.abs(S.log_quotients - N.log_quotients)))

# capped variant keeps sigma <= nu while staying in the same class
St = modified_descendant(N)
print(St.label, "dominated by N:",
      bool(np.all(St.log_terms() <= N.log_terms() + 1e-12)))

# optimal sequence: per-index minimum over anchors
res = optimal_sequence(N, 1, 2.0)
L = res.sequence
p = 16
T = tail_sum(N, p)
lnT = 0.5 * (math.log(T.lo) + math.log(T.hi))
closed = math.log(2.0) + math.log(p) - lnT + N.log_term(p - 1)
print(f"optimal at p={p}: {L.log_term(p):.12f} closed form {closed:.12f}")
print("anchor indices nondecreasing:",
      bool(np.all(np.diff(res.argmin[1:]) >= 0)))

# convex minorant of a bumpy table, hull vertices and the touch set
lq = np.array([0.0, 3.0, 1.0, 4.0, 4.0, 4.0, 4.0, 4.0])
W = from_quotients(lq, Unknown, label="bumpy")
mino = log_convex_minorant(W)
print("hull vertices:", mino.vertices)
print("minorant terms:", mino.log_terms)
