"""Associated weight, its inverse, and the kernel built on it.

omega(t) = sup_p log(t^p / M_p). For log-convex data the transform is
lossless: conjugating back recovers every stored term. On anything else
it lands on the convex minorant, which is all a weight can see.
"""
import math

import numpy as np

from weightseq import (Unknown, from_quotients, gevrey, kappa, omega,
                       recover_sequence, theta_jet)
from weightseq.weights import check_snq, default_t_grid

N = gevrey(2, 128)

print("omega(e) =", omega(N, math.e))
print("omega(16) =", omega(N, 16.0), "closed form",
      4 * math.log(16.0) - 2 * math.log(24.0))
print("omega below 1 is 0:", omega(N, 0.7))

worst = max(abs(recover_sequence(N, p) - N.log_term(p)) for p in range(1, 65))
print("worst recovery error on 64 terms:", worst)

lq = np.array([0.0, 3.0, 1.0, 4.0, 4.0, 4.0, 4.0, 4.0])
W = from_quotients(lq, Unknown, label="bumpy")
print("bumpy term 2 is 3.0, recovered:", recover_sequence(W, 2))

# kernel integral with enclosed quadrature error
k = kappa(N, 16.0)
print("kappa(16):", k, "vs omega(16)/2 =", omega(N, 16.0) / 2)

# jets of the associated function dominate the terms
for j in (0, 4, 16):
    enc = theta_jet(N, j, j + 40)
    print(f"jet {j}: lo {enc.lo:.9f} >= log term {N.log_term(j):.9f}")

# mixed growth comparison along a shared t grid
grid = default_t_grid(N)
rep = check_snq(N, gevrey(3, 128), grid, 1e6)
print("snq pair gevrey 2 vs 3:", rep.verdict.state)
