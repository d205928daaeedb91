"""First contact with the sequence container.

A sequence is stored through the logs of its quotients M_p/M_{p-1}
plus a model for the part beyond the stored horizon.
"""
import math

import numpy as np

from weightseq import Unknown, from_quotients, gevrey
from weightseq.serialization import read_sequence, write_sequence

N = gevrey(2, 64)      # N_p = (p!)^2, quotients p^2
print("label:", N.label)
print("horizon:", N.horizon)
print("first five quotient logs:", N.log_quotients[:5])
print("log N_8 =", N.log_term(8), "= 2*log 8! =", 2 * math.lgamma(9))

# roots are the Cesaro means of the quotient logs
print("log root at p=8:", N.log_root(8), "vs", N.log_term(8) / 8)

# any finite quotient table works, the tail model is explicit
lq = np.array([0.0, 3.0, 1.0, 4.0, 4.0, 4.0, 4.0, 4.0])
W = from_quotients(lq, Unknown, label="bumpy")
print("bumpy terms:", W.log_terms())

# raising to a power and geometric rescaling are exact on the logs
M = N.power(1.5)
print("power(1.5) tail exponent:", M.tail.s)
# dividing by 2^p would push the first quotient below 1, so the strict
# form refuses; strict=False permits leaving the normalized class
R = N.geometric_rescale(2.0, strict=False)
print("rescaled quotient logs start:", R.log_quotients[:3])

# the text form round trips bit for bit
text = write_sequence(N)
again = read_sequence(text)
assert np.array_equal(again.log_quotients, N.log_quotients)
print("round trip ok,", len(text.splitlines()), "lines")
