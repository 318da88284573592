"""
Curvature at the symmetric state and the crossing order
========================================================

The sign of d2F/dtheta2 at theta = delta/2 says whether the symmetric
state is a maximum or a minimum.  Its zero in q is where the two swap.
"""
import math

import numpy as np

from entropic_exchange import BracketError, FunctionalSpec, crossing_q, dd_vs_q, second_derivative, second_derivative_fd

delta = math.pi / 4
q = np.linspace(0.5, 3.0, 11)

print("  q        Pi''        U''     Sigma''")
table = np.column_stack([q] + [dd_vs_q(kind, delta, q).values for kind in ("pi", "u", "sigma")])
print(np.array2string(table, precision=5, suppress_small=True))

# closed-form curvature against a high-precision finite difference
spec = FunctionalSpec("u", 1.3)
print(second_derivative(spec, delta / 2, delta), second_derivative_fd(spec, delta / 2, delta))

for kind in ("pi", "u", "sigma"):
    r = crossing_q(kind, delta, (1.0, 2.9))
    print(f"{kind:>5}: q* = {r.q_star:.9f} after {r.iterations} bisections")

# a bracket without a sign change is refused, with the end values attached
try:
    crossing_q("sigma", delta, (2.2, 2.8))
except BracketError as exc:
    print("no crossing:", exc.f_lo, exc.f_hi)
