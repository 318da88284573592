"""
Uncertainty landscapes for complementary observables
=====================================================

For delta = pi/4 the eigenbases of A and B are mutually unbiased.  Sweep
the state angle theta and look at where each functional peaks.
"""
import math

import numpy as np

from entropic_exchange import CandidateLabel, FunctionalSpec, classify_extrema, sweep_theta

delta = math.pi / 4

# Pi_q: the symmetric state theta = pi/8 is the top of the landscape at low q
# and the bottom at high q
for q in (0.5, 1, 2, 3):
    curve = sweep_theta(FunctionalSpec("pi", q), delta, 720)
    i, j = np.argmax(curve.values), np.argmin(curve.values)
    print(f"Pi, q={q}: max {curve.values[i]:.4f} at theta={curve.parameter[i]:.4f}, "
          f"min {curve.values[j]:.4f} at theta={curve.parameter[j]:.4f}")

# Sigma_2 is flat: every state is equally uncertain
flat = sweep_theta(FunctionalSpec("sigma", 2), delta)
print("Sigma_2 range:", np.ptp(flat.values))

report = classify_extrema(FunctionalSpec("sigma", 2), delta)
print("degenerate:", report.degenerate_flat)

# just either side of q = 2 the symmetric state swaps roles
for q in (1.8, 2.5):
    report = classify_extrema(FunctionalSpec("sigma", q), delta)
    print(f"Sigma, q={q}: symmetric state is {report.at(CandidateLabel.SYMMETRIC).value}")
    for e in report.extrema:
        label = e.candidate.value if e.candidate else "-"
        print(f"    theta={e.theta:.6f}  {e.type.value:<10}  {label}")
