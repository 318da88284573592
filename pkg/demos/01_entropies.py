"""
Tsallis, Shannon and Renyi measures of a coin
==============================================

The three measures used throughout, evaluated for a biased two-outcome
distribution and for a handful of orders q.
"""
import numpy as np

from entropic_exchange import renyi_measure, shannon_entropy, tsallis_entropy, variance_two_outcome

p = np.array([0.85, 0.15])
print("Shannon entropy:", shannon_entropy(p))

# S_q falls with q; q = 1 is the Shannon value
for q in (0.5, 1.0, 2.0, 3.0):
    print(f"q = {q}:  S_q = {tsallis_entropy(p, q):.6f}   R_q = {renyi_measure(p, q):.6f}")

# R_q counts "effective outcomes": 1 for a certain result, N for a uniform one
print(renyi_measure([1, 0, 0], 2), renyi_measure([1 / 3] * 3, 2))

# at q = 2 the Tsallis entropy is half the variance of a +-1 observable
for x in np.linspace(0, 1, 5):
    print(x, tsallis_entropy([x, 1 - x], 2), variance_two_outcome(x) / 2)

# approaching q = 1 from either side is smooth
for q in (1 - 1e-8, 1, 1 + 1e-8):
    print(q, tsallis_entropy(p, q) - shannon_entropy(p))
