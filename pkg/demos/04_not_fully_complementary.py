"""
Observables that are not fully complementary
=============================================

With delta = 0.7 the landscape loses its pi/4 period and the symmetric
and antisymmetric states behave differently.
"""
from entropic_exchange import CandidateLabel, crossing_q, exchange_report

delta = 0.7
orders = [0.5, 1, 1.5, 1.6, 1.7, 2, 3]

for kind in ("pi", "u", "sigma"):
    print(kind)
    for row in exchange_report(kind, delta, orders):
        sym = row.types[CandidateLabel.SYMMETRIC]
        anti = row.types[CandidateLabel.ANTISYMMETRIC]
        print(f"  q={row.q:<4}  symmetric {sym.value if sym else '-':<11}"
              f"  antisymmetric {anti.value if anti else '-'}")

# the symmetric state turns into a minimum at a lower order than for delta = pi/4
print(crossing_q("pi", delta, (1.0, 2.0)).q_star)

# The antisymmetric state is a maximum for U_2 only while cos(2 delta) > 1/3,
# i.e. delta < 0.6155; at 0.7 it has already become a shallow local minimum
# between two off-candidate maxima by q = 2.
for delta in (0.5, 0.6, 0.65, 0.7):
    (row,) = exchange_report("u", delta, [2])
    print(delta, row.types[CandidateLabel.ANTISYMMETRIC].value)
