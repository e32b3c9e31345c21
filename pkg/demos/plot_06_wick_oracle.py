"""
Checking closed forms by brute force
====================================

The thermal phonon field is Gaussian, so every moment is a sum over
pairings. Enumerating them recovers the correlators from scratch.
"""

from raman_hsps import ExternalSourceStats, ideal_correlations, incoherent_correlations
from raman_hsps.wick import (
    OperatorString,
    TwoPointTable,
    gaussian_moment,
    matchings,
    multi_molecule_correlator,
    raman_correlator,
)

table = TwoPointTable(n_v=0.01, gamma_v=1.0, nu_v=0.0)

s = OperatorString.parse("b+ b+ b b")
print(f"<b+ b+ b b> = {gaussian_moment(s, table).real:.6f}  (2 n^2 = {2 * 0.01 ** 2:.6f})")
print(f"pairings of b+ b+ b+ b b b: {len(list(matchings(OperatorString.parse('b+ b+ b+ b b b'))))}")

src = ExternalSourceStats.constant(1.5, 3.0)
print("\norder   delay      enumerated     closed form")
for order in [(1, 1), (1, 2), (2, 1)]:
    for gt in (0.0, 0.8, -0.8):
        wick = raman_correlator(order, gt, table, src)
        closed = ideal_correlations(0.01, 1.0, gt, src).value(*order)
        print(f"{order}  {gt:+5.1f}  {wick:14.8f}  {closed:14.8f}")

print("\nindependent drives, M molecules, order (1, 2)")
for M in range(1, 5):
    wick = multi_molecule_correlator((1, 2), M, table)
    print(f"  M={M}  {wick:12.6f}  {incoherent_correlations(0.01, M).g3_s1a2:12.6f}")
