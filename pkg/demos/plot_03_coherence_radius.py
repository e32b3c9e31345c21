"""
Molecules outside the drive's coherence radius
==============================================

If the drive field reaching different molecules is uncorrelated, the
molecules scatter independently and the cross-correlations wash out as
1/M.
"""

import numpy as np

from raman_hsps import incoherent_correlations, incoherent_limits, purity_efficiency, thermal_occupancy

n_v = thermal_occupancy(nu_v=50e12, temperature=300.0)

print("       M      purity   large-M form    efficiency")
for M in np.geomspace(1, 1e5, 11):
    f = purity_efficiency(incoherent_correlations(n_v, M))
    lim = incoherent_limits(n_v, M)
    print(f"{M:8.0f}  {f.purity:10.4e}  {lim.purity:12.4e}  {f.efficiency:12.4f}")

# the source still works when 1/M is comparable to sqrt(n_v)
M = round(n_v ** -0.5)
f = purity_efficiency(incoherent_correlations(n_v, M))
print(f"\nM = {M} (about n_v^-1/2): purity {f.purity:.4f}, efficiency {f.efficiency:.2f}")
