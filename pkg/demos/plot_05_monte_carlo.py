"""
Detection and postselection by Monte Carlo
==========================================

A joint photon-number table for one detection window, then sampled
heralds. The estimate converges on the analytic purity.
"""

import numpy as np

from raman_hsps import ideal_correlations, purity_efficiency, thermal_occupancy
from raman_hsps.photon_mc import (
    build_table,
    conditional_distribution,
    sample_heralded,
    sample_unconditional,
    table_figures,
)

n_v = thermal_occupancy(nu_v=50e12, temperature=300.0)
c = ideal_correlations(n_v, 1.0, 0.0)
t = build_table(c, mu_st=1e-4, mu_ast=1e-4)

np.set_printoptions(precision=3)
print("p[n_st, n_ast]:")
print(t.as_matrix())
print(f"\nconditional anti-Stokes numbers given one Stokes photon: {conditional_distribution(t)}")

analytic = purity_efficiency(c)
purity, eff = table_figures(t)
print(f"analytic purity {analytic.purity:.6e}, from the table {purity:.6e}")

for heralds in (10**5, 10**6, 10**7):
    est = sample_heralded(t, heralds, seed=1)
    print(f"{heralds:>9d} heralds: purity {est.purity:.4e} +/- {est.purity_stderr:.1e}, "
          f"two-photon events {est.counts[2]}")

# unconditional windows mostly hold vacuum
est = sample_unconditional(t, 10**6, seed=1)
print(f"\n1e6 raw windows: {est.herald_count} heralds, counts {est.to_dict()['counts']}")
