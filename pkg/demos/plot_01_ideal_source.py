"""
The ideal heralded source
=========================

One molecule (or many inside the drive's coherence volume), a coherent
drive, and a perfect time ordering: the Stokes photon is detected first
and heralds the anti-Stokes photon.
"""

import numpy as np

from raman_hsps import Herald, ideal_correlations, ideal_limits, purity_efficiency, thermal_occupancy

spacer = "_" * 60

# room temperature, a 50 THz vibration
n_v = thermal_occupancy(nu_v=50e12, temperature=300.0)
print(f"thermal phonon number n_v = {n_v:.6e}")

c = ideal_correlations(n_v, gamma_v=1e12, tau=0.0)
print(f"g2 cross  = {c.g2_cross:.4f}   (about 1/n_v = {1 / n_v:.4f})")
print(f"g3 cross  = {c.g3_s1a2:.4f}")
print(f"g2 autos  = {c.g2_st_auto}, {c.g2_ast_auto}   (thermal)")

print(spacer)

# Stokes heralds anti-Stokes: nearly a perfect single photon
f = purity_efficiency(c, Herald.STOKES)
lim = ideal_limits(n_v, herald=Herald.STOKES)
print("Stokes herald")
print(f"  purity     {f.purity:.6e}   limit 4 n_v   = {lim.purity:.6e}")
print(f"  efficiency {f.efficiency:.4f}       limit 1/n_v = {lim.efficiency:.4f}")

# the reverse ordering keeps the thermal statistics of the partner
rev = ideal_correlations(n_v, gamma_v=1e12, tau=0.0, anti_stokes_first=True)
f = purity_efficiency(rev, Herald.ANTI_STOKES)
print("anti-Stokes herald")
print(f"  purity     {f.purity:.8f}")
print(f"  efficiency {f.efficiency:.8f}")

print(spacer)

# purity follows 4 n_v over the whole range of molecular vibrations
print(" nu_v [THz]        n_v        purity")
for nu in np.linspace(10, 100, 10):
    n = thermal_occupancy(nu_v=nu * 1e12, temperature=300.0)
    p = purity_efficiency(ideal_correlations(n, 1.0, 0.0)).purity
    print(f"{nu:10.0f}  {n:12.4e}  {p:12.4e}")
