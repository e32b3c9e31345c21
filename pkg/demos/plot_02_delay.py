"""
Time delay between Stokes and anti-Stokes
=========================================

The phonon created by Stokes scattering decays at rate gamma_v. Waiting
before detecting the anti-Stokes photon lets thermal phonons take over.
"""

import math

import numpy as np

from raman_hsps import delay_limits, ideal_correlations, purity_efficiency, thermal_occupancy
from raman_hsps.metrics import DelayRegime

n_v = thermal_occupancy(nu_v=50e12, temperature=300.0)

# delays are measured in units of 1/gamma_v
print("g2 cross correlation against gamma_v * tau")
for gt in np.linspace(-2, 3, 11):
    print(f"  {gt:+5.1f}   {ideal_correlations(n_v, 1.0, gt).g2_cross:12.4f}")

# regime boundary: exp(-2 gamma tau) = n_v
cross = -0.5 * math.log(n_v)
print(f"\nregimes meet at gamma_v * tau = {cross:.3f}\n")

print(" gamma*tau      purity   short-delay   long-delay")
for gt in np.linspace(0, 2 * cross, 9):
    f = purity_efficiency(ideal_correlations(n_v, 1.0, gt))
    small = delay_limits(n_v, 1.0, gt, regime=DelayRegime.SMALL).purity
    large = delay_limits(n_v, 1.0, gt, regime=DelayRegime.LARGE).purity
    print(f"{gt:10.3f}  {f.purity:10.4e}  {small:12.4e}  {large:10.4f}")
