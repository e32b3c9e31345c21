"""
Background light
================

Light at the Stokes and anti-Stokes frequencies that is not Raman
scattered (fluorescence, leakage) dilutes the correlations.
"""

import numpy as np

from raman_hsps import (
    BackgroundParams,
    background_correlations,
    background_limits,
    ideal_correlations,
    purity_efficiency,
    thermal_occupancy,
)

n_v = thermal_occupancy(nu_v=50e12, temperature=300.0)
base = ideal_correlations(n_v, 1.0, 0.0)

print("      SNR      purity   efficiency")
for snr in np.geomspace(1e-3, 1e3, 13):
    f = purity_efficiency(background_correlations(base, BackgroundParams(snr, snr)))
    print(f"{snr:9.3g}  {f.purity:10.4e}  {f.efficiency:11.4f}")

# with SNR = 0.1 the heralded light is still far from thermal
f = purity_efficiency(background_correlations(base, BackgroundParams(0.1, 0.1)))
print(f"\nSNR = 0.1: purity {f.purity:.4f}")

# strong Stokes background makes the herald useless
bg = BackgroundParams(1e-6, 1e3)
f = purity_efficiency(background_correlations(base, bg))
lim = background_limits(bg, purity_efficiency(base), "stokes-swamped", n_v)
print(f"Stokes swamped: purity {f.purity:.4f}, limit {lim.purity}")

# the limit functions refuse parameters outside their regime
try:
    background_limits(BackgroundParams(1.0, 1.0), purity_efficiency(base), "high-snr", n_v)
except ValueError as exc:
    print(f"refused: {exc}")
