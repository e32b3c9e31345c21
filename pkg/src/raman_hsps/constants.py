"""Physical constants shared by the main path and the test oracles.

Both values are exact in the 2019 SI redefinition and identical to CODATA 2018.
"""

PLANCK_H = 6.62607015e-34  # J s
BOLTZMANN_K = 1.380649e-23  # J / K

# exact decimal strings for arbitrary-precision checks
PLANCK_H_STR = "6.62607015e-34"
BOLTZMANN_K_STR = "1.380649e-23"

THZ = 1.0e12
