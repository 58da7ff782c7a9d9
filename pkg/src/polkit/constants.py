"""Physical constants and unit-conversion factors.

Values are pinned as literals rather than pulled from a constants library
so that numeric output is reproducible bit-for-bit across environments.
"""

# Hartree energy expressed in wavenumbers, cm^-1 (CODATA).
HARTREE_IN_CM = 219474.6313632

# Atomic unit of rate (inverse atomic unit of time), s^-1.
RATE_AU_IN_PER_S = 4.1341373336e16

# Speed of light in atomic units (inverse fine-structure constant).
SPEED_OF_LIGHT_AU = 137.035999

# Static polarizability conversion a0^3 -> Hz/(V/m)^2, i.e. alpha/h with
# the Planck constant factored out: 4*pi*eps0*a0^3/h.
POLARIZABILITY_AU_IN_SI = 2.48832e-8

# RMS electric field radiated by a blackbody at 300 K, V/m.
BBR_FIELD_300K = 831.9
