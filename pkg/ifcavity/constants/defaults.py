# -*- coding: utf-8 -*-
"""Default values of the run configuration.

The cavity, object and detector defaults describe the headline system: an empty cavity with
``κ_A/(2π) = 1.5e7 Hz`` holding an object with ``κ_3/(2π) = 6.5e6 Hz``,
``Δ_P/(2π) = 2e7 Hz`` and ``ε_P = 0.2``, read out by detectors with ``χ = 0.5`` and ``D = 1e-3``
in both accessible ports. The empty cavity is locked on resonance and perfectly mode matched.
"""


#: Vacuum speed of light in m/s
SPEED_OF_LIGHT = 299792458.0

# Cavity and object
KAPPA_A_HZ = 1.5e7  #:
KAPPA_3_HZ = 6.5e6  #:
DELTA_A_HZ = 0.0  #:
DELTA_P_HZ = 2e7  #:
EPSILON_A = 1.0  #:
EPSILON_P = 0.2  #:
XI = 0.5  #:

# Detectors (same for both ports)
CHI = 0.5  #:
DARK_RATIO = 1e-3  #:

# Coupling efficiency grid; both endpoints stay inside the open interval (0, 1)
XI_MIN = 0.001  #:
XI_MAX = 0.999  #:
XI_COUNT = 500  #:

#: Photon numbers of the line cuts through the (ξ, N₀) plane
SWEEP_N0_VALUES = (5.0, 55.0)
#: Number of log-spaced photon numbers of the (ξ, N₀) plane, 0 for no plane
PLANE_COUNT = 0

# Photon number range searched by the optimizer
N0_MIN = 1.0  #:
N0_MAX = 1000.0  #:

# Constraints of the conditional maxima
MIN_ETA_TOT = 0.85  #:
MIN_SNR = 2.0  #:

# Security curve
SNR_MIN = 0.0  #:
SNR_MAX = 5.0  #:
SNR_COUNT = 100  #:

# Regime map axes (log-spaced)
KAPPA3_MIN_HZ = 1.5e4  #:
KAPPA3_MAX_HZ = 1.5e10  #:
KAPPA3_COUNT = 7  #:
DELTAP_MIN_HZ = 1.5e4  #:
DELTAP_MAX_HZ = 1.5e10  #:
DELTAP_COUNT = 7  #:
#: Map the conditional instead of the global maxima
CONDITIONAL = False

# Monte-Carlo validation
MONTECARLO_N0_VALUES = (5, 55)  #:
TRIALS = 100000  #:
SEED = 20240101  #:
#: Name of the bit generator behind all random draws
RANDOM_GENERATOR = "PCG64"
#: Number of trials drawn from one random substream
TRIAL_BLOCK_SIZE = 8192

# Run
THREADS = 1  #:

#: Environment variable that overrides the output directory
ENV_OUT_DIR = "IFCAVITY_OUT_DIR"
