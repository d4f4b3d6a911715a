# -*- coding: utf-8 -*-
"""
Constants of column names for the CSV and JSON result tables written by the command line
interface.
"""


# Cavity coefficients (coeffs)
STATE = "state"  #:
REFLECTION = "R"  #:
TRANSMISSION = "T"  #:
ABSORPTION = "A"  #:
ETA = "eta"  #:
#: Columns of the coefficient table
COEFFS_COLUMNS = (STATE, REFLECTION, TRANSMISSION, ABSORPTION, ETA)


# Coupling efficiency sweep (sweep-xi)
XI = "xi"  #:
N0 = "n0"  #:
ETA_TOT = "eta_tot"  #:
SNR1 = "snr1"  #:
SNR2 = "snr2"  #:
ZETA1 = "zeta1"  #:
ZETA2 = "zeta2"  #:
#: Columns of the coupling efficiency sweep
SWEEP_XI_COLUMNS = (XI, N0, ETA_TOT, SNR1, SNR2, ZETA1, ZETA2)


# Optimum reports (optimize)
PORT = "port"  #:
SEARCH = "search"  #:
XI_STAR = "xi_star"  #:
N0_STAR = "n0_star"  #:
ZETA_STAR = "zeta_star"  #:
SNR = "snr"  #:
FEASIBLE = "feasible"  #:
MEASUREMENT_TIME_S = "measurement_time_s"  #:
#: Columns of an optimum report
OPTIMIZE_COLUMNS = (PORT, SEARCH, XI_STAR, N0_STAR, ZETA_STAR, ETA_TOT, SNR, FEASIBLE)


# Regime maps (param-map)
KAPPA3 = "kappa3"  #:
DELTAP = "deltap"  #:
VALUE = "value"  #:
#: Columns of a regime map
PARAM_MAP_COLUMNS = (KAPPA3, DELTAP, VALUE)


# Security curves (security-curve)
#: Columns of a security curve
SECURITY_CURVE_COLUMNS = (PORT, XI, SNR, N0, ETA_TOT)


# Monte-Carlo validation (montecarlo)
MEAN_SIGNAL = "mean_signal"  #:
STD_NOISE = "std_noise"  #:
EMPIRICAL_SNR = "empirical_snr"  #:
ANALYTIC_SNR = "analytic_snr"  #:
SNR_DEVIATION = "snr_rel_deviation"  #:
SURVIVAL_FRACTION = "survival_fraction"  #:
ANALYTIC_ETA_TOT = "analytic_eta_tot"  #:
SURVIVAL_DEVIATION = "survival_rel_deviation"  #:
SURVIVAL_Z = "survival_z"  #:
DEGENERATE_NOISE = "degenerate_noise"  #:
TRIALS = "trials"  #:
#: Columns of the Monte-Carlo comparison
MONTECARLO_COLUMNS = (
    PORT,
    N0,
    TRIALS,
    MEAN_SIGNAL,
    STD_NOISE,
    EMPIRICAL_SNR,
    ANALYTIC_SNR,
    SNR_DEVIATION,
    SURVIVAL_FRACTION,
    ANALYTIC_ETA_TOT,
    SURVIVAL_DEVIATION,
    SURVIVAL_Z,
    DEGENERATE_NOISE,
)


# Bounds of the quasi-steady state and of the optomechanical coupling (coeffs)
QUANTITY = "quantity"  #:
MAX_PHOTON_FLUX = "max_photon_flux_per_s"  #:
PHOTON_FLUX = "photon_flux_per_s"  #:
FLUX_WITHIN_BOUND = "flux_within_bound"  #:
G0_MAX = "g0_max_rad_s"  #:
#: Columns of the bounds table, one quantity per row
BOUNDS_COLUMNS = (QUANTITY, VALUE)


# Optomechanical steady states (coeffs)
ALPHA_SQ = "alpha_sq"  #:
BETA = "beta"  #:
DELTA_SHIFTED_HZ = "delta_shifted_hz"  #:
BRANCH_COUNT = "branch_count"  #:
#: Columns of the steady-state table, one branch per row
STEADY_STATE_COLUMNS = (ALPHA_SQ, BETA, DELTA_SHIFTED_HZ, BRANCH_COUNT)
