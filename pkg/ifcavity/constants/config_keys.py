# -*- coding: utf-8 -*-
"""
Constants of valid section names and keys for run configuration parsing and writing.

Physical quantities carry their unit as key suffix (``_hz`` for ordinary frequencies, i.e.
``X/(2π)``, ``_rad_s`` for angular frequencies) so that the 2π convention is explicit in every
configuration file.
"""


# Constants for configuration parsing and writing --------------------------------------------------


# As for the result table columns, a typo in a key name is caught as "unknown identifier"
# rather than as a silently ignored configuration entry.
CAVITY = "CAVITY"  #:
DETECTOR_REFLECTION = "DETECTOR REFLECTION"  #:
DETECTOR_TRANSMISSION = "DETECTOR TRANSMISSION"  #:
OPTOMECHANICS = "OPTOMECHANICS"  #:
SWEEP_XI = "SWEEP XI"  #:
OPTIMIZE = "OPTIMIZE"  #:
SECURITY_CURVE = "SECURITY CURVE"  #:
PARAMETER_MAP = "PARAMETER MAP"  #:
MONTE_CARLO = "MONTE CARLO"  #:
RUN = "RUN"  #:


# CAVITY
KAPPA_A_HZ = "kappa_a_hz"  #:
KAPPA_3_HZ = "kappa_3_hz"  #:
DELTA_A_HZ = "delta_a_hz"  #:
DELTA_P_HZ = "delta_p_hz"  #:
EPSILON_A = "epsilon_a"  #:
EPSILON_P = "epsilon_p"  #:
XI = "xi"  #:
#: Collected keys of CAVITY section
CAVITY_KEYS = (KAPPA_A_HZ, KAPPA_3_HZ, DELTA_A_HZ, DELTA_P_HZ, EPSILON_A, EPSILON_P, XI)


# DETECTOR REFLECTION and DETECTOR TRANSMISSION
CHI = "chi"  #:
DARK_RATIO = "dark_ratio"  #:
#: Collected keys of the two DETECTOR sections
DETECTOR_KEYS = (CHI, DARK_RATIO)


# OPTOMECHANICS
G0_RAD_S = "g0_rad_s"  #:
OMEGA_M_RAD_S = "omega_m_rad_s"  #:
OMEGA_C_RAD_S = "omega_c_rad_s"  #:
CAVITY_LENGTH_M = "cavity_length_m"  #:
R_M = "r_m"  #:
X_ZPF_M = "x_zpf_m"  #:
DRIVE_PHOTON_FLUX_PER_S = "drive_photon_flux_per_s"  #:
#: Collected keys of OPTOMECHANICS section
OPTOMECHANICS_KEYS = (
    G0_RAD_S,
    OMEGA_M_RAD_S,
    OMEGA_C_RAD_S,
    CAVITY_LENGTH_M,
    R_M,
    X_ZPF_M,
    DRIVE_PHOTON_FLUX_PER_S,
)


# SWEEP XI
XI_MIN = "xi_min"  #:
XI_MAX = "xi_max"  #:
XI_COUNT = "xi_count"  #:
N0_VALUES = "n0_values"  #:
PLANE_COUNT = "plane_count"  #:
#: Collected keys of SWEEP XI section
SWEEP_XI_KEYS = (XI_MIN, XI_MAX, XI_COUNT, N0_VALUES, PLANE_COUNT)


# OPTIMIZE
N0_MIN = "n0_min"  #:
N0_MAX = "n0_max"  #:
MIN_ETA_TOT = "min_eta_tot"  #:
MIN_SNR = "min_snr"  #:
#: Collected keys of OPTIMIZE section
OPTIMIZE_KEYS = (N0_MIN, N0_MAX, MIN_ETA_TOT, MIN_SNR)


# SECURITY CURVE
SNR_MIN = "snr_min"  #:
SNR_MAX = "snr_max"  #:
SNR_COUNT = "snr_count"  #:
XI_REFLECTION = "xi_reflection"  #:
XI_TRANSMISSION = "xi_transmission"  #:
#: Collected keys of SECURITY CURVE section
SECURITY_CURVE_KEYS = (SNR_MIN, SNR_MAX, SNR_COUNT, XI_REFLECTION, XI_TRANSMISSION)


# PARAMETER MAP
KAPPA3_MIN_HZ = "kappa3_min_hz"  #:
KAPPA3_MAX_HZ = "kappa3_max_hz"  #:
KAPPA3_COUNT = "kappa3_count"  #:
DELTAP_MIN_HZ = "deltap_min_hz"  #:
DELTAP_MAX_HZ = "deltap_max_hz"  #:
DELTAP_COUNT = "deltap_count"  #:
CONDITIONAL = "conditional"  #:
#: Collected keys of PARAMETER MAP section
PARAMETER_MAP_KEYS = (
    KAPPA3_MIN_HZ,
    KAPPA3_MAX_HZ,
    KAPPA3_COUNT,
    DELTAP_MIN_HZ,
    DELTAP_MAX_HZ,
    DELTAP_COUNT,
    CONDITIONAL,
)


# MONTE CARLO
TRIALS = "trials"  #:
SEED = "seed"  #:
#: Collected keys of MONTE CARLO section
MONTE_CARLO_KEYS = (N0_VALUES, TRIALS, SEED)


# RUN
PHOTON_FLUX_PER_S = "photon_flux_per_s"  #:
THREADS = "threads"  #:
OUTPUT_FORMAT = "output_format"  #:
#: Collected keys of RUN section
RUN_KEYS = (PHOTON_FLUX_PER_S, THREADS, OUTPUT_FORMAT)


#: Keys allowed per section, in writing order
SECTION_KEYS = {
    CAVITY: CAVITY_KEYS,
    DETECTOR_REFLECTION: DETECTOR_KEYS,
    DETECTOR_TRANSMISSION: DETECTOR_KEYS,
    OPTOMECHANICS: OPTOMECHANICS_KEYS,
    SWEEP_XI: SWEEP_XI_KEYS,
    OPTIMIZE: OPTIMIZE_KEYS,
    SECURITY_CURVE: SECURITY_CURVE_KEYS,
    PARAMETER_MAP: PARAMETER_MAP_KEYS,
    MONTE_CARLO: MONTE_CARLO_KEYS,
    RUN: RUN_KEYS,
}

#: Keys that may carry more than one value on their line
MULTI_VALUE_KEYS = (N0_VALUES,)
