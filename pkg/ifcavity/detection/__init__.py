# -*- coding: utf-8 -*-
"""Module for computing the figures of merit of interaction-free detection with a cavity."""

# Make all models and the computing functions visible within this module.

from .models import *  # noqa: F403, F401
from .cavity import (  # noqa: F401
    coefficient_spectrum,
    flux_within_bound,
    g0_max,
    max_photon_flux,
    mirror_decay_rate,
    per_photon_security,
    port_coefficients,
    solve_steady_state,
    steady_state_residual,
    with_optomechanical_detuning,
)
from .metrics import (  # noqa: F401
    evaluate_metrics,
    measurement_time,
    n0_for_snr,
    security_vs_n0_curve,
    security_vs_snr_curve,
    snr,
    snr_for_security,
    total_security,
    zeta,
)
from .montecarlo import simulate_counts, simulate_survival  # noqa: F401
from .optimize import (  # noqa: F401
    maximize_zeta,
    optimal_n0_at_xi,
    stationary_n0,
    sweep_kappa3_deltaP,
    sweep_xi,
)
