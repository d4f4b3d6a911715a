# -*- coding: utf-8 -*-
"""Steady-state coefficients of a two-mirror cavity with an absorbing, scattering object inside.

A photon entering through the input mirror leaves the cavity either in reflection (port 1), in
transmission (port 2) or is absorbed by the object (port 3).  The probabilities follow from the
input-output formalism:

- ``R = 1 - ε·κ₁·(κ - κ₁) / ((κ/2)² + Δ²)``
- ``T = ε·κ₁·κ₂ / ((κ/2)² + Δ²)``
- ``A = ε·κ₁·κ₃ / ((κ/2)² + Δ²)``

where ``(κ, Δ, ε)`` are selected by the state of the object.
"""

import logging
import math
from typing import Iterable, List, Tuple

import attr
import numpy as np

from ..constants.defaults import SPEED_OF_LIGHT
from ..exceptions import InvalidSpec, NoConvergence
from .models import (
    CavitySpec,
    ObjectState,
    OptomechanicalParams,
    PortCoefficients,
    SteadyStateSolution,
)

__author__ = "ifcavity developers"

logger = logging.getLogger(__name__)

#: Largest relative residual of the fixed-point cubic accepted for a steady-state root
STEADY_STATE_TOLERANCE = 1e-10

#: Number of Newton steps used for polishing the roots of the fixed-point cubic
_NEWTON_STEPS = 50


def mirror_decay_rate(transmissivity: float, cavity_length: float) -> float:
    """Return the decay rate ``κ/(2π)`` in Hz through a mirror of the given power transmissivity
    in a cavity of length ``cavity_length`` (in m)
    """
    if not 0.0 <= transmissivity <= 1.0:
        tpl = "Invalid value for transmissivity: {} (must be in [0, 1])"
        raise InvalidSpec(tpl.format(transmissivity), field="transmissivity")
    if not cavity_length > 0.0:
        tpl = "Invalid value for cavity_length: {} (must be > 0)"
        raise InvalidSpec(tpl.format(cavity_length), field="cavity_length")
    return SPEED_OF_LIGHT * transmissivity / (2.0 * cavity_length) / (2.0 * math.pi)


def _coefficients(spec: CavitySpec, state: ObjectState, detuning: float) -> PortCoefficients:
    kappa, _, epsilon, kappa_3 = spec.for_state(state)
    kappa_1 = spec.kappa_1
    denominator = (kappa / 2.0) ** 2 + detuning ** 2
    transmission = epsilon * kappa_1 * spec.kappa_2 / denominator
    absorption = epsilon * kappa_1 * kappa_3 / denominator
    reflection = 1.0 - epsilon * kappa_1 * (kappa - kappa_1) / denominator
    return PortCoefficients(R=reflection, T=transmission, A=absorption)


def port_coefficients(spec: CavitySpec, state: ObjectState) -> PortCoefficients:
    """Return reflection, transmission and absorption coefficients for the given object state"""
    _, detuning, _, _ = spec.for_state(state)
    return _coefficients(spec, state, detuning)


def coefficient_spectrum(
    spec: CavitySpec, state: ObjectState, detunings: Iterable[float]
) -> List[Tuple[float, PortCoefficients]]:
    """Return the coefficients for each detuning (in Hz) replacing the state's own detuning"""
    return [(float(delta), _coefficients(spec, state, float(delta))) for delta in detunings]


def per_photon_security(spec: CavitySpec) -> float:
    """Return the probability ``η = 1 - A`` that a single photon is not absorbed by the object"""
    return 1.0 - port_coefficients(spec, ObjectState.PRESENT).A


def max_photon_flux(spec: CavitySpec) -> float:
    """Return the largest photon flux (per second) compatible with at most one intracavity
    photon, i.e. ``κ_P/(2π)``
    """
    return spec.kappa_P


def flux_within_bound(spec: CavitySpec, photon_flux: float) -> bool:
    return photon_flux <= max_photon_flux(spec)


def g0_max(params: OptomechanicalParams) -> float:
    """Return the upper bound ``2·(ω_c/L)·|r_m|·x_zpf`` of the vacuum optomechanical coupling
    rate in rad/s
    """
    return 2.0 * (params.omega_c / params.cavity_length) * abs(params.r_m) * params.x_zpf


# Optomechanical steady state ----------------------------------------------------------------------
#
# With ``n = |α|²`` and ``b = 2·g₀²/ω_m`` the intracavity photon number solves
#
#   n·[(κ/2)² + (Δ_A - b·n)²] = κ₁·ε·|a_in|²
#
# in angular units.  Scaling ``n = n_lin·x`` with the linear solution ``n_lin`` (``b = 0``) gives
# the well conditioned cubic ``c₃·x³ + c₂·x² + x - 1 = 0``.


def _cubic_terms(spec: CavitySpec, params: OptomechanicalParams):
    kappa = 2.0 * math.pi * spec.kappa_P
    delta_a = 2.0 * math.pi * spec.delta_A
    kappa_1 = 2.0 * math.pi * spec.kappa_1
    b = 2.0 * params.g0 ** 2 / params.omega_m
    linear = (kappa / 2.0) ** 2 + delta_a ** 2
    drive = kappa_1 * spec.epsilon_P * params.drive_photon_flux
    return b, delta_a, linear, drive


def steady_state_residual(
    spec: CavitySpec, params: OptomechanicalParams, alpha_sq: float
) -> float:
    """Return the relative residual of the fixed-point equation at the photon number ``alpha_sq``"""
    b, delta_a, linear, drive = _cubic_terms(spec, params)
    terms = np.array(
        [b ** 2 * alpha_sq ** 3, -2.0 * delta_a * b * alpha_sq ** 2, linear * alpha_sq, -drive]
    )
    scale = np.sum(np.abs(terms))
    if scale == 0.0:
        return 0.0
    return float(abs(np.sum(terms)) / scale)


def _polish(x: float, c3: float, c2: float) -> float:
    for _ in range(_NEWTON_STEPS):
        value = ((c3 * x + c2) * x + 1.0) * x - 1.0
        slope = (3.0 * c3 * x + 2.0 * c2) * x + 1.0
        if slope == 0.0:
            break
        step = value / slope
        x -= step
        if abs(step) <= 1e-16 * abs(x):
            break
    return x


def solve_steady_state(
    spec: CavitySpec, params: OptomechanicalParams
) -> List[SteadyStateSolution]:
    """Return all steady states of the radiation pressure coupled cavity, sorted by photon number.

    Three solutions are returned in the bistable regime; selecting one is left to the caller.
    """
    b, delta_a, linear, drive = _cubic_terms(spec, params)
    if drive == 0.0:
        photon_numbers = [0.0]
    else:
        n_lin = drive / linear
        c3 = b ** 2 * n_lin ** 2 / linear
        c2 = -2.0 * delta_a * b * n_lin / linear
        roots = np.roots([c3, c2, 1.0, -1.0])
        real = [r.real for r in roots if abs(r.imag) <= 1e-8 * max(1.0, abs(r))]
        # The linear solution seeds the weakly nonlinear branch when c₃ is tiny
        real.append(1.0)
        polished = sorted(_polish(x, c3, c2) for x in real if x > 0.0)
        unique = []
        for x in polished:
            if not unique or abs(x - unique[-1]) > 1e-9 * abs(x):
                unique.append(x)
        photon_numbers = [x * n_lin for x in unique]
    result = []
    for alpha_sq in photon_numbers:
        residual = steady_state_residual(spec, params, alpha_sq)
        if residual > STEADY_STATE_TOLERANCE:
            tpl = "Steady state at |alpha|^2 = {} has relative residual {} (tolerance {})"
            raise NoConvergence(tpl.format(alpha_sq, residual, STEADY_STATE_TOLERANCE))
        result.append(
            SteadyStateSolution(
                alpha_sq=alpha_sq,
                beta=-params.g0 * alpha_sq / params.omega_m,
                delta_shifted=spec.delta_A - b * alpha_sq / (2.0 * math.pi),
                branch_count=len(photon_numbers),
            )
        )
    logger.debug("Found %d steady state(s): %s", len(result), [s.alpha_sq for s in result])
    return result


def with_optomechanical_detuning(spec: CavitySpec, solution: SteadyStateSolution) -> CavitySpec:
    """Return a copy of ``spec`` whose detuning with the object present is the self-consistent
    detuning of ``solution``
    """
    return attr.evolve(spec, delta_P=solution.delta_shifted)
