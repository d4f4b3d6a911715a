# -*- coding: utf-8 -*-
"""Validation of a run configuration

The checks here do not stop a run.  They flag configurations outside the regime the figures of
merit are modelled for, or for which some results are only limited by the configured ranges, as
warnings of different degree.
"""

import warnings

from ..detection.cavity import max_photon_flux, port_coefficients
from ..detection.metrics import port_signal_and_noise
from ..detection.models import ObjectState, Port
from ..detection.optimize import stationary_n0
from ..exceptions import (
    AdvisoryIfcValidationWarning,
    CriticalIfcValidationWarning,
    ModerateIfcValidationWarning,
)
from .models import RunConfig

__author__ = "ifcavity developers"


#: Smallest distance of a coupling efficiency grid point to 0 and 1 that is not flagged
XI_EDGE_DISTANCE = 1e-3


class RunValidator:
    """
    Validator for RunConfig

    :type config: RunConfig
    :param config: The run configuration to validate
    """

    def __init__(self, config: RunConfig):
        self._config = config

    def validate(self):
        """Validate the run configuration"""
        self._validate_empty_cavity()
        self._validate_xi_grid()
        self._validate_photon_flux()
        absorbing = self._validate_absorption()
        if absorbing:
            self._validate_n0_range()
        self._validate_contrast()

    def _validate_empty_cavity(self):
        cavity = self._config.cavity
        if cavity.delta_A != 0.0 or cavity.epsilon_A != 1.0:
            tpl = (
                "Empty cavity is not locked and mode matched (delta_a_hz = {}, epsilon_a = {}); "
                "figures of merit assume delta_a_hz = 0 and epsilon_a = 1"
            )
            msg = tpl.format(cavity.delta_A, cavity.epsilon_A)
            warnings.warn(msg, AdvisoryIfcValidationWarning)

    def _validate_xi_grid(self):
        axis = self._config.xi_axis
        if axis.min < XI_EDGE_DISTANCE or axis.max > 1.0 - XI_EDGE_DISTANCE:
            tpl = "Coupling efficiency grid [{}, {}] comes closer than {} to 0 or 1"
            msg = tpl.format(axis.min, axis.max, XI_EDGE_DISTANCE)
            warnings.warn(msg, AdvisoryIfcValidationWarning)

    def _validate_photon_flux(self):
        photon_flux = self._config.run.photon_flux
        if photon_flux is None:
            return
        bound = max_photon_flux(self._config.cavity)
        if photon_flux > bound:
            tpl = (
                "Photon flux {} /s exceeds the quasi-steady state bound of {} /s "
                "(more than one photon in the cavity on average)"
            )
            msg = tpl.format(photon_flux, bound)
            warnings.warn(msg, ModerateIfcValidationWarning)

    def _validate_absorption(self) -> bool:
        """Return whether the object absorbs at all"""
        if port_coefficients(self._config.cavity, ObjectState.PRESENT).A == 0.0:
            msg = (
                "Object does not absorb (A = 0); the merit product grows without bound in the "
                "photon number and optimization results are limited by n0_max"
            )
            warnings.warn(msg, CriticalIfcValidationWarning)
            return False
        return True

    def _validate_n0_range(self):
        spec = self._config.cavity.with_xi(0.5)
        n0_star = stationary_n0(port_coefficients(spec, ObjectState.PRESENT).A)
        n0_max = self._config.optimize.n0_max
        if n0_max < n0_star:
            tpl = "n0_max = {} is below the optimal photon number {} at xi = 0.5; optima clamped"
            msg = tpl.format(n0_max, n0_star)
            warnings.warn(msg, ModerateIfcValidationWarning)

    def _validate_contrast(self):
        cavity = self._config.cavity
        coeffs_absent = port_coefficients(cavity, ObjectState.ABSENT)
        coeffs_present = port_coefficients(cavity, ObjectState.PRESENT)
        for port in Port:
            det = self._config.detectors.for_port(port)
            signal, _ = port_signal_and_noise(coeffs_absent, coeffs_present, det, port)
            if signal == 0.0:
                tpl = "No contrast in the {} port at xi = {}; the SNR cannot be raised"
                msg = tpl.format(port.value, cavity.xi)
                warnings.warn(msg, CriticalIfcValidationWarning)
