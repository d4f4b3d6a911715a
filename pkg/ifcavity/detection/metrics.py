# -*- coding: utf-8 -*-
"""Statistical figures of merit of interaction-free detection with a cavity.

The detector in port ``j`` distinguishes the two object states through the difference of its mean
counts.  With Poissonian counts including dark counts the signal-to-noise ratio is

    ``SNR_j = √N₀·χ_j·|J_A - J_P| / √(χ_j·(J_A + J_P) + 2·D_j)``

where ``J`` is ``R`` for the reflection port and ``T`` for the transmission port.  The total
security is the probability that none of the ``N₀`` photons is absorbed,
``η_tot = (1 - A)^N₀``.
"""

import math
from typing import Iterable, List, Tuple, Union

from ..exceptions import DegenerateNoise, EmptyGrid, InvalidSpec, UnboundedInN0, ZeroContrast
from .cavity import port_coefficients
from .models import (
    CavitySpec,
    DetectorSpec,
    Detectors,
    MetricsBundle,
    ObjectState,
    OperatingPoint,
    Port,
    PortCoefficients,
)

__author__ = "ifcavity developers"


def _check_n0(n0: float):
    if not (math.isfinite(n0) and n0 >= 0.0):
        tpl = "Invalid value for n0: {} (must be a finite number >= 0)"
        raise InvalidSpec(tpl.format(n0), field="n0")


def _signal_and_noise(spec: CavitySpec, det: DetectorSpec, port: Port) -> Tuple[float, float]:
    coeffs_absent = port_coefficients(spec, ObjectState.ABSENT)
    coeffs_present = port_coefficients(spec, ObjectState.PRESENT)
    return port_signal_and_noise(coeffs_absent, coeffs_present, det, port)


def port_signal_and_noise(
    coeffs_absent: PortCoefficients, coeffs_present: PortCoefficients, det: DetectorSpec, port: Port
) -> Tuple[float, float]:
    """Return ``χ·|J_A - J_P|`` and ``√(χ·(J_A + J_P) + 2·D)``"""
    j_absent, j_present = port.select(coeffs_absent), port.select(coeffs_present)
    signal = det.chi * abs(j_absent - j_present)
    noise = math.sqrt(det.chi * (j_absent + j_present) + 2.0 * det.dark_ratio)
    return signal, noise


def _snr(signal: float, noise: float, n0: float, port: Port) -> float:
    if noise == 0.0:
        tpl = "No counts expected in the {} port without dark counts, SNR undefined"
        raise DegenerateNoise(tpl.format(port.value))
    return math.sqrt(n0) * signal / noise


def snr(spec: CavitySpec, det: DetectorSpec, port: Port, n0: float) -> float:
    """Return the signal-to-noise ratio of distinguishing absent and present object with ``n0``
    impinging photons and a detector in ``port``
    """
    _check_n0(n0)
    signal, noise = _signal_and_noise(spec, det, port)
    return _snr(signal, noise, n0, port)


def total_security(spec: CavitySpec, n0: float) -> float:
    """Return the probability ``(1 - A)^n0`` that none of ``n0`` photons is absorbed"""
    _check_n0(n0)
    eta = 1.0 - port_coefficients(spec, ObjectState.PRESENT).A
    return eta ** n0


def security_vs_n0_curve(spec: CavitySpec, n0_grid: Iterable[float]) -> List[Tuple[float, float]]:
    result = [(float(n0), total_security(spec, float(n0))) for n0 in n0_grid]
    if not result:
        raise EmptyGrid("Photon number grid is empty")
    return result


def zeta(spec: CavitySpec, det: DetectorSpec, port: Port, point: OperatingPoint) -> float:
    """Return the merit product ``SNR·η_tot`` at the operating point ``point``"""
    spec = spec.with_xi(point.xi)
    return snr(spec, det, port, point.n0) * total_security(spec, point.n0)


def n0_for_snr(spec: CavitySpec, det: DetectorSpec, port: Port, target_snr: float) -> float:
    """Return the number of impinging photons needed to reach ``target_snr``"""
    if not (math.isfinite(target_snr) and target_snr >= 0.0):
        tpl = "Invalid value for target_snr: {} (must be a finite number >= 0)"
        raise InvalidSpec(tpl.format(target_snr), field="target_snr")
    signal, noise = _signal_and_noise(spec, det, port)
    if signal == 0.0:
        tpl = "Both object states give the same {} coefficient, SNR cannot be raised"
        raise ZeroContrast(tpl.format(port.value))
    return (target_snr * noise / signal) ** 2


def security_vs_snr_curve(
    spec: CavitySpec, det: DetectorSpec, port: Port, snr_grid: Iterable[float]
) -> List[Tuple[float, float]]:
    """Return pairs ``(snr, η_tot)`` with the total security remaining when the photon number is
    chosen to reach the SNR
    """
    snr_grid = [float(s) for s in snr_grid]
    if not snr_grid:
        raise EmptyGrid("SNR grid is empty")
    for value in snr_grid:
        if not value >= 0.0:
            tpl = "Invalid value for snr_grid: {} (must be >= 0)"
            raise InvalidSpec(tpl.format(value), field="snr_grid")
    return [(s, total_security(spec, n0_for_snr(spec, det, port, s))) for s in snr_grid]


def snr_for_security(spec: CavitySpec, det: DetectorSpec, port: Port, eta_tot: float) -> float:
    """Return the SNR reachable with the largest photon number that keeps the total security at
    ``eta_tot``
    """
    if not 0.0 < eta_tot <= 1.0:
        tpl = "Invalid value for eta_tot: {} (must be in (0, 1])"
        raise InvalidSpec(tpl.format(eta_tot), field="eta_tot")
    absorption = port_coefficients(spec, ObjectState.PRESENT).A
    if absorption == 0.0:
        raise UnboundedInN0("No absorption, any SNR is reachable at unit security")
    if absorption >= 1.0 or eta_tot == 1.0:
        n0 = 0.0
    else:
        n0 = math.log(eta_tot) / math.log1p(-absorption)
    return snr(spec, det, port, n0)


def measurement_time(n0: float, photon_flux: float) -> float:
    """Return the time in seconds to send ``n0`` photons at ``photon_flux`` photons per second"""
    _check_n0(n0)
    if not photon_flux > 0.0:
        tpl = "Invalid value for photon_flux: {} (must be > 0)"
        raise InvalidSpec(tpl.format(photon_flux), field="photon_flux")
    return n0 / photon_flux


def as_detectors(det: Union[DetectorSpec, Detectors]) -> Detectors:
    """Promote a single detector to identical detectors in both ports"""
    if isinstance(det, DetectorSpec):
        return Detectors.same(det)
    return det


def evaluate_metrics(
    spec: CavitySpec, detectors: Union[DetectorSpec, Detectors], point: OperatingPoint
) -> MetricsBundle:
    """Return all figures of merit at the operating point ``point``"""
    detectors = as_detectors(detectors)
    spec = spec.with_xi(point.xi)
    coeffs_absent = port_coefficients(spec, ObjectState.ABSENT)
    coeffs_present = port_coefficients(spec, ObjectState.PRESENT)
    eta = 1.0 - coeffs_present.A
    eta_tot = eta ** point.n0
    snrs = []
    for port in (Port.REFLECTION, Port.TRANSMISSION):
        signal, noise = port_signal_and_noise(
            coeffs_absent, coeffs_present, detectors.for_port(port), port
        )
        snrs.append(_snr(signal, noise, point.n0, port))
    return MetricsBundle(
        point=point,
        coeffs_A=coeffs_absent,
        coeffs_P=coeffs_present,
        eta=eta,
        eta_tot=eta_tot,
        snr=(snrs[0], snrs[1]),
        zeta=(snrs[0] * eta_tot, snrs[1] * eta_tot),
    )
