# -*- coding: utf-8 -*-
"""Models of the run configuration and of the run manifest.

The configuration mirrors the sections of the configuration file; every section is an immutable
``attrs`` object that checks its values on construction and falls back to the defaults of the
headline system for values that are not given.
"""

import math
from typing import Any, Dict, Optional, Tuple

import attr

from ..constants import config_keys as keys
from ..constants import defaults
from ..detection.models import (
    Axis,
    CavitySpec,
    Constraints,
    DetectorSpec,
    Detectors,
    OptomechanicalParams,
    check_field,
)

__author__ = "ifcavity developers"

#: Output formats of the result tables
OUTPUT_FORMATS = ("csv", "json")


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _check_count(field: str, value):
    check_field(_is_int(value) and value >= 1, field, value, "an int >= 1")


def _check_range(field_min: str, value_min, field_max: str, value_max, count: int):
    for field, value in ((field_min, value_min), (field_max, value_max)):
        check_field(math.isfinite(value), field, value, "a finite number")
    if count == 1:
        check_field(value_max >= value_min, field_max, value_max, ">= {}".format(field_min))
    else:
        check_field(value_max > value_min, field_max, value_max, "> {}".format(field_min))


def default_cavity_spec() -> CavitySpec:
    """Return the cavity and object of the headline system"""
    return CavitySpec(
        kappa_A=defaults.KAPPA_A_HZ,
        kappa_3=defaults.KAPPA_3_HZ,
        delta_A=defaults.DELTA_A_HZ,
        delta_P=defaults.DELTA_P_HZ,
        epsilon_A=defaults.EPSILON_A,
        epsilon_P=defaults.EPSILON_P,
        xi=defaults.XI,
    )


def default_detectors() -> Detectors:
    return Detectors.same(DetectorSpec(chi=defaults.CHI, dark_ratio=defaults.DARK_RATIO))


@attr.s(auto_attribs=True, frozen=True)
class XiSweepSettings:
    """Grid of coupling efficiencies and photon numbers of the line cuts"""

    def __attrs_post_init__(self):
        _check_count(keys.XI_COUNT, self.xi_count)
        _check_range(keys.XI_MIN, self.xi_min, keys.XI_MAX, self.xi_max, self.xi_count)
        check_field(0.0 < self.xi_min, keys.XI_MIN, self.xi_min, "in (0, 1)")
        check_field(self.xi_max < 1.0, keys.XI_MAX, self.xi_max, "in (0, 1)")
        check_field(bool(self.n0_values), keys.N0_VALUES, self.n0_values, "non-empty")
        for n0 in self.n0_values:
            check_field(math.isfinite(n0) and n0 >= 0.0, keys.N0_VALUES, n0, ">= 0")
        ok = _is_int(self.plane_count) and self.plane_count >= 0
        check_field(ok, keys.PLANE_COUNT, self.plane_count, "an int >= 0")

    #: Smallest coupling efficiency
    xi_min: float = defaults.XI_MIN
    #: Largest coupling efficiency
    xi_max: float = defaults.XI_MAX
    #: Number of coupling efficiencies
    xi_count: int = defaults.XI_COUNT
    #: Photon numbers of the line cuts
    n0_values: Tuple[float, ...] = defaults.SWEEP_N0_VALUES
    #: Number of log-spaced photon numbers of the (ξ, N₀) plane over the optimizer range, 0 for
    #: line cuts only
    plane_count: int = defaults.PLANE_COUNT

    @property
    def xi_axis(self) -> Axis:
        return Axis.linear("xi", self.xi_min, self.xi_max, self.xi_count)


@attr.s(auto_attribs=True, frozen=True)
class OptimizeSettings:
    """Photon number range and constraints of the conditional maxima"""

    def __attrs_post_init__(self):
        _check_range(keys.N0_MIN, self.n0_min, keys.N0_MAX, self.n0_max, 1)
        check_field(self.n0_min >= 0.0, keys.N0_MIN, self.n0_min, ">= 0")
        if self.min_eta_tot is not None:
            ok = math.isfinite(self.min_eta_tot) and 0.0 <= self.min_eta_tot <= 1.0
            check_field(ok, keys.MIN_ETA_TOT, self.min_eta_tot, "in [0, 1]")
        if self.min_snr is not None:
            ok = math.isfinite(self.min_snr) and self.min_snr >= 0.0
            check_field(ok, keys.MIN_SNR, self.min_snr, ">= 0")

    #: Smallest photon number
    n0_min: float = defaults.N0_MIN
    #: Largest photon number
    n0_max: float = defaults.N0_MAX
    #: Lowest acceptable total security, ``None`` for no constraint
    min_eta_tot: Optional[float] = defaults.MIN_ETA_TOT
    #: Lowest acceptable SNR, ``None`` for no constraint
    min_snr: Optional[float] = defaults.MIN_SNR

    @property
    def n0_range(self) -> Tuple[float, float]:
        return self.n0_min, self.n0_max

    @property
    def constraints(self) -> Constraints:
        return Constraints(min_eta_tot=self.min_eta_tot, min_snr=self.min_snr)


@attr.s(auto_attribs=True, frozen=True)
class SecurityCurveSettings:
    """SNR grid of the security curves and the coupling efficiency per port"""

    def __attrs_post_init__(self):
        _check_count(keys.SNR_COUNT, self.snr_count)
        _check_range(keys.SNR_MIN, self.snr_min, keys.SNR_MAX, self.snr_max, self.snr_count)
        check_field(self.snr_min >= 0.0, keys.SNR_MIN, self.snr_min, ">= 0")
        for field, xi in (
            (keys.XI_REFLECTION, self.xi_reflection),
            (keys.XI_TRANSMISSION, self.xi_transmission),
        ):
            if xi is not None:
                check_field(0.0 < xi < 1.0, field, xi, "in (0, 1)")

    #: Smallest SNR
    snr_min: float = defaults.SNR_MIN
    #: Largest SNR
    snr_max: float = defaults.SNR_MAX
    #: Number of SNR values
    snr_count: int = defaults.SNR_COUNT
    #: Coupling efficiency of the reflection curve, ``None`` for the conditional optimum
    xi_reflection: Optional[float] = None
    #: Coupling efficiency of the transmission curve, ``None`` for the conditional optimum
    xi_transmission: Optional[float] = None

    @property
    def snr_axis(self) -> Axis:
        return Axis.linear("snr", self.snr_min, self.snr_max, self.snr_count)


@attr.s(auto_attribs=True, frozen=True)
class ParamMapSettings:
    """Logarithmic (κ₃, Δ_P) grid of the regime maps"""

    def __attrs_post_init__(self):
        _check_count(keys.KAPPA3_COUNT, self.kappa3_count)
        _check_count(keys.DELTAP_COUNT, self.deltap_count)
        _check_range(
            keys.KAPPA3_MIN_HZ,
            self.kappa3_min_hz,
            keys.KAPPA3_MAX_HZ,
            self.kappa3_max_hz,
            self.kappa3_count,
        )
        _check_range(
            keys.DELTAP_MIN_HZ,
            self.deltap_min_hz,
            keys.DELTAP_MAX_HZ,
            self.deltap_max_hz,
            self.deltap_count,
        )
        check_field(self.kappa3_min_hz > 0.0, keys.KAPPA3_MIN_HZ, self.kappa3_min_hz, "> 0")
        check_field(self.deltap_min_hz > 0.0, keys.DELTAP_MIN_HZ, self.deltap_min_hz, "> 0")
        ok = isinstance(self.conditional, bool)
        check_field(ok, keys.CONDITIONAL, self.conditional, "true or false")

    #: Smallest absorption decay rate in Hz
    kappa3_min_hz: float = defaults.KAPPA3_MIN_HZ
    #: Largest absorption decay rate in Hz
    kappa3_max_hz: float = defaults.KAPPA3_MAX_HZ
    #: Number of absorption decay rates
    kappa3_count: int = defaults.KAPPA3_COUNT
    #: Smallest detuning with the object present in Hz
    deltap_min_hz: float = defaults.DELTAP_MIN_HZ
    #: Largest detuning with the object present in Hz
    deltap_max_hz: float = defaults.DELTAP_MAX_HZ
    #: Number of detunings
    deltap_count: int = defaults.DELTAP_COUNT
    #: Map the maxima under the OPTIMIZE constraints instead of the global maxima
    conditional: bool = defaults.CONDITIONAL

    @property
    def kappa3_axis(self) -> Axis:
        return Axis.log("kappa3", self.kappa3_min_hz, self.kappa3_max_hz, self.kappa3_count)

    @property
    def deltap_axis(self) -> Axis:
        return Axis.log("deltap", self.deltap_min_hz, self.deltap_max_hz, self.deltap_count)


@attr.s(auto_attribs=True, frozen=True)
class MonteCarloSettings:
    """Photon numbers, number of trials and master seed of the sampled experiments"""

    def __attrs_post_init__(self):
        check_field(bool(self.n0_values), keys.N0_VALUES, self.n0_values, "non-empty")
        for n0 in self.n0_values:
            check_field(_is_int(n0) and n0 >= 0, keys.N0_VALUES, n0, "an int >= 0")
        _check_count(keys.TRIALS, self.trials)
        ok = _is_int(self.seed) and 0 <= self.seed < 2 ** 64
        check_field(ok, keys.SEED, self.seed, "an unsigned 64 bit integer")

    #: Photon numbers
    n0_values: Tuple[int, ...] = defaults.MONTECARLO_N0_VALUES
    #: Trials per photon number and port
    trials: int = defaults.TRIALS
    #: Master seed
    seed: int = defaults.SEED


@attr.s(auto_attribs=True, frozen=True)
class RunSettings:
    """Settings of the run itself"""

    def __attrs_post_init__(self):
        if self.photon_flux is not None:
            ok = math.isfinite(self.photon_flux) and self.photon_flux > 0.0
            check_field(ok, keys.PHOTON_FLUX_PER_S, self.photon_flux, "> 0")
        _check_count(keys.THREADS, self.threads)
        if self.output_format is not None:
            check_field(
                self.output_format in OUTPUT_FORMATS,
                keys.OUTPUT_FORMAT,
                self.output_format,
                " or ".join(OUTPUT_FORMATS),
            )

    #: Input photon flux C₀ in photons/s, optional
    photon_flux: Optional[float] = None
    #: Number of worker threads
    threads: int = defaults.THREADS
    #: Format of the result tables, ``None`` for the format natural to each command
    output_format: Optional[str] = None


@attr.s(auto_attribs=True, frozen=True)
class RunConfig:
    """Complete configuration of a run; each field corresponds to one configuration section"""

    #: Cavity and object
    cavity: CavitySpec = attr.Factory(default_cavity_spec)
    #: Detectors of both accessible ports
    detectors: Detectors = attr.Factory(default_detectors)
    #: Physical parameters of a compliant object, optional
    optomechanics: Optional[OptomechanicalParams] = None
    #: Coupling efficiency sweep
    sweep_xi: XiSweepSettings = attr.Factory(XiSweepSettings)
    #: Optimization
    optimize: OptimizeSettings = attr.Factory(OptimizeSettings)
    #: Security curves
    security_curve: SecurityCurveSettings = attr.Factory(SecurityCurveSettings)
    #: Regime maps
    param_map: ParamMapSettings = attr.Factory(ParamMapSettings)
    #: Monte-Carlo validation
    montecarlo: MonteCarloSettings = attr.Factory(MonteCarloSettings)
    #: Run settings
    run: RunSettings = attr.Factory(RunSettings)

    @property
    def xi_axis(self) -> Axis:
        """Coupling efficiency grid shared by all commands"""
        return self.sweep_xi.xi_axis


@attr.s(auto_attribs=True, frozen=True)
class RunManifest:
    """Provenance record written alongside the outputs of every command"""

    #: Version of ifcavity
    tool_version: str
    #: Sub command that was run
    command: str
    #: Resolved configuration, section by section
    config: Dict[str, Dict[str, Any]]
    #: Seeds of all random draws
    seeds: Tuple[int, ...]
    #: Name of the random bit generator, if any was used
    random_generator: Optional[str]
    #: Wall-clock duration of the computation in seconds
    wall_clock_s: float
    #: UTC time stamp in ISO 8601 format
    timestamp: str
    #: SHA-256 hex digest per output file name
    outputs: Dict[str, str]
