# -*- coding: utf-8 -*-
"""Code for writing run configuration files.

The written file can be read back with ``ConfigReader`` and reproduces the configuration exactly;
floating point values are written in their shortest round-trip representation.
"""

import csv
import os
from typing import Dict, List, TextIO

from ..constants import config_keys as keys
from ..detection.models import DetectorSpec
from .models import RunConfig

__author__ = "ifcavity developers"


def _format(value) -> str:
    if value is None:
        return ""
    elif isinstance(value, bool):
        return "true" if value else "false"
    elif isinstance(value, float):
        return repr(value)
    else:
        return str(value)


def _detector_section(det: DetectorSpec) -> Dict[str, List[str]]:
    return {keys.CHI: [_format(det.chi)], keys.DARK_RATIO: [_format(det.dark_ratio)]}


def config_sections(config: RunConfig) -> Dict[str, Dict[str, List[str]]]:
    """Return the configuration as section name -> key -> values, in writing order"""
    cavity = config.cavity
    sweep = config.sweep_xi
    optimize = config.optimize
    curve = config.security_curve
    param_map = config.param_map
    montecarlo = config.montecarlo
    run = config.run
    sections = {
        keys.CAVITY: {
            keys.KAPPA_A_HZ: cavity.kappa_A,
            keys.KAPPA_3_HZ: cavity.kappa_3,
            keys.DELTA_A_HZ: cavity.delta_A,
            keys.DELTA_P_HZ: cavity.delta_P,
            keys.EPSILON_A: cavity.epsilon_A,
            keys.EPSILON_P: cavity.epsilon_P,
            keys.XI: cavity.xi,
        },
        keys.DETECTOR_REFLECTION: _detector_section(config.detectors.reflection),
        keys.DETECTOR_TRANSMISSION: _detector_section(config.detectors.transmission),
    }
    if config.optomechanics is not None:
        params = config.optomechanics
        sections[keys.OPTOMECHANICS] = {
            keys.G0_RAD_S: params.g0,
            keys.OMEGA_M_RAD_S: params.omega_m,
            keys.OMEGA_C_RAD_S: params.omega_c,
            keys.CAVITY_LENGTH_M: params.cavity_length,
            keys.R_M: params.r_m,
            keys.X_ZPF_M: params.x_zpf,
            keys.DRIVE_PHOTON_FLUX_PER_S: params.drive_photon_flux,
        }
    sections.update(
        {
            keys.SWEEP_XI: {
                keys.XI_MIN: sweep.xi_min,
                keys.XI_MAX: sweep.xi_max,
                keys.XI_COUNT: sweep.xi_count,
                keys.N0_VALUES: list(sweep.n0_values),
                keys.PLANE_COUNT: sweep.plane_count,
            },
            keys.OPTIMIZE: {
                keys.N0_MIN: optimize.n0_min,
                keys.N0_MAX: optimize.n0_max,
                keys.MIN_ETA_TOT: optimize.min_eta_tot,
                keys.MIN_SNR: optimize.min_snr,
            },
            keys.SECURITY_CURVE: {
                keys.SNR_MIN: curve.snr_min,
                keys.SNR_MAX: curve.snr_max,
                keys.SNR_COUNT: curve.snr_count,
                keys.XI_REFLECTION: curve.xi_reflection,
                keys.XI_TRANSMISSION: curve.xi_transmission,
            },
            keys.PARAMETER_MAP: {
                keys.KAPPA3_MIN_HZ: param_map.kappa3_min_hz,
                keys.KAPPA3_MAX_HZ: param_map.kappa3_max_hz,
                keys.KAPPA3_COUNT: param_map.kappa3_count,
                keys.DELTAP_MIN_HZ: param_map.deltap_min_hz,
                keys.DELTAP_MAX_HZ: param_map.deltap_max_hz,
                keys.DELTAP_COUNT: param_map.deltap_count,
                keys.CONDITIONAL: param_map.conditional,
            },
            keys.MONTE_CARLO: {
                keys.N0_VALUES: list(montecarlo.n0_values),
                keys.TRIALS: montecarlo.trials,
                keys.SEED: montecarlo.seed,
            },
            keys.RUN: {
                keys.PHOTON_FLUX_PER_S: run.photon_flux,
                keys.THREADS: run.threads,
                keys.OUTPUT_FORMAT: run.output_format,
            },
        }
    )
    return {
        name: {
            key: [_format(v) for v in value] if isinstance(value, list) else [_format(value)]
            for key, value in section.items()
        }
        for name, section in sections.items()
    }


class ConfigWriter:
    """
    Main class to write a run configuration file from a ``RunConfig`` object.

    :type config: RunConfig
    :param config: The configuration to write
    :type output_file: TextIO
    :param output_file: Output configuration file
    :type lineterminator: str
    :param lineterminator: Optional line terminator (OS specific by default)
    """

    @classmethod
    def from_stream(cls, config: RunConfig, output_file: TextIO, lineterminator=None):
        """Construct from file-like object"""
        return ConfigWriter(config, output_file, lineterminator)

    def __init__(self, config: RunConfig, output_file: TextIO, lineterminator=None):
        self.config = config
        self.output_file = output_file
        self._writer = csv.writer(
            output_file,
            delimiter="\t",
            lineterminator=lineterminator or os.linesep,
            quoting=csv.QUOTE_NONE,
            escapechar="\\",
            quotechar="|",
        )

    def write(self):
        """Write configuration file"""
        for i, (name, section) in enumerate(config_sections(self.config).items()):
            if i:
                self._writer.writerow(())
            self._writer.writerow((name,))
            for key, values in section.items():
                self._writer.writerow((key, *values))
