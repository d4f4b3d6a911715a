# -*- coding: utf-8 -*-
"""Code for parsing run configuration files.

A configuration file consists of sections.  Each section starts with a line holding the section
name in capitals and continues with one ``key<TAB>value`` line per setting.  Lines starting with
``'#'`` and blank lines are skipped.  Keys that are not given, and keys without a value, take
their default value.
"""

import csv
from typing import Dict, List, Optional, TextIO
import warnings

import attr

from ..constants import config_keys as keys
from ..detection.models import CavitySpec, DetectorSpec, Detectors, OptomechanicalParams
from ..exceptions import ParseConfigException, ParseConfigWarning
from .models import (
    MonteCarloSettings,
    OptimizeSettings,
    ParamMapSettings,
    RunConfig,
    RunSettings,
    SecurityCurveSettings,
    XiSweepSettings,
    default_cavity_spec,
    default_detectors,
)

__author__ = "ifcavity developers"


#: Type of a parsed section, the values of each key
Section = Dict[str, List[str]]

#: Marker for "no value given" in a section
_MISSING = object()


class ConfigReader:
    """
    Main class to read a run configuration file into a ``RunConfig`` object.

    :type input_file: TextIO
    :param input_file: Run configuration file
    """

    @classmethod
    def from_stream(cls, input_file: TextIO, filename: Optional[str] = None):
        """Construct from file-like object"""
        return ConfigReader(input_file, filename)

    def __init__(self, input_file: TextIO, filename: Optional[str] = None):
        self._input_file = input_file
        self._filename = filename or getattr(input_file, "name", "<stream>")
        self._reader = csv.reader(input_file, delimiter="\t", quotechar='"')
        self._line = None
        self._read_next_line()

    def _read_next_line(self):
        """Read next line, skipping comments starting with ``'#'`` and blank lines."""
        prev_line = self._line
        try:
            self._line = next(self._reader)
            while self._line is not None and (
                not any(cell.strip() for cell in self._line) or self._line[0].startswith("#")
            ):
                self._line = next(self._reader)
        except StopIteration:
            self._line = None
        return prev_line

    def _next_line_is_section(self):
        return self._line is not None and self._line[0].strip().isupper()

    def read(self) -> RunConfig:
        """
        Read the configuration file

        :rtype: RunConfig
        :returns: Run configuration with defaults for everything not given in the file
        """
        sections = {}
        while self._line is not None:
            if not self._next_line_is_section():
                tpl = "Expected a section name in {} but got {}"
                msg = tpl.format(self._filename, self._line)
                raise ParseConfigException(msg)
            name = self._read_next_line()[0].strip()
            if name not in keys.SECTION_KEYS:
                tpl = "Unknown section {} in {}; expected one of {}"
                msg = tpl.format(name, self._filename, list(keys.SECTION_KEYS))
                raise ParseConfigException(msg)
            if name in sections:
                tpl = "Section {} repeated in {}"
                msg = tpl.format(name, self._filename)
                raise ParseConfigException(msg)
            sections[name] = self._read_section(name)
        return _build_config(sections)

    def _read_section(self, name: str) -> Section:
        section = {}
        ref_keys = keys.SECTION_KEYS[name]
        while self._line is not None and not self._next_line_is_section():
            line = [cell.strip() for cell in self._read_next_line()]
            key, values = line[0], [v for v in line[1:] if v]
            if key not in ref_keys:
                tpl = "Unknown key {} in section {}; expected one of {}"
                msg = tpl.format(key, name, list(ref_keys))
                raise ParseConfigException(msg)
            if key in section:
                tpl = 'Key {} repeated in section {}, previous value "{}"'
                msg = tpl.format(key, name, "\t".join(section[key]))
                raise ParseConfigException(msg)
            if len(values) > 1 and key not in keys.MULTI_VALUE_KEYS:
                tpl = "Key {} in section {} has more than one value: {}"
                msg = tpl.format(key, name, values)
                raise ParseConfigException(msg)
            section[key] = values
        if not section:
            tpl = "Section {} has no entries, using defaults"
            msg = tpl.format(name)
            warnings.warn(msg, ParseConfigWarning)
        return section


# Conversion of the section values -----------------------------------------------------------------


def _photon_count(value: str) -> int:
    """Photon numbers are integers when sampling; real values are rounded"""
    return int(round(float(value)))


def _flag(value: str) -> bool:
    """Booleans are written as ``true`` or ``false``"""
    if value.lower() not in ("true", "false"):
        raise ValueError(value)
    return value.lower() == "true"


def _convert(section_name: str, key: str, value: str, type_):
    try:
        return type_(value)
    except ValueError as e:
        tpl = 'Invalid {} for key {} in section {}: "{}"'
        kind = {int: "integer", _photon_count: "integer", _flag: "boolean"}.get(type_, "number")
        msg = tpl.format(kind, key, section_name, value)
        raise ParseConfigException(msg) from e


class _SectionValues:
    """Typed access to the values of one parsed section"""

    def __init__(self, name: str, section: Optional[Section]):
        self.name = name
        self.section = section or {}

    def _raw(self, key: str):
        values = self.section.get(key)
        return values[0] if values else _MISSING

    def number(self, key: str, type_=float):
        """Return the converted value or ``_MISSING``"""
        raw = self._raw(key)
        return raw if raw is _MISSING else _convert(self.name, key, raw, type_)

    def optional(self, key: str):
        """Return the float value, ``None`` for an empty value or ``_MISSING`` for no key"""
        if key not in self.section:
            return _MISSING
        raw = self._raw(key)
        return None if raw is _MISSING else _convert(self.name, key, raw, float)

    def numbers(self, key: str, type_=float):
        values = self.section.get(key)
        if not values:
            return _MISSING
        return tuple(_convert(self.name, key, v, type_) for v in values)

    def text(self, key: str):
        return self._raw(key)

    def required(self, key: str, type_=float):
        value = self.number(key, type_)
        if value is _MISSING:
            tpl = "Missing value for key {} in section {}"
            msg = tpl.format(key, self.name)
            raise ParseConfigException(msg)
        return value


def _given(**kwargs):
    """Drop all arguments that were not given so the model defaults apply"""
    return {k: v for k, v in kwargs.items() if v is not _MISSING}


def _build_cavity(values: _SectionValues) -> CavitySpec:
    return attr.evolve(
        default_cavity_spec(),
        **_given(
            kappa_A=values.number(keys.KAPPA_A_HZ),
            kappa_3=values.number(keys.KAPPA_3_HZ),
            delta_A=values.number(keys.DELTA_A_HZ),
            delta_P=values.number(keys.DELTA_P_HZ),
            epsilon_A=values.number(keys.EPSILON_A),
            epsilon_P=values.number(keys.EPSILON_P),
            xi=values.number(keys.XI),
        ),
    )


def _build_detector(values: _SectionValues, default: DetectorSpec) -> DetectorSpec:
    return attr.evolve(
        default, **_given(chi=values.number(keys.CHI), dark_ratio=values.number(keys.DARK_RATIO))
    )


def _build_optomechanics(values: _SectionValues) -> OptomechanicalParams:
    return OptomechanicalParams(
        g0=values.required(keys.G0_RAD_S),
        omega_m=values.required(keys.OMEGA_M_RAD_S),
        omega_c=values.required(keys.OMEGA_C_RAD_S),
        cavity_length=values.required(keys.CAVITY_LENGTH_M),
        r_m=values.required(keys.R_M),
        x_zpf=values.required(keys.X_ZPF_M),
        drive_photon_flux=values.required(keys.DRIVE_PHOTON_FLUX_PER_S),
    )


def _build_config(sections: Dict[str, Section]) -> RunConfig:
    def values(name):
        return _SectionValues(name, sections.get(name))

    detectors = default_detectors()
    cavity = values(keys.CAVITY)
    sweep = values(keys.SWEEP_XI)
    optimize = values(keys.OPTIMIZE)
    curve = values(keys.SECURITY_CURVE)
    param_map = values(keys.PARAMETER_MAP)
    montecarlo = values(keys.MONTE_CARLO)
    run = values(keys.RUN)
    return RunConfig(
        cavity=_build_cavity(cavity),
        detectors=Detectors(
            reflection=_build_detector(values(keys.DETECTOR_REFLECTION), detectors.reflection),
            transmission=_build_detector(
                values(keys.DETECTOR_TRANSMISSION), detectors.transmission
            ),
        ),
        optomechanics=(
            _build_optomechanics(values(keys.OPTOMECHANICS))
            if keys.OPTOMECHANICS in sections
            else None
        ),
        sweep_xi=XiSweepSettings(
            **_given(
                xi_min=sweep.number(keys.XI_MIN),
                xi_max=sweep.number(keys.XI_MAX),
                xi_count=sweep.number(keys.XI_COUNT, int),
                n0_values=sweep.numbers(keys.N0_VALUES),
                plane_count=sweep.number(keys.PLANE_COUNT, int),
            )
        ),
        optimize=OptimizeSettings(
            **_given(
                n0_min=optimize.number(keys.N0_MIN),
                n0_max=optimize.number(keys.N0_MAX),
                min_eta_tot=optimize.optional(keys.MIN_ETA_TOT),
                min_snr=optimize.optional(keys.MIN_SNR),
            )
        ),
        security_curve=SecurityCurveSettings(
            **_given(
                snr_min=curve.number(keys.SNR_MIN),
                snr_max=curve.number(keys.SNR_MAX),
                snr_count=curve.number(keys.SNR_COUNT, int),
                xi_reflection=curve.optional(keys.XI_REFLECTION),
                xi_transmission=curve.optional(keys.XI_TRANSMISSION),
            )
        ),
        param_map=ParamMapSettings(
            **_given(
                kappa3_min_hz=param_map.number(keys.KAPPA3_MIN_HZ),
                kappa3_max_hz=param_map.number(keys.KAPPA3_MAX_HZ),
                kappa3_count=param_map.number(keys.KAPPA3_COUNT, int),
                deltap_min_hz=param_map.number(keys.DELTAP_MIN_HZ),
                deltap_max_hz=param_map.number(keys.DELTAP_MAX_HZ),
                deltap_count=param_map.number(keys.DELTAP_COUNT, int),
                conditional=param_map.number(keys.CONDITIONAL, _flag),
            )
        ),
        montecarlo=MonteCarloSettings(
            **_given(
                n0_values=montecarlo.numbers(keys.N0_VALUES, _photon_count),
                trials=montecarlo.number(keys.TRIALS, int),
                seed=montecarlo.number(keys.SEED, int),
            )
        ),
        run=RunSettings(
            **_given(
                photon_flux=run.optional(keys.PHOTON_FLUX_PER_S),
                threads=run.number(keys.THREADS, int),
                output_format=run.text(keys.OUTPUT_FORMAT),
            )
        ),
    )

