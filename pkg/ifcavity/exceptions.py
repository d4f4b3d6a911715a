# -*- coding: utf-8 -*-
"""
Exceptions and Warnings used in the ifcavity library.
"""


class IfcException(Exception):
    """Base class for exceptions raised by ifcavity."""


class InvalidSpec(IfcException):
    """Exception raised when a parameter set violates one of its invariants.

    The offending field is available as ``field``.
    """

    def __init__(self, msg, field=None):
        super().__init__(msg)
        #: Name of the field that failed validation
        self.field = field


class DegenerateNoise(IfcException):
    """Exception raised when the SNR noise term vanishes (no signal and no dark counts)."""


class ZeroContrast(IfcException):
    """Exception raised when a port's coefficient is identical with and without object."""


class UnboundedInN0(IfcException):
    """Exception raised when the merit product has no maximum in the photon number."""


class NoConvergence(IfcException):
    """Exception raised when a numerical solver misses its tolerance."""


class EmptyGrid(IfcException):
    """Exception raised when an optimization or sweep is given an empty grid."""


class ParseConfigException(IfcException):
    """Exception raised on problems parsing a run configuration file."""


class WriteOutputException(IfcException):
    """Exception raised on problems writing result tables or manifests."""


class IfcWarning(Warning):
    """Base class for warnings raised by ifcavity."""


class ParseConfigWarning(IfcWarning):
    """Warning raised on problems parsing a run configuration file."""


class WriteOutputWarning(IfcWarning):
    """Warning raised on problems writing result tables or manifests."""


class IfcValidationWarning(IfcWarning):
    """Warning raised on problems validating a run configuration."""


class AdvisoryIfcValidationWarning(IfcValidationWarning):
    """Warning raised on uncritical deviations from the modelled operating regime."""


class ModerateIfcValidationWarning(IfcValidationWarning):
    """Warning raised when results may be limited by the configuration."""


class CriticalIfcValidationWarning(IfcValidationWarning):
    """Warning raised when a requested quantity is undefined for the configuration."""
