# -*- coding: utf-8 -*-
"""Tests for the exception and warning hierarchy"""


import pytest

from ifcavity import exceptions


@pytest.mark.parametrize(
    "exception",
    [
        exceptions.InvalidSpec,
        exceptions.DegenerateNoise,
        exceptions.ZeroContrast,
        exceptions.UnboundedInN0,
        exceptions.NoConvergence,
        exceptions.EmptyGrid,
        exceptions.ParseConfigException,
        exceptions.WriteOutputException,
    ],
)
def test_exceptions_share_base(exception):
    assert issubclass(exception, exceptions.IfcException)


@pytest.mark.parametrize(
    "warning",
    [
        exceptions.AdvisoryIfcValidationWarning,
        exceptions.ModerateIfcValidationWarning,
        exceptions.CriticalIfcValidationWarning,
    ],
)
def test_validation_warnings(warning):
    assert issubclass(warning, exceptions.IfcValidationWarning)
    assert issubclass(warning, exceptions.IfcWarning)


def test_invalid_spec_field():
    error = exceptions.InvalidSpec("Invalid value for chi: 0 (must be in (0, 1])", field="chi")

    assert "chi" == error.field
    assert "Invalid value for chi: 0 (must be in (0, 1])" == str(error)
    assert exceptions.InvalidSpec("no field").field is None
