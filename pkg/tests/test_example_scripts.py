# -*- coding: utf-8 -*-
"""Smoke tests for the example scripts of the documentation"""

import warnings

import pytest

from docs.examples import reproduce_headline
from ifcavity.exceptions import IfcWarning


def test_reproduce_headline(tmp_path):
    with warnings.catch_warnings(record=True) as records:
        warnings.simplefilter("always")
        reports = reproduce_headline.reproduce_and_write(str(tmp_path))

    assert (tmp_path / "sweep-xi.csv").exists()
    assert (tmp_path / "optimize.csv").exists()
    assert (tmp_path / "security-curve.csv").exists()
    assert [] == [r for r in records if issubclass(r.category, IfcWarning)]

    # Port, search and the coupling efficiency of the two conditional maxima
    (reflection, transmission) = reports
    assert reflection[2] == pytest.approx(0.4, abs=0.05)
    assert transmission[2] == pytest.approx(0.03, abs=0.02)
