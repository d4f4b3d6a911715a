# -*- coding: utf-8 -*-
"""Shared code for the tests.
"""

import os.path
import pytest

from ifcavity.detection.models import CavitySpec, DetectorSpec, Detectors, OptomechanicalParams


def data_path(name):
    return os.path.join(os.path.dirname(__file__), "data", name)


@pytest.fixture
def fig2_spec():
    """The headline system: critically coupled empty cavity with a semitransparent object"""
    return CavitySpec(
        kappa_A=1.5e7,
        kappa_3=6.5e6,
        delta_A=0.0,
        delta_P=2e7,
        epsilon_A=1.0,
        epsilon_P=0.2,
        xi=0.5,
    )


@pytest.fixture
def no_object_spec():
    """Nothing in the cavity, both states are identical"""
    return CavitySpec(
        kappa_A=1.5e7, kappa_3=0.0, delta_A=0.0, delta_P=0.0, epsilon_A=1.0, epsilon_P=1.0, xi=0.5
    )


@pytest.fixture
def detector():
    return DetectorSpec(chi=0.5, dark_ratio=1e-3)


@pytest.fixture
def detectors(detector):
    return Detectors.same(detector)


@pytest.fixture
def membrane_params():
    """Membrane with a moderate radiation pressure shift of the detuning"""
    return OptomechanicalParams(
        g0=62.83185307179586,
        omega_m=6283185.307179586,
        omega_c=1.77e15,
        cavity_length=0.01,
        r_m=0.5,
        x_zpf=1e-15,
        drive_photon_flux=8e18,
    )


@pytest.fixture
def fig2_config_file():
    with open(data_path("fig2.txt"), "rt") as file:
        yield file


@pytest.fixture
def warnings_config_file():
    with open(data_path("warnings.txt"), "rt") as file:
        yield file


@pytest.fixture
def optomechanics_config_file():
    with open(data_path("optomechanics.txt"), "rt") as file:
        yield file


@pytest.fixture
def small_montecarlo_config_file():
    with open(data_path("small_montecarlo.txt"), "rt") as file:
        yield file


def random_spec(rng, **kwargs):
    """Draw a valid cavity with log-uniform rates and detunings; ``kwargs`` fix single fields"""

    def log_uniform(lo, hi):
        return float(10.0 ** rng.uniform(lo, hi))

    def signed(value):
        return value if rng.uniform() < 0.5 else -value

    kappa_A = log_uniform(4.0, 10.0)
    values = {
        "kappa_A": kappa_A,
        "kappa_3": kappa_A * log_uniform(-3.0, 3.0),
        "delta_A": signed(kappa_A * log_uniform(-3.0, 1.0)),
        "delta_P": signed(kappa_A * log_uniform(-3.0, 2.0)),
        "epsilon_A": float(rng.uniform(0.0, 1.0)),
        "epsilon_P": float(rng.uniform(0.0, 1.0)),
        "xi": float(rng.uniform(1e-3, 1.0 - 1e-3)),
    }
    values.update(kwargs)
    return CavitySpec(**values)


def random_detector(rng):
    return DetectorSpec(
        chi=float(rng.uniform(0.1, 1.0)), dark_ratio=float(10.0 ** rng.uniform(-6.0, -1.0))
    )
