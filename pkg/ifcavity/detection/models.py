# -*- coding: utf-8 -*-
"""Models for representing the cavity, the object, the detectors and the results of the
detection analysis as immutable ``attrs`` objects.

All rates and detunings are stored as ordinary frequencies, i.e. as the value of ``X/(2π)`` in
Hz. The cavity coefficients are homogeneous in rates and detunings, so no conversion is needed
there; the optomechanical solver converts to angular units internally.
"""

import enum
import math
from typing import Any, Callable, Dict, Iterator, Optional, Sequence, Tuple

import attr
import numpy as np

from ..exceptions import EmptyGrid, InvalidSpec


# Helpers for checking invariants ------------------------------------------------------------------


def check_field(condition: bool, field: str, value, requirement: str):
    if not condition:
        tpl = "Invalid value for {}: {} (must be {})"
        msg = tpl.format(field, value, requirement)
        raise InvalidSpec(msg, field=field)


def _check_finite(field: str, value):
    check_field(
        isinstance(value, (int, float, np.integer, np.floating)) and math.isfinite(value),
        field,
        value,
        "a finite number",
    )


def _check_fraction(field: str, value, lower_open=False, upper_open=False):
    _check_finite(field, value)
    lower_ok = value > 0.0 if lower_open else value >= 0.0
    upper_ok = value < 1.0 if upper_open else value <= 1.0
    requirement = "in {}0, 1{}".format("(" if lower_open else "[", ")" if upper_open else "]")
    check_field(lower_ok and upper_ok, field, value, requirement)


# Enumerations -------------------------------------------------------------------------------------


class ObjectState(enum.Enum):
    """Whether the object is inside the cavity or not"""

    #: Empty cavity
    ABSENT = "absent"
    #: Object inside the cavity
    PRESENT = "present"


class Port(enum.Enum):
    """Accessible cavity output port in which a detector is placed"""

    #: Port 1, light reflected off the input mirror
    REFLECTION = "reflection"
    #: Port 2, light transmitted through the end mirror
    TRANSMISSION = "transmission"

    @property
    def index(self) -> int:
        """Port number, 1 for reflection and 2 for transmission"""
        return 1 if self is Port.REFLECTION else 2

    def select(self, coeffs: "PortCoefficients") -> float:
        """Return the coefficient this port detects (``R`` or ``T``)"""
        return coeffs.R if self is Port.REFLECTION else coeffs.T


# Cavity and object --------------------------------------------------------------------------------


@attr.s(auto_attribs=True, frozen=True)
class CavitySpec:
    """Fabry-Perot cavity with (optionally) an object inside.

    The mirror decay rates are parameterized by the empty cavity coupling efficiency
    ``xi = κ₁/(κ₁ + κ₂)`` such that ``κ₁ = xi·κ_A`` and ``κ₂ = (1 - xi)·κ_A``.
    """

    def __attrs_post_init__(self):
        _check_finite("kappa_A", self.kappa_A)
        check_field(self.kappa_A > 0.0, "kappa_A", self.kappa_A, "> 0")
        _check_finite("kappa_3", self.kappa_3)
        check_field(self.kappa_3 >= 0.0, "kappa_3", self.kappa_3, ">= 0")
        _check_finite("delta_A", self.delta_A)
        _check_finite("delta_P", self.delta_P)
        _check_fraction("epsilon_A", self.epsilon_A)
        _check_fraction("epsilon_P", self.epsilon_P)
        _check_fraction("xi", self.xi, lower_open=True, upper_open=True)

    #: Empty cavity total decay rate κ_A/(2π) in Hz
    kappa_A: float
    #: Decay rate due to absorption by the object κ₃/(2π) in Hz; zero means no object
    kappa_3: float
    #: Empty cavity detuning Δ_A/(2π) in Hz
    delta_A: float
    #: Detuning with the object present Δ_P/(2π) in Hz
    delta_P: float
    #: Mode-matching efficiency with the object absent
    epsilon_A: float
    #: Mode-matching efficiency with the object present
    epsilon_P: float
    #: Empty cavity coupling efficiency
    xi: float

    @property
    def kappa_1(self) -> float:
        """Decay rate through the input mirror κ₁/(2π) in Hz"""
        return self.xi * self.kappa_A

    @property
    def kappa_2(self) -> float:
        """Decay rate through the end mirror κ₂/(2π) in Hz"""
        return self.kappa_A - self.kappa_1

    @property
    def kappa_P(self) -> float:
        """Total decay rate with the object present κ_P/(2π) in Hz"""
        return self.kappa_A + self.kappa_3

    def for_state(self, state: ObjectState) -> Tuple[float, float, float, float]:
        """Return ``(κ, Δ, ε, κ₃)`` selected by ``state``"""
        if state is ObjectState.ABSENT:
            return self.kappa_A, self.delta_A, self.epsilon_A, 0.0
        else:
            return self.kappa_P, self.delta_P, self.epsilon_P, self.kappa_3

    def with_xi(self, xi: float) -> "CavitySpec":
        """Return a copy with the coupling efficiency replaced"""
        return attr.evolve(self, xi=xi)

    @classmethod
    def from_mirrors(
        cls,
        t1: float,
        t2: float,
        cavity_length: float,
        kappa_3: float = 0.0,
        delta_A: float = 0.0,
        delta_P: float = 0.0,
        epsilon_A: float = 1.0,
        epsilon_P: float = 1.0,
    ) -> "CavitySpec":
        """Construct from the power transmissivities of the two mirrors and the cavity length"""
        # Local import, the cavity module depends on this one
        from .cavity import mirror_decay_rate

        kappa_1 = mirror_decay_rate(t1, cavity_length)
        kappa_2 = mirror_decay_rate(t2, cavity_length)
        check_field(kappa_1 > 0.0 and kappa_2 > 0.0, "t1/t2", (t1, t2), "> 0 for both mirrors")
        return cls(
            kappa_A=kappa_1 + kappa_2,
            kappa_3=kappa_3,
            delta_A=delta_A,
            delta_P=delta_P,
            epsilon_A=epsilon_A,
            epsilon_P=epsilon_P,
            xi=t1 / (t1 + t2),
        )


@attr.s(auto_attribs=True, frozen=True)
class PortCoefficients:
    """Steady-state probabilities of a photon leaving through ports 1, 2 and 3"""

    #: Reflection coefficient (port 1)
    R: float
    #: Transmission coefficient (port 2)
    T: float
    #: Absorption coefficient (port 3, the object)
    A: float


@attr.s(auto_attribs=True, frozen=True)
class OptomechanicalParams:
    """Physical parameters of a mechanically compliant object (e.g., a membrane) in the cavity"""

    def __attrs_post_init__(self):
        _check_finite("g0", self.g0)
        check_field(self.g0 >= 0.0, "g0", self.g0, ">= 0")
        for name in ("omega_m", "omega_c", "cavity_length", "x_zpf", "drive_photon_flux"):
            value = getattr(self, name)
            _check_finite(name, value)
            check_field(value > 0.0, name, value, "> 0")
        _check_fraction("r_m", self.r_m)

    #: Vacuum optomechanical coupling rate in rad/s
    g0: float
    #: Mechanical mode frequency in rad/s
    omega_m: float
    #: Cavity resonance frequency in rad/s
    omega_c: float
    #: Cavity length in m
    cavity_length: float
    #: Membrane field reflectivity magnitude
    r_m: float
    #: Zero-point fluctuation amplitude in m
    x_zpf: float
    #: Incident drive power in photons/s
    drive_photon_flux: float


@attr.s(auto_attribs=True, frozen=True)
class SteadyStateSolution:
    """One branch of the optomechanical steady state"""

    #: Intracavity photon number |α|²
    alpha_sq: float
    #: Mechanical steady-state amplitude β
    beta: float
    #: Self-consistent detuning Δ_P/(2π) in Hz
    delta_shifted: float
    #: Number of real roots of the fixed-point cubic (3 means bistable)
    branch_count: int


# Detectors and operating points -------------------------------------------------------------------


@attr.s(auto_attribs=True, frozen=True)
class DetectorSpec:
    """Single photon detector in one of the accessible ports"""

    def __attrs_post_init__(self):
        _check_finite("chi", self.chi)
        check_field(0.0 < self.chi <= 1.0, "chi", self.chi, "in (0, 1]")
        _check_finite("dark_ratio", self.dark_ratio)
        check_field(self.dark_ratio >= 0.0, "dark_ratio", self.dark_ratio, ">= 0")

    #: Quantum efficiency χ_j
    chi: float
    #: Dark count rate relative to the input photon flux, D_j = C_j/C₀
    dark_ratio: float

    @classmethod
    def from_rates(cls, chi: float, dark_count_rate: float, photon_flux: float) -> "DetectorSpec":
        """Construct from the dark count rate C_j and the input photon flux C₀, both per second"""
        check_field(photon_flux > 0.0, "photon_flux", photon_flux, "> 0")
        return cls(chi=chi, dark_ratio=dark_count_rate / photon_flux)


@attr.s(auto_attribs=True, frozen=True)
class Detectors:
    """The detectors of both accessible ports"""

    #: Detector in port 1
    reflection: DetectorSpec
    #: Detector in port 2
    transmission: DetectorSpec

    def for_port(self, port: Port) -> DetectorSpec:
        if port is Port.REFLECTION:
            return self.reflection
        else:
            return self.transmission

    @classmethod
    def same(cls, det: DetectorSpec) -> "Detectors":
        """Use identical detectors in both ports"""
        return cls(reflection=det, transmission=det)


@attr.s(auto_attribs=True, frozen=True)
class OperatingPoint:
    """Coupling efficiency and number of impinging photons"""

    def __attrs_post_init__(self):
        _check_fraction("xi", self.xi, lower_open=True, upper_open=True)
        _check_finite("n0", self.n0)
        check_field(self.n0 >= 0.0, "n0", self.n0, ">= 0")

    #: Empty cavity coupling efficiency ξ
    xi: float
    #: Number of impinging photons N₀ = C₀·t (real-valued)
    n0: float


@attr.s(auto_attribs=True, frozen=True)
class MetricsBundle:
    """All figures of merit at one operating point"""

    #: The operating point
    point: OperatingPoint
    #: Coefficients with the object absent
    coeffs_A: PortCoefficients
    #: Coefficients with the object present
    coeffs_P: PortCoefficients
    #: Per-photon security η = 1 - A
    eta: float
    #: Total security η_tot = η^N₀
    eta_tot: float
    #: SNR in (reflection, transmission)
    snr: Tuple[float, float]
    #: Merit product ζ = SNR·η_tot in (reflection, transmission)
    zeta: Tuple[float, float]

    def snr_for(self, port: Port) -> float:
        return self.snr[port.index - 1]

    def zeta_for(self, port: Port) -> float:
        return self.zeta[port.index - 1]


# Optimization -------------------------------------------------------------------------------------


@attr.s(auto_attribs=True, frozen=True)
class Constraints:
    """Lower bounds for a conditional maximum; ``None`` disables a bound"""

    def __attrs_post_init__(self):
        if self.min_eta_tot is not None:
            _check_fraction("min_eta_tot", self.min_eta_tot)
        if self.min_snr is not None:
            _check_finite("min_snr", self.min_snr)
            check_field(self.min_snr >= 0.0, "min_snr", self.min_snr, ">= 0")

    #: Lowest acceptable total security
    min_eta_tot: Optional[float] = None
    #: Lowest acceptable SNR
    min_snr: Optional[float] = None

    @property
    def is_unconstrained(self) -> bool:
        return self.min_eta_tot is None and self.min_snr is None

    def is_satisfied(self, eta_tot: float, snr: float, rtol: float = 1e-9) -> bool:
        """Check the bounds, tolerating ``rtol`` relative round-off at an active bound"""
        if self.min_eta_tot is not None and eta_tot < self.min_eta_tot * (1.0 - rtol):
            return False
        if self.min_snr is not None and snr < self.min_snr * (1.0 - rtol):
            return False
        return True


@attr.s(auto_attribs=True, frozen=True)
class OptimumReport:
    """Maximum of ζ for one port"""

    #: Port the detector is placed in
    port: Port
    #: Coupling efficiency at the maximum
    xi_star: float
    #: Photon number at the maximum
    n0_star: float
    #: Value of ζ at the maximum
    zeta_star: float
    #: Total security at the maximum
    eta_tot_at_star: float
    #: SNR at the maximum
    snr_at_star: float
    #: Whether the constraints hold; if not, the unconstrained best point is reported
    feasible: bool


@attr.s(auto_attribs=True, frozen=True)
class Axis:
    """One strictly monotone axis of a sweep grid"""

    def __attrs_post_init__(self):
        if not self.values:
            tpl = "Axis {} has no grid points"
            raise EmptyGrid(tpl.format(self.name))
        for value in self.values:
            _check_finite(self.name, value)
        diffs = np.diff(np.asarray(self.values, dtype=float))
        check_field(
            bool(np.all(diffs > 0.0) or np.all(diffs < 0.0)),
            self.name,
            "[{} .. {}]".format(self.values[0], self.values[-1]),
            "strictly monotone",
        )
        check_field(self.scale in ("linear", "log"), self.name, self.scale, "'linear' or 'log'")

    #: Axis name, e.g. ``xi`` or ``kappa3``
    name: str
    #: Grid points
    values: Tuple[float, ...]
    #: Spacing of the grid points, ``linear`` or ``log``
    scale: str = "linear"

    @property
    def min(self) -> float:
        return min(self.values)

    @property
    def max(self) -> float:
        return max(self.values)

    @property
    def count(self) -> int:
        return len(self.values)

    @classmethod
    def linear(cls, name: str, start: float, stop: float, count: int) -> "Axis":
        """Linearly spaced axis including both end points"""
        if count < 1:
            tpl = "Axis {} has no grid points"
            raise EmptyGrid(tpl.format(name))
        return cls(name, tuple(float(v) for v in np.linspace(start, stop, count)), "linear")

    @classmethod
    def log(cls, name: str, start: float, stop: float, count: int) -> "Axis":
        """Logarithmically spaced axis including both end points"""
        if count < 1:
            tpl = "Axis {} has no grid points"
            raise EmptyGrid(tpl.format(name))
        check_field(start > 0.0 and stop > 0.0, name, (start, stop), "> 0 on a log axis")
        return cls(name, tuple(float(v) for v in np.geomspace(start, stop, count)), "log")

    @classmethod
    def from_values(cls, name: str, values: Sequence[float], scale: str = "linear") -> "Axis":
        return cls(name, tuple(float(v) for v in values), scale)


@attr.s(auto_attribs=True, frozen=True)
class SweepGrid:
    """Rectangular grid of payloads (``MetricsBundle`` or ``OptimumReport``).

    Cells are stored in row-major order, i.e. the last axis varies fastest.
    """

    def __attrs_post_init__(self):
        expected = int(np.prod([axis.count for axis in self.axes]))
        if len(self.cells) != expected:
            tpl = "Grid has {} cells but its axes span {}"
            msg = tpl.format(len(self.cells), expected)
            raise InvalidSpec(msg, field="cells")

    #: Grid axes
    axes: Tuple[Axis, ...]
    #: Cell payloads in row-major order
    cells: Tuple[Any, ...]
    #: Fixed parameters and timestamp of the sweep
    metadata: Dict[str, Any] = attr.Factory(dict)

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(axis.count for axis in self.axes)

    def cell(self, *index: int):
        """Return the payload at the given per-axis index"""
        return self.cells[int(np.ravel_multi_index(index, self.shape))]

    def iter_cells(self) -> Iterator[Tuple[Tuple[float, ...], Any]]:
        """Yield ``(coordinates, payload)`` in storage order"""
        for flat, payload in enumerate(self.cells):
            index = np.unravel_index(flat, self.shape)
            yield tuple(axis.values[i] for axis, i in zip(self.axes, index)), payload

    def to_array(self, getter: Callable[[Any], float]) -> np.ndarray:
        """Map every payload through ``getter`` into an array of the grid's shape"""
        return np.array([getter(payload) for payload in self.cells], dtype=float).reshape(
            self.shape
        )


@attr.s(auto_attribs=True, frozen=True)
class RegimeMap:
    """Optima of ζ over a (κ₃, Δ_P) grid, one ``SweepGrid`` of ``OptimumReport`` per port"""

    #: Grids of optimum reports with axes ``(kappa3, deltap)``
    grids: Dict[Port, SweepGrid]

    @property
    def argmax_xi_maps(self) -> Dict[Port, np.ndarray]:
        """Coupling efficiency realizing the maximum, per port"""
        return {port: grid.to_array(lambda r: r.xi_star) for port, grid in self.grids.items()}

    @property
    def max_value_maps(self) -> Dict[Port, np.ndarray]:
        """Value of the maximum of ζ, per port"""
        return {port: grid.to_array(lambda r: r.zeta_star) for port, grid in self.grids.items()}


# Monte-Carlo validation ---------------------------------------------------------------------------


@attr.s(auto_attribs=True, frozen=True)
class TrialConfig:
    """Configuration of a simulated photon counting experiment"""

    def __attrs_post_init__(self):
        check_field(
            isinstance(self.n0, (int, np.integer)) and self.n0 >= 0, "n0", self.n0, "int >= 0"
        )
        check_field(
            isinstance(self.trials, (int, np.integer)) and self.trials >= 1,
            "trials",
            self.trials,
            "int >= 1",
        )
        check_field(
            isinstance(self.seed, (int, np.integer)) and 0 <= self.seed < 2 ** 64,
            "seed",
            self.seed,
            "an unsigned 64 bit integer",
        )
        check_field(isinstance(self.port, Port), "port", self.port, "a Port")

    #: Number of impinging photons per trial
    n0: int
    #: Number of trials
    trials: int
    #: Master seed
    seed: int
    #: Port the detector is placed in
    port: Port = Port.TRANSMISSION


@attr.s(auto_attribs=True, frozen=True)
class EmpiricalStats:
    """Sample statistics of simulated photon counting"""

    #: Absolute mean of the count difference between states A and P
    mean_signal: float
    #: Sample standard deviation of the count difference
    std_noise: float
    #: ``mean_signal / std_noise``, or 0 if the noise vanishes
    empirical_snr: float
    #: Fraction of trials in which no photon was absorbed
    survival_fraction: float
    #: Whether the noise vanished (no counts at all)
    degenerate_noise: bool = False
    #: Name of the random bit generator
    generator: str = "PCG64"
