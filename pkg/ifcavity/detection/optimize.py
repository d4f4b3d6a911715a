# -*- coding: utf-8 -*-
"""Maximization of the merit product ``ζ = SNR·η_tot`` over coupling efficiency and photons.

For fixed ``ξ`` the product ``ζ(N₀) = c·√N₀·(1 - A)^N₀`` has exactly one maximum at
``N₀* = -1 / (2·ln(1 - A))``.  The search over ``ξ`` is therefore a scan of a one dimensional
grid with the analytic optimum in ``N₀`` per grid point.  Constraints on ``η_tot`` and the SNR
bound ``N₀`` from above and below; since ``ζ`` is unimodal in ``N₀`` the stationary point is
clamped into the feasible interval.
"""

import datetime
import logging
import math
from typing import Iterable, Optional, Sequence, Tuple, Union

import attr

from ..constants import defaults
from ..exceptions import EmptyGrid, InvalidSpec, NoConvergence, UnboundedInN0
from .cavity import port_coefficients
from .metrics import as_detectors, evaluate_metrics, port_signal_and_noise
from .models import (
    Axis,
    CavitySpec,
    Constraints,
    DetectorSpec,
    Detectors,
    ObjectState,
    OperatingPoint,
    OptimumReport,
    Port,
    RegimeMap,
    SweepGrid,
)
from .parallel import check_threads, ordered_map

__author__ = "ifcavity developers"

logger = logging.getLogger(__name__)

#: Relative tolerance for considering two values of ζ equal when breaking ties
TIE_RTOL = 1e-12

#: Relative offset of the neighbours used for checking the maximum in N₀
STENCIL_STEP = 1e-3


def default_xi_axis() -> Axis:
    return Axis.linear("xi", defaults.XI_MIN, defaults.XI_MAX, defaults.XI_COUNT)


def _to_axis(name: str, grid: Union[Axis, Iterable[float], None], scale="linear") -> Axis:
    if grid is None:
        return default_xi_axis()
    if isinstance(grid, Axis):
        return grid
    values = tuple(float(v) for v in grid)
    if not values:
        tpl = "Axis {} has no grid points"
        raise EmptyGrid(tpl.format(name))
    return Axis.from_values(name, values, scale)


def _check_n0_range(n0_range: Tuple[float, float]) -> Tuple[float, float]:
    lo, hi = (float(v) for v in n0_range)
    if not (math.isfinite(lo) and math.isfinite(hi) and 0.0 <= lo <= hi):
        tpl = "Invalid value for n0_range: {} (must be finite with 0 <= min <= max)"
        raise InvalidSpec(tpl.format(n0_range), field="n0_range")
    return lo, hi


def _timestamp() -> str:
    return datetime.datetime.now(datetime.timezone.utc).isoformat()


def stationary_n0(absorption: float) -> float:
    """Return the photon number maximizing ``√N₀·(1 - A)^N₀`` for absorption ``A``"""
    if absorption <= 0.0:
        raise UnboundedInN0("No absorption, the merit product grows without bound in N0")
    if absorption >= 1.0:
        return 0.0
    return -0.5 / math.log1p(-absorption)


@attr.s(auto_attribs=True, frozen=True)
class _Candidate:
    """Evaluated point of the search"""

    xi: float
    n0: float
    zeta: float
    eta_tot: float
    snr: float


class _PortObjective:
    """ζ as a function of N₀ for one port at fixed ξ"""

    def __init__(self, spec: CavitySpec, det: DetectorSpec, port: Port):
        self.xi = spec.xi
        coeffs_absent = port_coefficients(spec, ObjectState.ABSENT)
        coeffs_present = port_coefficients(spec, ObjectState.PRESENT)
        self.absorption = coeffs_present.A
        self.signal, self.noise = port_signal_and_noise(
            coeffs_absent, coeffs_present, det, port
        )
        self.port = port

    def evaluate(self, n0: float) -> _Candidate:
        """Return ζ and its factors at ``n0``.

        A port without any expected counts (no light, no dark counts) scores an SNR of 0 here so
        that a scan over ξ passes such points; ``metrics.snr`` raises ``DegenerateNoise`` instead.
        """
        if self.noise == 0.0:
            snr = 0.0
        else:
            snr = math.sqrt(n0) * self.signal / self.noise
        eta_tot = (1.0 - self.absorption) ** n0
        return _Candidate(self.xi, n0, snr * eta_tot, eta_tot, snr)

    def stationary(self) -> float:
        if self.absorption <= 0.0:
            return math.inf
        return stationary_n0(self.absorption)

    def feasible_interval(
        self, constraints: Constraints, lo: float, hi: float
    ) -> Optional[Tuple[float, float]]:
        """Return the photon numbers in ``[lo, hi]`` compatible with ``constraints`` or ``None``"""
        min_eta = constraints.min_eta_tot
        if min_eta is not None and min_eta > 0.0 and self.absorption > 0.0:
            if self.absorption >= 1.0:
                hi = min(hi, 0.0)
            else:
                hi = min(hi, math.log(min_eta) / math.log1p(-self.absorption))
        min_snr = constraints.min_snr
        if min_snr is not None and min_snr > 0.0:
            if self.signal == 0.0:
                return None
            lo = max(lo, (min_snr * self.noise / self.signal) ** 2)
        if lo > hi:
            return None
        return lo, hi


def _clamp(value: float, lo: float, hi: float) -> float:
    return min(max(value, lo), hi)


def optimal_n0_at_xi(
    spec: CavitySpec, det: DetectorSpec, port: Port, xi: float
) -> Tuple[float, float]:
    """Return the photon number maximizing ζ at coupling efficiency ``xi`` and the maximum"""
    objective = _PortObjective(spec.with_xi(xi), det, port)
    if objective.absorption <= 0.0:
        tpl = "No absorption at xi = {}, the merit product grows without bound in N0"
        raise UnboundedInN0(tpl.format(xi))
    n0_star = objective.stationary()
    best = objective.evaluate(n0_star)
    if n0_star > 0.0:
        for n0 in (n0_star * (1.0 - STENCIL_STEP), n0_star * (1.0 + STENCIL_STEP)):
            if objective.evaluate(n0).zeta > best.zeta * (1.0 + TIE_RTOL):
                tpl = "Stationary point N0 = {} at xi = {} is not a maximum"
                raise NoConvergence(tpl.format(n0_star, xi))
    return n0_star, best.zeta


def _pick_best(candidates: Sequence[_Candidate]) -> _Candidate:
    top = max(c.zeta for c in candidates)
    ties = [c for c in candidates if c.zeta >= top * (1.0 - TIE_RTOL)]
    return min(ties, key=lambda c: abs(c.xi - 0.5))


def maximize_zeta(
    spec: CavitySpec,
    det: DetectorSpec,
    port: Port,
    constraints: Constraints = Constraints(),
    xi_grid: Union[Axis, Iterable[float], None] = None,
    n0_range: Tuple[float, float] = (defaults.N0_MIN, defaults.N0_MAX),
) -> OptimumReport:
    """Return the (conditional) maximum of ζ over the ``xi_grid`` and the photon numbers in
    ``n0_range``.

    If no grid point satisfies ``constraints`` the unconstrained maximum is reported with
    ``feasible=False``.  Ties are broken toward the coupling efficiency closest to 0.5.
    """
    xi_axis = _to_axis("xi", xi_grid)
    lo, hi = _check_n0_range(n0_range)
    unconstrained, feasible = [], []
    for xi in xi_axis.values:
        objective = _PortObjective(spec.with_xi(xi), det, port)
        stationary = objective.stationary()
        unconstrained.append(objective.evaluate(_clamp(stationary, lo, hi)))
        if constraints.is_unconstrained:
            continue
        interval = objective.feasible_interval(constraints, lo, hi)
        if interval is None:
            continue
        candidate = objective.evaluate(_clamp(stationary, *interval))
        if constraints.is_satisfied(candidate.eta_tot, candidate.snr):
            feasible.append(candidate)
    if constraints.is_unconstrained:
        best, is_feasible = _pick_best(unconstrained), True
    elif feasible:
        best, is_feasible = _pick_best(feasible), True
    else:
        logger.info("No feasible point for the %s port under %s", port.value, constraints)
        best, is_feasible = _pick_best(unconstrained), False
    logger.debug("Maximum for the %s port: %s (feasible: %s)", port.value, best, is_feasible)
    return OptimumReport(
        port=port,
        xi_star=best.xi,
        n0_star=best.n0,
        zeta_star=best.zeta,
        eta_tot_at_star=best.eta_tot,
        snr_at_star=best.snr,
        feasible=is_feasible,
    )


def sweep_xi(
    spec: CavitySpec,
    det: Union[DetectorSpec, Detectors],
    n0_values: Union[Axis, Iterable[float]],
    xi_grid: Union[Axis, Iterable[float], None] = None,
    threads: int = 1,
) -> SweepGrid:
    """Evaluate all figures of merit on the grid of coupling efficiencies and photon numbers.

    The returned grid has the axes ``(xi, n0)``; ``n0_values`` may be explicit photon numbers or
    a (log) ``Axis`` spanning the (ξ, N₀) plane.
    """
    detectors = as_detectors(det)
    xi_axis = _to_axis("xi", xi_grid)
    n0_axis = n0_values if isinstance(n0_values, Axis) else _to_axis("n0", n0_values)
    check_threads(threads)
    points = [OperatingPoint(xi, n0) for xi in xi_axis.values for n0 in n0_axis.values]
    logger.info("Evaluating %d operating points on %d thread(s)", len(points), threads)
    cells = ordered_map(lambda point: evaluate_metrics(spec, detectors, point), points, threads)
    return SweepGrid(
        axes=(xi_axis, n0_axis),
        cells=tuple(cells),
        metadata={"spec": attr.asdict(spec), "created": _timestamp()},
    )


def sweep_kappa3_deltaP(
    base_spec: CavitySpec,
    det: Union[DetectorSpec, Detectors],
    kappa3_grid: Union[Axis, Iterable[float]],
    deltaP_grid: Union[Axis, Iterable[float]],
    constraints: Constraints = Constraints(),
    xi_grid: Union[Axis, Iterable[float], None] = None,
    n0_range: Tuple[float, float] = (defaults.N0_MIN, defaults.N0_MAX),
    threads: int = 1,
) -> RegimeMap:
    """Maximize ζ for both ports in every cell of the (κ₃, Δ_P) grid.

    The returned ``RegimeMap`` gives the coupling efficiency realizing the maximum and the value
    of the maximum as arrays indexed ``[kappa3, deltap]``.
    """
    detectors = as_detectors(det)
    kappa3_axis = (
        kappa3_grid if isinstance(kappa3_grid, Axis) else _to_axis("kappa3", kappa3_grid, "log")
    )
    deltap_axis = (
        deltaP_grid if isinstance(deltaP_grid, Axis) else _to_axis("deltap", deltaP_grid, "log")
    )
    xi_axis = _to_axis("xi", xi_grid)
    n0_range = _check_n0_range(n0_range)
    check_threads(threads)
    cells = [(k3, dp) for k3 in kappa3_axis.values for dp in deltap_axis.values]

    def optimize_cell(cell):
        spec = attr.evolve(base_spec, kappa_3=cell[0], delta_P=cell[1])
        return {
            port: maximize_zeta(
                spec, detectors.for_port(port), port, constraints, xi_axis, n0_range
            )
            for port in Port
        }

    logger.info(
        "Optimizing %d x %d (kappa_3, delta_P) cells on %d thread(s)",
        kappa3_axis.count,
        deltap_axis.count,
        threads,
    )
    results = ordered_map(optimize_cell, cells, threads)
    metadata = {
        "spec": attr.asdict(base_spec),
        "constraints": attr.asdict(constraints),
        "created": _timestamp(),
    }
    return RegimeMap(
        grids={
            port: SweepGrid(
                axes=(kappa3_axis, deltap_axis),
                cells=tuple(result[port] for result in results),
                metadata=metadata,
            )
            for port in Port
        }
    )
