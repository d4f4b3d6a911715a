# -*- coding: utf-8 -*-
"""Code for writing result tables as CSV or JSON.

CSV files are comma separated with a header row, ``\\n`` line endings and UTF-8 encoding;
floating point values are written in their shortest round-trip representation.  JSON files hold
a list of records with sorted keys.
"""

import csv
import enum
import json
import math
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, TextIO, Tuple
import warnings

from ..constants import table_headers as headers
from ..detection.models import (
    EmpiricalStats,
    MetricsBundle,
    ObjectState,
    OptimumReport,
    Port,
    PortCoefficients,
    SteadyStateSolution,
    SweepGrid,
)
from ..exceptions import WriteOutputException, WriteOutputWarning

__author__ = "ifcavity developers"


#: Type of one table row, the values in column order
Row = Sequence[Any]


def _plain(value):
    """Return a JSON compatible value"""
    if isinstance(value, enum.Enum):
        return value.value
    elif hasattr(value, "item"):  # numpy scalar
        return value.item()
    else:
        return value


def _cell(value) -> str:
    value = _plain(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    elif isinstance(value, float):
        return repr(value)
    elif value is None:
        return ""
    else:
        return str(value)


class TableWriter:
    """
    Write the rows of one result table to a file.

    :type columns: Sequence[str]
    :param columns: Column names
    :type output_format: str
    :param output_format: ``csv`` or ``json``
    """

    def __init__(self, columns: Sequence[str], output_format: str = "csv"):
        if output_format not in ("csv", "json"):
            tpl = "Unknown output format {}"
            raise WriteOutputException(tpl.format(output_format))
        self.columns = tuple(columns)
        self.output_format = output_format

    @property
    def suffix(self) -> str:
        return "." + self.output_format

    def write_stream(self, output_file: TextIO, rows: Iterable[Row]):
        """Write ``rows`` to the file-like object ``output_file``"""
        rows = list(rows)
        for row in rows:
            if len(row) != len(self.columns):
                tpl = "Row {} does not match columns {}"
                raise WriteOutputException(tpl.format(row, self.columns))
            if any(isinstance(v, float) and not math.isfinite(v) for v in row):
                tpl = "Row {} contains non-finite values"
                warnings.warn(tpl.format(row), WriteOutputWarning)
        if self.output_format == "csv":
            writer = csv.writer(output_file, lineterminator="\n")
            writer.writerow(self.columns)
            writer.writerows([_cell(v) for v in row] for row in rows)
        else:
            records = [{c: _plain(v) for c, v in zip(self.columns, row)} for row in rows]
            json.dump(records, output_file, indent=2, sort_keys=True)
            output_file.write("\n")

    def write(self, path: Path, rows: Iterable[Row]) -> Path:
        """Write ``rows`` to ``path`` and return ``path``"""
        try:
            with open(path, "wt", encoding="utf-8", newline="") as output_file:
                self.write_stream(output_file, rows)
        except OSError as e:
            tpl = "Could not write {}: {}"
            raise WriteOutputException(tpl.format(path, e)) from e
        return path


# Row builders of the result tables ----------------------------------------------------------------


def coeffs_rows(coefficients: Dict[ObjectState, PortCoefficients], eta: float) -> List[Row]:
    """One row per object state; the per-photon security is given in the present state's row"""
    return [
        (state, coeffs.R, coeffs.T, coeffs.A, eta if state is ObjectState.PRESENT else None)
        for state, coeffs in coefficients.items()
    ]


def sweep_xi_rows(grid: SweepGrid) -> List[Row]:
    """One block of rows per photon number, coupling efficiency ascending within a block"""
    xi_axis, n0_axis = grid.axes
    rows = []
    for j in range(n0_axis.count):
        for i in range(xi_axis.count):
            bundle: MetricsBundle = grid.cell(i, j)
            rows.append(
                (
                    bundle.point.xi,
                    bundle.point.n0,
                    bundle.eta_tot,
                    bundle.snr[0],
                    bundle.snr[1],
                    bundle.zeta[0],
                    bundle.zeta[1],
                )
            )
    return rows


def optimum_row(report: OptimumReport, search: str) -> Row:
    return (
        report.port,
        search,
        report.xi_star,
        report.n0_star,
        report.zeta_star,
        report.eta_tot_at_star,
        report.snr_at_star,
        report.feasible,
    )


def param_map_rows(grid: SweepGrid, getter: Callable[[OptimumReport], float]) -> List[Row]:
    """One row per (κ₃, Δ_P) cell with the value selected by ``getter``"""
    return [(kappa3, deltap, getter(report)) for (kappa3, deltap), report in grid.iter_cells()]


def security_curve_rows(
    port: Port, xi: float, curve: Iterable[Tuple[float, float]], n0_values: Iterable[float]
) -> List[Row]:
    return [(port, xi, snr, n0, eta_tot) for (snr, eta_tot), n0 in zip(curve, n0_values)]


def montecarlo_row(
    port: Port,
    n0: int,
    trials: int,
    stats: EmpiricalStats,
    analytic_snr: float,
    analytic_eta_tot: float,
) -> Row:
    def deviation(empirical, analytic):
        return abs(empirical - analytic) / analytic if analytic else None

    # Binomial standard error of the survival fraction
    sigma = math.sqrt(analytic_eta_tot * (1.0 - analytic_eta_tot) / trials)
    survival_z = (stats.survival_fraction - analytic_eta_tot) / sigma if sigma else None

    return (
        port,
        n0,
        trials,
        stats.mean_signal,
        stats.std_noise,
        stats.empirical_snr,
        analytic_snr,
        deviation(stats.empirical_snr, analytic_snr),
        stats.survival_fraction,
        analytic_eta_tot,
        deviation(stats.survival_fraction, analytic_eta_tot),
        survival_z,
        stats.degenerate_noise,
    )


def bounds_rows(
    max_flux: float, photon_flux: Optional[float] = None, g0_bound: Optional[float] = None
) -> List[Row]:
    """One row per bound; the configured flux and ``g₀^max`` only when known"""
    rows = [(headers.MAX_PHOTON_FLUX, max_flux)]
    if photon_flux is not None:
        rows.append((headers.PHOTON_FLUX, photon_flux))
        rows.append((headers.FLUX_WITHIN_BOUND, photon_flux <= max_flux))
    if g0_bound is not None:
        rows.append((headers.G0_MAX, g0_bound))
    return rows


def steady_state_rows(solutions: Iterable[SteadyStateSolution]) -> List[Row]:
    return [(s.alpha_sq, s.beta, s.delta_shifted, s.branch_count) for s in solutions]


#: Columns of the result table of each command
COLUMNS = {
    "coeffs": headers.COEFFS_COLUMNS,
    "coeffs.bounds": headers.BOUNDS_COLUMNS,
    "coeffs.steady_state": headers.STEADY_STATE_COLUMNS,
    "sweep-xi": headers.SWEEP_XI_COLUMNS,
    "optimize": headers.OPTIMIZE_COLUMNS,
    "param-map": headers.PARAM_MAP_COLUMNS,
    "security-curve": headers.SECURITY_CURVE_COLUMNS,
    "montecarlo": headers.MONTECARLO_COLUMNS,
}
