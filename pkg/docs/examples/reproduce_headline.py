# Reproduce the headline system with the library API

import os
import sys

from ifcavity.constants import table_headers as headers
from ifcavity.detection import (
    CavitySpec,
    Constraints,
    DetectorSpec,
    Detectors,
    Port,
    maximize_zeta,
    n0_for_snr,
    security_vs_snr_curve,
    sweep_xi,
)
from ifcavity.runfiles import TableWriter
from ifcavity.runfiles.write_tables import optimum_row, security_curve_rows, sweep_xi_rows


def reproduce_and_write(out_path):
    """Sweep, optimize and write the security curves of the headline system to ``out_path``."""

    # Critically coupled empty cavity, semitransparent object
    spec = CavitySpec(
        kappa_A=1.5e7,
        kappa_3=6.5e6,
        delta_A=0.0,
        delta_P=2e7,
        epsilon_A=1.0,
        epsilon_P=0.2,
        xi=0.5,
    )
    detectors = Detectors.same(DetectorSpec(chi=0.5, dark_ratio=1e-3))
    constraints = Constraints(min_eta_tot=0.85, min_snr=2.0)

    # Create output path, if not existing
    if not os.path.exists(out_path):
        os.makedirs(out_path, exist_ok=True)

    # Line cuts through the (xi, n0) plane
    grid = sweep_xi(spec, detectors, [5, 55])
    TableWriter(headers.SWEEP_XI_COLUMNS).write(
        os.path.join(out_path, "sweep-xi.csv"), sweep_xi_rows(grid)
    )

    # Conditional maxima and the security curves at their coupling efficiencies
    reports, curves = [], []
    snr_grid = [5.0 * i / 99 for i in range(100)]
    for port in Port:
        report = maximize_zeta(spec, detectors.for_port(port), port, constraints)
        reports.append(optimum_row(report, "conditional"))
        at_star = spec.with_xi(report.xi_star)
        det = detectors.for_port(port)
        curve = security_vs_snr_curve(at_star, det, port, snr_grid)
        n0_values = [n0_for_snr(at_star, det, port, snr) for snr in snr_grid]
        curves += security_curve_rows(port, report.xi_star, curve, n0_values)
    TableWriter(headers.OPTIMIZE_COLUMNS).write(os.path.join(out_path, "optimize.csv"), reports)
    TableWriter(headers.SECURITY_CURVE_COLUMNS).write(
        os.path.join(out_path, "security-curve.csv"), curves
    )
    return reports


if __name__ == "__main__":
    reproduce_and_write(sys.argv[1] if len(sys.argv) > 1 else ".")
