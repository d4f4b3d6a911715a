# -*- coding: utf-8 -*-
"""Trade total security against SNR for both ports.

Each port uses its configured coupling efficiency or, if none is configured, the one realizing
the conditional maximum of its merit product.
"""

import logging

from ..constants import table_headers as headers
from ..detection.metrics import n0_for_snr, security_vs_snr_curve
from ..detection.models import Port
from ..detection.optimize import maximize_zeta
from ..runfiles.write_tables import security_curve_rows
from .common import EXIT_OK, OutputSet, add_common_arguments, load_config

__author__ = "ifcavity developers"

logger = logging.getLogger(__name__)

#: Name of the sub command
COMMAND = "security-curve"


def setup_argparse(parser):
    add_common_arguments(parser)


def _port_xi(config, port: Port) -> float:
    settings = config.security_curve
    xi = settings.xi_reflection if port is Port.REFLECTION else settings.xi_transmission
    if xi is not None:
        return xi
    report = maximize_zeta(
        config.cavity,
        config.detectors.for_port(port),
        port,
        config.optimize.constraints,
        config.xi_axis,
        config.optimize.n0_range,
    )
    if not report.feasible:
        logger.warning(
            "Using the unconstrained optimum xi = %s for the %s port", report.xi_star, port.value
        )
    return report.xi_star


def run_warnings_caught(args) -> int:
    config = load_config(args)
    outputs = OutputSet.from_args(COMMAND, args, config, "csv")
    snr_grid = config.security_curve.snr_axis.values

    rows = []
    for port in Port:
        xi = _port_xi(config, port)
        spec = config.cavity.with_xi(xi)
        det = config.detectors.for_port(port)
        curve = security_vs_snr_curve(spec, det, port, snr_grid)
        n0_values = [n0_for_snr(spec, det, port, snr) for snr in snr_grid]
        rows += security_curve_rows(port, xi, curve, n0_values)

    outputs.write_table(COMMAND, headers.SECURITY_CURVE_COLUMNS, rows)
    outputs.finish(config)
    return EXIT_OK
