# -*- coding: utf-8 -*-
"""Find the global and the conditional maxima of the merit products of both ports.

Exits with code 3 if a conditional maximum does not satisfy its constraints; the report is written
nonetheless, flagged ``feasible = false``.
"""

import logging

from ..constants import table_headers as headers
from ..detection.metrics import measurement_time
from ..detection.models import Constraints, Port
from ..detection.optimize import maximize_zeta
from ..runfiles.write_tables import optimum_row
from .common import EXIT_INFEASIBLE, EXIT_OK, OutputSet, add_common_arguments, load_config

__author__ = "ifcavity developers"

logger = logging.getLogger(__name__)

#: Name of the sub command
COMMAND = "optimize"

#: Labels of the two searches
GLOBAL = "global"
CONDITIONAL = "conditional"


def setup_argparse(parser):
    add_common_arguments(parser)


def run_warnings_caught(args) -> int:
    config = load_config(args)
    outputs = OutputSet.from_args(COMMAND, args, config, "json")
    photon_flux = config.run.photon_flux
    searches = ((GLOBAL, Constraints()), (CONDITIONAL, config.optimize.constraints))

    rows = []
    infeasible = False
    for port in Port:
        for search, constraints in searches:
            report = maximize_zeta(
                config.cavity,
                config.detectors.for_port(port),
                port,
                constraints,
                config.xi_axis,
                config.optimize.n0_range,
            )
            infeasible = infeasible or not report.feasible
            row = optimum_row(report, search)
            if photon_flux is not None:
                row = (*row, measurement_time(report.n0_star, photon_flux))
            rows.append(row)

    columns = headers.OPTIMIZE_COLUMNS
    if photon_flux is not None:
        columns = (*columns, headers.MEASUREMENT_TIME_S)
    outputs.write_table(COMMAND, columns, rows)
    outputs.finish(config)

    if infeasible:
        logger.warning("No coupling efficiency satisfies %s", config.optimize.constraints)
        return EXIT_INFEASIBLE
    return EXIT_OK
