# -*- coding: utf-8 -*-
"""Map the coupling efficiency realizing the maximum merit product, and the maximum itself, over a
logarithmic grid of absorption decay rates and detunings.

Two tables are written per port, ``param-map.<port>.xi_star`` and ``param-map.<port>.zeta_star``.
"""

import logging

import attr

from ..constants import table_headers as headers
from ..detection.models import Constraints, Port
from ..detection.optimize import sweep_kappa3_deltaP
from ..runfiles.write_tables import param_map_rows
from .common import EXIT_INFEASIBLE, EXIT_OK, OutputSet, add_common_arguments, load_config

__author__ = "ifcavity developers"

logger = logging.getLogger(__name__)

#: Name of the sub command
COMMAND = "param-map"


def setup_argparse(parser):
    add_common_arguments(parser)
    parser.add_argument(
        "--conditional",
        action="store_true",
        default=None,
        help=(
            "Map the conditional maxima under the configured constraints instead of the global "
            "(overrides the configuration)"
        ),
    )


def run_warnings_caught(args) -> int:
    config = load_config(args)
    if args.conditional is not None:
        param_map = attr.evolve(config.param_map, conditional=args.conditional)
        config = attr.evolve(config, param_map=param_map)
    outputs = OutputSet.from_args(COMMAND, args, config, "csv")
    settings = config.param_map
    constraints = config.optimize.constraints if settings.conditional else Constraints()

    regime_map = sweep_kappa3_deltaP(
        config.cavity,
        config.detectors,
        settings.kappa3_axis,
        settings.deltap_axis,
        constraints,
        config.xi_axis,
        config.optimize.n0_range,
        config.run.threads,
    )

    infeasible = 0
    for port in Port:
        grid = regime_map.grids[port]
        prefix = "{}.{}".format(COMMAND, port.value)
        outputs.write_table(
            prefix + ".xi_star",
            headers.PARAM_MAP_COLUMNS,
            param_map_rows(grid, lambda report: report.xi_star),
        )
        outputs.write_table(
            prefix + ".zeta_star",
            headers.PARAM_MAP_COLUMNS,
            param_map_rows(grid, lambda report: report.zeta_star),
        )
        infeasible += sum(not report.feasible for report in grid.cells)
    outputs.finish(config)

    if infeasible:
        logger.warning("%d cell(s) have no feasible coupling efficiency", infeasible)
        return EXIT_INFEASIBLE
    return EXIT_OK
