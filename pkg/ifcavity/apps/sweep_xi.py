# -*- coding: utf-8 -*-
"""Evaluate the total security, the SNRs and the merit products over the coupling efficiency.

One block of rows is written per configured photon number.  With a ``plane_count`` in the SWEEP XI
section (or ``--plane-count``) the merit products are also evaluated on a logarithmic photon
number axis spanning the (ξ, N₀) plane.
"""

import attr

from ..constants import table_headers as headers
from ..detection.models import Axis
from ..detection.optimize import sweep_xi
from ..runfiles.write_tables import sweep_xi_rows
from .common import EXIT_OK, OutputSet, add_common_arguments, load_config

__author__ = "ifcavity developers"

#: Name of the sub command
COMMAND = "sweep-xi"


def setup_argparse(parser):
    add_common_arguments(parser)
    parser.add_argument(
        "--plane-count",
        type=int,
        help=(
            "Number of log-spaced photon numbers of the (xi, n0) plane, 0 for no plane "
            "(overrides the configuration)"
        ),
    )


def run_warnings_caught(args) -> int:
    config = load_config(args)
    if args.plane_count is not None:
        sweep = attr.evolve(config.sweep_xi, plane_count=args.plane_count)
        config = attr.evolve(config, sweep_xi=sweep)
    outputs = OutputSet.from_args(COMMAND, args, config, "csv")
    threads = config.run.threads

    grid = sweep_xi(
        config.cavity, config.detectors, config.sweep_xi.n0_values, config.xi_axis, threads
    )
    outputs.write_table(COMMAND, headers.SWEEP_XI_COLUMNS, sweep_xi_rows(grid))

    if config.sweep_xi.plane_count:
        n0_min, n0_max = config.optimize.n0_range
        n0_axis = Axis.log("n0", n0_min, n0_max, config.sweep_xi.plane_count)
        plane = sweep_xi(config.cavity, config.detectors, n0_axis, config.xi_axis, threads)
        outputs.write_table(COMMAND + ".plane", headers.SWEEP_XI_COLUMNS, sweep_xi_rows(plane))

    outputs.finish(config)
    return EXIT_OK
