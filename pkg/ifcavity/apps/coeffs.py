# -*- coding: utf-8 -*-
"""Print and write the cavity coefficients with and without object, the per-photon security and
the bounds of the quasi-steady state.
"""

import logging
import sys

from ..constants import table_headers as headers
from ..detection.cavity import (
    g0_max,
    max_photon_flux,
    per_photon_security,
    port_coefficients,
    solve_steady_state,
)
from ..detection.models import ObjectState
from ..runfiles import TableWriter
from ..runfiles.write_tables import bounds_rows, coeffs_rows, steady_state_rows
from .common import EXIT_OK, OutputSet, add_common_arguments, load_config

__author__ = "ifcavity developers"

logger = logging.getLogger(__name__)

#: Name of the sub command
COMMAND = "coeffs"


def setup_argparse(parser):
    add_common_arguments(parser)
    parser.add_argument(
        "-q", "--quiet", action="store_true", help="Do not print the coefficient table"
    )


def run_warnings_caught(args) -> int:
    config = load_config(args)
    spec = config.cavity
    outputs = OutputSet.from_args(COMMAND, args, config, "csv")

    coefficients = {state: port_coefficients(spec, state) for state in ObjectState}
    rows = coeffs_rows(coefficients, per_photon_security(spec))
    outputs.write_table(COMMAND, headers.COEFFS_COLUMNS, rows)
    if not args.quiet:
        TableWriter(headers.COEFFS_COLUMNS, outputs.output_format).write_stream(sys.stdout, rows)

    params = config.optomechanics
    outputs.write_table(
        COMMAND + ".bounds",
        headers.BOUNDS_COLUMNS,
        bounds_rows(
            max_photon_flux(spec),
            config.run.photon_flux,
            g0_max(params) if params is not None else None,
        ),
    )
    if params is not None:
        solutions = solve_steady_state(spec, params)
        if len(solutions) > 1:
            logger.info("Bistable steady state with %d branches", len(solutions))
        outputs.write_table(
            COMMAND + ".steady_state", headers.STEADY_STATE_COLUMNS, steady_state_rows(solutions)
        )

    outputs.finish(config)
    return EXIT_OK
