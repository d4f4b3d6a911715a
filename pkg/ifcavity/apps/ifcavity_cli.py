# -*- coding: utf-8 -*-
"""Command line interface of ifcavity, dispatching to one module per sub command.
"""

import argparse
import sys

from .. import __version__
from . import coeffs, montecarlo, optimize, param_map, security_curve, sweep_xi
from .common import run

__author__ = "ifcavity developers"

#: Sub command names, their modules and help texts
COMMANDS = (
    ("coeffs", coeffs, "Cavity coefficients, per-photon security and flux bound"),
    ("sweep-xi", sweep_xi, "Security, SNRs and merit products over the coupling efficiency"),
    ("optimize", optimize, "Global and conditional maxima of the merit products"),
    ("param-map", param_map, "Optimal coupling efficiency over absorption and detuning"),
    ("security-curve", security_curve, "Total security as a function of the SNR"),
    ("montecarlo", montecarlo, "Sampled photon counting experiments against the analytic SNR"),
)


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="ifcavity", description="Interaction-free detection with a Fabry-Perot cavity"
    )
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    subparsers = parser.add_subparsers(dest="cmd", required=True)
    for name, module, help_text in COMMANDS:
        subparser = subparsers.add_parser(name, help=help_text, description=help_text)
        module.setup_argparse(subparser)
        subparser.set_defaults(run_warnings_caught=module.run_warnings_caught)

    args = parser.parse_args(argv)
    return run(args, args.run_warnings_caught)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
