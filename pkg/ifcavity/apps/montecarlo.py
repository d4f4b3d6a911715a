# -*- coding: utf-8 -*-
"""Sample photon counting experiments and compare the empirical SNR and survival fraction with
their analytic values.
"""

import logging

from ..constants import table_headers as headers
from ..constants.defaults import RANDOM_GENERATOR
from ..detection.metrics import snr, total_security
from ..detection.models import Port, TrialConfig
from ..detection.montecarlo import simulate_counts
from ..exceptions import DegenerateNoise
from ..runfiles.write_tables import montecarlo_row
from .common import EXIT_OK, OutputSet, add_common_arguments, load_config

__author__ = "ifcavity developers"

logger = logging.getLogger(__name__)

#: Name of the sub command
COMMAND = "montecarlo"


def setup_argparse(parser):
    add_common_arguments(parser)


def run_warnings_caught(args) -> int:
    config = load_config(args)
    outputs = OutputSet.from_args(COMMAND, args, config, "json")
    settings = config.montecarlo
    spec = config.cavity

    rows = []
    for port in Port:
        det = config.detectors.for_port(port)
        for n0 in settings.n0_values:
            logger.info(
                "Sampling %d trials with N0 = %d in the %s port", settings.trials, n0, port.value
            )
            cfg = TrialConfig(n0=n0, trials=settings.trials, seed=settings.seed, port=port)
            stats = simulate_counts(spec, det, cfg, config.run.threads)
            try:
                analytic_snr = snr(spec, det, port, n0)
            except DegenerateNoise:
                analytic_snr = 0.0  # no counts at all, as reported by the sampler
            rows.append(
                montecarlo_row(
                    port, n0, settings.trials, stats, analytic_snr, total_security(spec, n0)
                )
            )

    outputs.write_table(COMMAND, headers.MONTECARLO_COLUMNS, rows)
    outputs.finish(config, seeds=(settings.seed,), random_generator=RANDOM_GENERATOR)
    return EXIT_OK
