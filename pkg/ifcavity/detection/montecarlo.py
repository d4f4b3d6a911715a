# -*- coding: utf-8 -*-
"""Sampling of photon counting experiments as an independent check of the analytic figures of merit.

Trials are cut into blocks of fixed size.  Block ``k`` of stream ``s`` draws from its own ``PCG64``
generator seeded with ``SeedSequence(seed, spawn_key=(s, k))``, so the samples do not depend on the
number of threads the blocks are distributed over.
"""

import logging
from typing import List

import numpy as np

from ..constants.defaults import RANDOM_GENERATOR, TRIAL_BLOCK_SIZE
from .cavity import port_coefficients
from .models import CavitySpec, DetectorSpec, EmpiricalStats, ObjectState, TrialConfig
from .parallel import ordered_map

__author__ = "ifcavity developers"

logger = logging.getLogger(__name__)

#: Substream of the detector counts
COUNTS_STREAM = 0
#: Substream of the absorption events
SURVIVAL_STREAM = 1


def block_generator(seed: int, stream: int, block: int) -> np.random.Generator:
    """Return the random generator of one block of trials"""
    sequence = np.random.SeedSequence(seed, spawn_key=(stream, block))
    return np.random.Generator(np.random.PCG64(sequence))


def _blocks(trials: int) -> List[int]:
    """Sizes of the blocks of trials"""
    full, rest = divmod(trials, TRIAL_BLOCK_SIZE)
    return [TRIAL_BLOCK_SIZE] * full + ([rest] if rest else [])


def simulate_counts(
    spec: CavitySpec, det: DetectorSpec, cfg: TrialConfig, threads: int = 1
) -> EmpiricalStats:
    """Simulate counting the photons in ``cfg.port`` with the object absent and present.

    Each trial draws the total counts (signal and dark counts) for both states from Poisson
    distributions; the SNR is the absolute mean of the count difference over its sample standard
    deviation.
    """
    j_absent = cfg.port.select(port_coefficients(spec, ObjectState.ABSENT))
    j_present = cfg.port.select(port_coefficients(spec, ObjectState.PRESENT))
    dark = det.dark_ratio * cfg.n0
    mean_absent = det.chi * cfg.n0 * j_absent + dark
    mean_present = det.chi * cfg.n0 * j_present + dark

    def draw(block):
        index, size = block
        rng = block_generator(cfg.seed, COUNTS_STREAM, index)
        counts_absent = rng.poisson(mean_absent, size)
        counts_present = rng.poisson(mean_present, size)
        return counts_absent - counts_present

    blocks = list(enumerate(_blocks(cfg.trials)))
    logger.debug("Drawing %d trials in %d block(s)", cfg.trials, len(blocks))
    diffs = np.concatenate(ordered_map(draw, blocks, threads))
    mean_signal = float(abs(np.mean(diffs)))
    std_noise = float(np.std(diffs, ddof=1 if cfg.trials > 1 else 0))
    degenerate = std_noise == 0.0
    if degenerate:
        logger.warning("Count difference has no spread, reporting an SNR of 0")
    return EmpiricalStats(
        mean_signal=mean_signal,
        std_noise=std_noise,
        empirical_snr=0.0 if degenerate else mean_signal / std_noise,
        survival_fraction=simulate_survival(spec, cfg, threads),
        degenerate_noise=degenerate,
        generator=RANDOM_GENERATOR,
    )


def simulate_survival(spec: CavitySpec, cfg: TrialConfig, threads: int = 1) -> float:
    """Return the fraction of trials in which none of the ``cfg.n0`` photons is absorbed"""
    absorption = port_coefficients(spec, ObjectState.PRESENT).A
    return survival_fraction_for_absorption(absorption, cfg, threads)


def survival_fraction_for_absorption(
    absorption: float, cfg: TrialConfig, threads: int = 1
) -> float:
    """Return the fraction of trials in which none of the ``cfg.n0`` photons is absorbed, each
    photon being absorbed with probability ``absorption``
    """
    absorption = min(max(absorption, 0.0), 1.0)

    def draw(block):
        index, size = block
        rng = block_generator(cfg.seed, SURVIVAL_STREAM, index)
        return int(np.count_nonzero(rng.binomial(cfg.n0, absorption, size) == 0))

    survived = sum(ordered_map(draw, list(enumerate(_blocks(cfg.trials))), threads))
    return survived / cfg.trials
