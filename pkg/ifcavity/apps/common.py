# -*- coding: utf-8 -*-
"""Arguments, configuration loading, output handling and exit codes shared by all sub commands.
"""

import argparse
import logging
import os
from pathlib import Path
import sys
import time
from typing import Callable, Iterable, List, Optional, Sequence
import warnings

import attr

from ..constants.defaults import ENV_OUT_DIR
from ..exceptions import (
    DegenerateNoise,
    EmptyGrid,
    IfcException,
    InvalidSpec,
    ParseConfigException,
    UnboundedInN0,
    WriteOutputException,
    ZeroContrast,
)
from ..runfiles import (
    OUTPUT_FORMATS,
    ConfigReader,
    ConfigWriter,
    RunConfig,
    RunValidator,
    TableWriter,
    build_manifest,
    write_manifest,
)
from ..runfiles.write_tables import Row

__author__ = "ifcavity developers"

logger = logging.getLogger(__name__)

#: Exit code on success
EXIT_OK = 0
#: Exit code on errors other than invalid input, e.g. unwritable outputs
EXIT_FAILURE = 1
#: Exit code on invalid configuration or arguments
EXIT_INVALID = 2
#: Exit code when a constrained optimization has no feasible point
EXIT_INFEASIBLE = 3

#: Errors caused by the configuration rather than by the environment
VALIDATION_ERRORS = (
    InvalidSpec,
    ParseConfigException,
    EmptyGrid,
    ZeroContrast,
    DegenerateNoise,
    UnboundedInN0,
)


def add_common_arguments(parser: argparse.ArgumentParser):
    parser.add_argument(
        "-c",
        "--config",
        type=argparse.FileType("rt"),
        help="Path to run configuration file (defaults of the headline system if not given)",
    )
    parser.add_argument(
        "-o",
        "--out",
        help="Output directory (overrides ${}, default: current directory)".format(ENV_OUT_DIR),
    )
    parser.add_argument(
        "--format",
        dest="output_format",
        choices=OUTPUT_FORMATS,
        help="Format of the result tables (overrides the configuration)",
    )
    parser.add_argument(
        "--seed", type=int, help="Master seed of the random draws (overrides the configuration)"
    )
    parser.add_argument(
        "--threads",
        type=int,
        help=(
            "Number of worker threads (overrides the configuration); the evaluation is CPU bound "
            "Python code, so more threads keep the output order but do not run faster"
        ),
    )
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="Log progress and debug information"
    )
    parser.add_argument(
        "--no-warnings",
        dest="no_warnings",
        action="store_true",
        help="Suppress validation and parser warnings",
    )
    parser.add_argument(
        "--show-duplicate-warnings",
        dest="show_duplicate_warnings",
        action="store_true",
        help=(
            "Show duplicated warnings, i.e. with same message and same category (False by default)"
        ),
    )


def load_config(args) -> RunConfig:
    """Read the configuration, apply the command line overrides and validate the result"""
    if args.config:
        config = ConfigReader.from_stream(args.config).read()
        args.config.close()
    else:
        config = RunConfig()
    if args.seed is not None:
        config = attr.evolve(config, montecarlo=attr.evolve(config.montecarlo, seed=args.seed))
    if args.threads is not None:
        config = attr.evolve(config, run=attr.evolve(config.run, threads=args.threads))
    if args.output_format is not None:
        config = attr.evolve(config, run=attr.evolve(config.run, output_format=args.output_format))
    RunValidator(config).validate()
    return config


def output_dir(args) -> Path:
    """Return the output directory, creating it if necessary"""
    path = Path(args.out or os.environ.get(ENV_OUT_DIR) or ".")
    try:
        path.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        tpl = "Could not create output directory {}: {}"
        raise WriteOutputException(tpl.format(path, e)) from e
    return path


class OutputSet:
    """
    Collects the result tables of one sub command and writes the resolved configuration and the
    run manifest alongside.

    :type command: str
    :param command: Name of the sub command, used as file name prefix
    :type directory: Path
    :param directory: Output directory
    :type output_format: str
    :param output_format: ``csv`` or ``json``
    """

    @classmethod
    def from_args(cls, command: str, args, config: RunConfig, natural_format: str):
        return cls(command, output_dir(args), config.run.output_format or natural_format)

    def __init__(self, command: str, directory: Path, output_format: str):
        self.command = command
        self.directory = Path(directory)
        self.output_format = output_format
        self.paths: List[Path] = []
        self._start = time.perf_counter()

    def write_table(self, name: str, columns: Sequence[str], rows: Iterable[Row]) -> Path:
        writer = TableWriter(columns, self.output_format)
        path = self.directory / (name + writer.suffix)
        logger.debug("Writing %s", path)
        self.paths.append(writer.write(path, rows))
        return path

    def finish(
        self, config: RunConfig, seeds: Iterable[int] = (), random_generator: Optional[str] = None
    ) -> Path:
        """Write the resolved configuration and the manifest, return the manifest path"""
        wall_clock_s = time.perf_counter() - self._start
        config_path = self.directory / "{}.config.txt".format(self.command)
        try:
            with open(config_path, "wt", encoding="utf-8", newline="") as output_file:
                ConfigWriter.from_stream(config, output_file, lineterminator="\n").write()
        except OSError as e:
            tpl = "Could not write {}: {}"
            raise WriteOutputException(tpl.format(config_path, e)) from e
        self.paths.append(config_path)
        manifest = build_manifest(
            self.command, config, self.paths, wall_clock_s, seeds, random_generator
        )
        manifest_path = self.directory / "{}.manifest.json".format(self.command)
        logger.info("Wrote %d file(s) and manifest %s", len(self.paths), manifest_path)
        return write_manifest(manifest, manifest_path)


def _setup_logging(verbose: bool):
    level = logging.DEBUG if verbose else logging.WARNING
    logging.basicConfig(
        stream=sys.stderr, format="%(asctime)s %(levelname)s %(name)s: %(message)s"
    )
    logging.getLogger("ifcavity").setLevel(level)


def run(args, run_warnings_caught: Callable) -> int:
    """Run a sub command and return its exit code"""
    _setup_logging(args.verbose)

    # Show all warnings of same type and content
    if args.show_duplicate_warnings:
        warnings.simplefilter("always")

    # Collect warnings
    try:
        with warnings.catch_warnings(record=True) as records:
            result = run_warnings_caught(args)
    except VALIDATION_ERRORS as e:
        print("ifcavity {}: error: {}".format(args.cmd, e), file=sys.stderr)
        result = EXIT_INVALID
    except IfcException as e:
        print("ifcavity {}: error: {}".format(args.cmd, e), file=sys.stderr)
        result = EXIT_FAILURE

    # Print warnings
    if not args.no_warnings:
        for record in records:
            warnings.showwarning(
                record.message, record.category, record.filename, record.lineno, record.line
            )
    return result
