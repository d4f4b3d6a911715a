# -*- coding: utf-8 -*-
"""Run manifests recording the provenance of every set of outputs"""

import datetime
import hashlib
import json
from pathlib import Path
from typing import Iterable, Optional

import attr

from .. import __version__
from ..exceptions import WriteOutputException
from .models import RunConfig, RunManifest
from .write_config import config_sections

__author__ = "ifcavity developers"


def sha256_file(path: Path) -> str:
    """Return the SHA-256 hex digest of the file at ``path``"""
    digest = hashlib.sha256()
    with open(path, "rb") as input_file:
        for chunk in iter(lambda: input_file.read(1 << 16), b""):
            digest.update(chunk)
    return digest.hexdigest()


def build_manifest(
    command: str,
    config: RunConfig,
    outputs: Iterable[Path],
    wall_clock_s: float,
    seeds: Iterable[int] = (),
    random_generator: Optional[str] = None,
) -> RunManifest:
    """Return the manifest of a run that wrote ``outputs``"""
    return RunManifest(
        tool_version=__version__,
        command=command,
        config=config_sections(config),
        seeds=tuple(seeds),
        random_generator=random_generator,
        wall_clock_s=wall_clock_s,
        timestamp=datetime.datetime.now(datetime.timezone.utc).isoformat(),
        outputs={Path(path).name: sha256_file(path) for path in outputs},
    )


def write_manifest(manifest: RunManifest, path: Path) -> Path:
    try:
        with open(path, "wt", encoding="utf-8", newline="") as output_file:
            json.dump(attr.asdict(manifest), output_file, indent=2, sort_keys=True)
            output_file.write("\n")
    except OSError as e:
        tpl = "Could not write manifest {}: {}"
        raise WriteOutputException(tpl.format(path, e)) from e
    return path


def read_manifest(path: Path) -> RunManifest:
    with open(path, "rt", encoding="utf-8") as input_file:
        data = json.load(input_file)
    data["seeds"] = tuple(data["seeds"])
    return RunManifest(**data)


def verify_manifest(manifest: RunManifest, directory: Path) -> bool:
    """Return whether all output files in ``directory`` match their recorded digests"""
    return all(
        sha256_file(Path(directory) / name) == digest for name, digest in manifest.outputs.items()
    )
