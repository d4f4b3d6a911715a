# -*- coding: utf-8 -*-
"""Module for reading and writing run configurations, result tables and run manifests."""

# Make all models and the ``*Reader``, ``*Writer`` and ``*Validator`` classes visible within this
# module.

from .models import *  # noqa: F403, F401
from .manifest import build_manifest, read_manifest, verify_manifest, write_manifest  # noqa: F401
from .parse_config import ConfigReader  # noqa: F401
from .validate_config import RunValidator  # noqa: F401
from .write_config import ConfigWriter  # noqa: F401
from .write_tables import TableWriter  # noqa: F401
