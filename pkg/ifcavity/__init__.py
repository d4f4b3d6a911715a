# -*- coding: utf-8 -*-
"""Interaction-free detection of semitransparent objects in a Fabry-Perot cavity."""

__version__ = "0.1.0"
