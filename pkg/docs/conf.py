#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# ifcavity documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys

sys.path.insert(0, os.path.abspath(".."))

import ifcavity  # noqa: E402


# -- General configuration ---------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.viewcode",
    "sphinx.ext.doctest",
    "sphinx.ext.autosummary",
    "sphinx.ext.mathjax",
    "m2r",
]

templates_path = ["_templates"]

source_suffix = ".rst"

master_doc = "index"

project = u"ifcavity"
copyright = u"2024, ifcavity developers"
author = u"ifcavity developers"

# The short X.Y version and the full version, including alpha/beta/rc tags.
version = ifcavity.__version__
release = ifcavity.__version__

language = None

exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

pygments_style = "sphinx"

todo_include_todos = False


# -- Options for HTML output -------------------------------------------

html_theme = "sphinx_rtd_theme"

html_static_path = ["_static"]


# -- Options for HTMLHelp output ---------------------------------------

htmlhelp_basename = "ifcavitydoc"


# -- Options for LaTeX output ------------------------------------------

latex_elements = {}

latex_documents = [
    (master_doc, "ifcavity.tex", u"ifcavity Documentation", author, "manual")
]


# -- Options for manual page output ------------------------------------

man_pages = [(master_doc, "ifcavity", u"ifcavity Documentation", [author], 1)]


# -- Options for Texinfo output ----------------------------------------

texinfo_documents = [
    (
        master_doc,
        "ifcavity",
        u"ifcavity Documentation",
        author,
        "ifcavity",
        "Interaction-free detection of semitransparent objects with a Fabry-Perot cavity.",
        "Science",
    )
]


# -- Autodoc -----------------------------------------------------------

autodoc_member_order = "bysource"
autodoc_default_flags = ["members", "undoc-members"]
