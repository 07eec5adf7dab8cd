# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.
#
# This file does only contain a selection of the most common options. For a
# full list see the documentation:
# http://www.sphinx-doc.org/en/master/config

# -- Project information -----------------------------------------------------

project = "NetReserve"
# noinspection PyShadowingBuiltins
copyright = "2026, NetReserve developers"
author = "NetReserve developers"

# The full version, including alpha/beta/rc tags
release = "0.1.0"
# The short X.Y version
version = ".".join(release.split(".")[:2])

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.doctest",
    "sphinx.ext.intersphinx",
    "sphinx.ext.coverage",
    "sphinx.ext.mathjax",
]

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"
language = None
exclude_patterns = []
pygments_style = "sphinx"

# -- Options for HTML output -------------------------------------------------

html_theme = "alabaster"
html_theme_options = {
    "description": "Simulate and benchmark online randomized resource reservations.",
    "fixed_sidebar": False,
    "page_width": 1024,
}
html_title = "NetReserve Documentation ({})".format(version)
html_show_sourcelink = False
html_domain_indices = False

# -- Options for HTMLHelp output ---------------------------------------------

htmlhelp_basename = "NetReserveDoc"

# -- Options for LaTeX output ------------------------------------------------

latex_elements = {}
latex_documents = [
    (master_doc, "NetReserve.tex", "NetReserve Documentation", author, "manual"),
]

# -- Options for manual page output ------------------------------------------

man_pages = [(master_doc, "netreserve", "NetReserve Documentation", [author], 1)]

# -- Options for Texinfo output ----------------------------------------------

texinfo_documents = [
    (
        master_doc,
        "NetReserve",
        "NetReserve Documentation",
        author,
        "NetReserve",
        "Simulate and benchmark online randomized resource reservations.",
        "Miscellaneous",
    ),
]

# -- Options for Epub output -------------------------------------------------

epub_title = project
epub_author = author
epub_copyright = author
epub_exclude_files = ["search.html"]

# -- Extension configuration -------------------------------------------------

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
}

# -- Options for doctest -----------------------------------------------------

doctest_global_setup = "import numpy as np"
