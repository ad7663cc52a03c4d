# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.

import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join('..', '..')))

from suncount import __version__  # noqa: E402

# -- Project information -----------------------------------------------------

project = 'suncount'
author = 'suncount developers'
copyright = '2019, ' + author

version = '.'.join(__version__.split('.')[:2])
release = __version__

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
language = None
exclude_patterns = []
pygments_style = 'sphinx'

# -- Options for HTML output -------------------------------------------------

html_theme = 'alabaster'
html_static_path = ['_static']
htmlhelp_basename = 'suncountdoc'

# -- Options for manual page output ------------------------------------------

man_pages = [(master_doc, 'suncount', 'suncount Documentation', [author], 1)]

intersphinx_mapping = {'https://docs.python.org/': None}
