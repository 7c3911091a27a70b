#!/usr/bin/python3
# -*- coding: utf-8 -*-

"""
    Configuration file for the Sphinx documentation builder.
"""

import os
import sys

# Import the package from the repository root.
sys.path.insert(0, os.path.abspath('../..'))


"""
    PROJECT INFORMATION
"""

AUTHOR = 'The Hertzsprung developers'
DESCRIPTION = 'Hertzsprung patterns, clusters and pattern-rewriting systems in Python'
PROJECT = 'Hertzsprung'
VERSION = '0.1.0'

author = AUTHOR
# noinspection PyShadowingBuiltins
copyright = f'Developed by {AUTHOR}'
project = PROJECT
release = VERSION
version = VERSION

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'm2r2',
]

add_module_names = False
autoclass_content = 'both'
autodoc_member_order = 'bysource'
master_doc = 'index'
source_suffix = '.rst'

rst_prolog = f'.. |project| replace:: {PROJECT}\n'


"""
    HTML OUTPUT
"""

html_theme = 'alabaster'
html_theme_options = {
    'description': DESCRIPTION,
}


"""
    MANPAGE OUTPUT
"""

man_pages = [
    (master_doc, 'hertzsprung', f'{PROJECT} Documentation', [author], 1)
]
