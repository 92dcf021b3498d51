# -*- coding: utf-8 -*-
#
# cbgraph documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys
sys.path.insert(0, os.path.abspath('..'))


# -- General configuration ------------------------------------------------

needs_sphinx = '1.8.3'

extensions = ['sphinx.ext.autodoc',  # for automatically reading docstrings
              'sphinx.ext.intersphinx',  # link out to other sphinx docs
              'sphinx.ext.todo',
              'sphinx.ext.viewcode',
              'sphinx.ext.napoleon',  # for rendering NumpyDoc style docstrings
              ]

# numba and py_perf_event are not needed to read the docstrings
autodoc_mock_imports = ['numba', 'py_perf_event']

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'cbgraph'
copyright = u'2026, The cbgraph authors'
author = u'The cbgraph authors'
version = u'0.1'
release = u'0.1.0'

language = None

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

pygments_style = 'sphinx'

todo_include_todos = True


# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'

htmlhelp_basename = 'cbgraphdoc'


# -- Options for LaTeX output ---------------------------------------------

latex_elements = {}

latex_documents = [
    (master_doc, 'cbgraph.tex', u'cbgraph Documentation',
     author, 'manual'),
]


# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'cbgraph', u'cbgraph Documentation',
     [author], 1)
]

intersphinx_mapping = {'python': ('https://docs.python.org/3', None),
                       'numpy': ('https://numpy.org/doc/stable/', None)}
