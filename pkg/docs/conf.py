# -*- coding: utf-8 -*-
#
# This file is part of MCURVE.
#
# MCURVE is free software: you can redistribute it and/or modify it under
# the terms of the GNU General Public License as published by the Free Software
# Foundation, version 2.
#
# This program is distributed in the hope that it will be useful, but WITHOUT
# ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS
# FOR A PARTICULAR PURPOSE. See the GNU General Public License for more
# details.
#
# You should have received a copy of the GNU General Public License along with
# this program; if not, write to the Free Software Foundation, Inc., 51
# Franklin Street, Fifth Floor, Boston, MA 02110-1301 USA.
#
# Copyright 2024-2026 by its authors.
# Some rights reserved, see README and LICENSE.

import sys
import os

# The package lives in src/
sys.path.insert(0, os.path.abspath('../src'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'mcurve'
copyright = u'2024-2026, MCURVE developers'

version = '1.0.0'
release = '1.0.0'

exclude_patterns = ['_build']

pygments_style = 'sphinx'

# -- Options for HTML output ----------------------------------------------

html_theme = 'default'

html_static_path = ['_static']

htmlhelp_basename = 'mcurvedoc'

# -- Options for manual page output ---------------------------------------

man_pages = [
    ('index', 'mcurve', u'mcurve Documentation',
     [u'MCURVE developers'], 1)
]
