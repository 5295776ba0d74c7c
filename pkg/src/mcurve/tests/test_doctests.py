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

import doctest
import os
import unittest

from mcurve import coordinates
from mcurve import decoder
from mcurve import render
from mcurve import surface
from mcurve import underscore

# Option flags for doctests
flags = doctest.ELLIPSIS | doctest.NORMALIZE_WHITESPACE | doctest.REPORT_NDIFF

DOCTEST_MODULES = [
    coordinates,
    decoder,
    render,
    surface,
    underscore,
]


def test_suite():
    suite = unittest.TestSuite()
    for doctest_file in get_doctest_files():
        suite.addTests([
            doctest.DocFileSuite(
                doctest_file,
                optionflags=flags
            )
        ])
    for module in DOCTEST_MODULES:
        suite.addTests(doctest.DocTestSuite(module, optionflags=flags))
    return suite


# collected by zope.testrunner, not by pytest's function discovery
test_suite.__test__ = False


def get_doctest_files():
    """Returns a list with the doctest files
    """
    path = os.path.join(os.path.dirname(__file__), "doctests")
    files = sorted(filter(lambda name: name.endswith(".rst"),
                          os.listdir(path)))
    return [os.path.join("doctests", name) for name in files]
