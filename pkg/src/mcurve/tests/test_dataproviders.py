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

import json

from zope.component import getAdapter

from mcurve.dataproviders import census_from_dict
from mcurve.dataproviders import census_to_dict
from mcurve.interfaces import IInfo

from .base import BaseTestCase
from .base import example_census


class TestCensusJSON(BaseTestCase):
    """ Census JSON adapters
    """

    def setUp(self):
        super(TestCensusJSON, self).setUp()
        self.census = example_census()
        self.data = census_to_dict(self.census)

    def test_adapter_lookup(self):
        info = getAdapter(self.census.genus[0], IInfo)
        data = info()
        self.assertEqual(data["kind"], "G")
        self.assertEqual(data["diag_lower"], 2)
        self.assertEqual(data["side_crossing"], {"value": 2, "marker": "n"})
        self.assertEqual(data["invisible_genus"],
                         {"count": 1, "side": "right"})
        self.assertEqual(data["twist"],
                         {"total": 1, "m": 0, "t": 1, "base": 1})

    def test_top_level(self):
        self.assertEqual((self.data["n"], self.data["g"]), (3, 3))
        kinds = [region["kind"] for region in self.data["regions"]]
        self.assertEqual(kinds, ["U", "U", "U", "G", "G", "GStar"])

    def test_read_back(self):
        data = json.loads(json.dumps(self.data))
        self.assertEqual(census_from_dict(data), self.census)

    def test_unknown_kind(self):
        self.data["regions"][0]["kind"] = "V"
        error = self.assertCode("BadCensus", census_from_dict, self.data)
        self.assertEqual(error.locus, "regions[0]")

    def test_missing_key(self):
        del self.data["regions"][1]["above"]
        self.assertCode("BadCensus", census_from_dict, self.data)
        self.assertCode("BadCensus", census_from_dict, {"g": 1})
        self.assertCode("BadCensus", census_from_dict, [])

    def test_non_integer_count(self):
        self.data["regions"][3]["vis_above"] = "4"
        self.assertCode("BadCensus", census_from_dict, self.data)

    def test_bad_side(self):
        self.data["regions"][0]["loops"]["side"] = "up"
        self.assertCode("BadCensus", census_from_dict, self.data)

    def test_region_count(self):
        del self.data["regions"][4]
        self.assertCode("BadCensus", census_from_dict, self.data)

    def test_handle_has_no_diagonals(self):
        self.data["regions"][-1]["diag_upper"] = 1
        self.assertCode("InvariantViolation", census_from_dict, self.data)
