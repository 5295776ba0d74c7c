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

from dataclasses import replace

from mcurve.census import HandleCensus
from mcurve.census import MultiCurveCensus
from mcurve.census import PunctureCensus
from mcurve.census import TwistDistribution
from mcurve.encoder import arc_endpoint_count
from mcurve.encoder import consistency_check
from mcurve.encoder import encode
from mcurve.encoder import region_contributions
from mcurve.surface import ArcGroup
from mcurve.surface import ArcId
from mcurve.surface import RegionId
from mcurve.surface import RegionKind
from mcurve.surface import Side
from mcurve.surface import SurfaceSig
from mcurve.surface import beta

from .base import BaseTestCase
from .base import example_census


def with_genus(census, index, **changes):
    genus = list(census.genus)
    genus[index - 1] = replace(genus[index - 1], **changes)
    return replace(census, genus=genus)


def with_puncture(census, index, **changes):
    puncture = list(census.puncture)
    puncture[index - 1] = replace(puncture[index - 1], **changes)
    return replace(census, puncture=puncture)


class TestEncode(BaseTestCase):
    """ Census to coordinates
    """

    def setUp(self):
        super(TestEncode, self).setUp()
        self.census = example_census()

    def codes(self, census):
        return [d.code for d in consistency_check(census)]

    def test_encode_example(self):
        vector, signs = encode(self.census)
        self.assertEqual(vector, self.vector)
        self.assertEqual(signs, self.signs)

    def test_example_is_consistent(self):
        self.assertEqual(consistency_check(self.census), [])

    def test_arc_endpoint_count(self):
        self.assertEqual(
            arc_endpoint_count(self.census, beta(5), Side.LEFT), 7)
        self.assertEqual(
            arc_endpoint_count(self.census, beta(4), Side.RIGHT), 6)
        g1 = RegionId(RegionKind.G, 1)
        self.assertEqual(arc_endpoint_count(self.census, beta(5), g1), 7)
        # β_1 seen from the back of the first handle
        self.assertEqual(arc_endpoint_count(self.census, beta(1), g1), 8)
        self.assertCode("InvalidArc", arc_endpoint_count, self.census,
                        beta(2), g1)

    def test_twist_crossings_of_gamma(self):
        counts = region_contributions(self.sig, self.census.genus[1])
        # one right genus component and four twists
        self.assertEqual(counts[ArcId(ArcGroup.GAMMA, 2)], 5)
        self.assertEqual(counts[ArcId(ArcGroup.C, 2)], 3)

    def test_too_many_lower_diagonals(self):
        census = with_genus(self.census, 1, lower_diag=3)
        codes = self.codes(census)
        self.assertIn("InvariantViolation", codes)
        self.assertIn("ArcImbalance", codes)

    def test_unbalanced_puncture(self):
        census = with_puncture(self.census, 1, above=6)
        self.assertEqual(self.codes(census), ["ArcImbalance", "ArcImbalance"])
        self.assertCode("ArcImbalance", encode, census)

    def test_both_diagonal_types(self):
        census = with_genus(self.census, 1, upper_diag=1, lower_diag=1)
        self.assertIn("InvariantViolation", self.codes(census))

    def test_loop_side_without_loops(self):
        census = with_puncture(self.census, 3, loop_count=0)
        self.assertIn("InvariantViolation", self.codes(census))

    def test_negative_count(self):
        census = with_genus(self.census, 2, vis_above=-1)
        diagnostics = consistency_check(census)
        self.assertEqual([d.code for d in diagnostics],
                         ["InvariantViolation"])
        self.assertEqual(diagnostics[0].locus, "G_2")

    def test_bad_distribution(self):
        census = with_genus(self.census, 2,
                            twist_dist=TwistDistribution(0, 1, 3))
        self.assertIn("InvariantViolation", self.codes(census))

    def test_handle_curves_and_twists(self):
        handle = HandleCensus(c_star_curves=1, visible_genus=1,
                              twist_total=2,
                              twist_dist=TwistDistribution(0, 2, 1))
        census = replace(self.census, handle=handle)
        self.assertIn("InvariantViolation", self.codes(census))

    def test_empty_census(self):
        sig = SurfaceSig(1, 1)
        census = MultiCurveCensus(sig, [], [], HandleCensus())
        self.assertEqual(self.codes(census), ["InvariantViolation"])
        census = MultiCurveCensus(sig, [PunctureCensus(1)], [],
                                  HandleCensus())
        self.assertEqual(self.codes(census), ["ZeroVector"])

    def test_handle_may_have_untwisted_crossings(self):
        sig = SurfaceSig(1, 1)
        census = MultiCurveCensus(
            sig, [PunctureCensus(1, above=1)], [],
            HandleCensus(twist_dist=TwistDistribution(0, 0, 1)))
        self.assertEqual(consistency_check(census), [])
        vector, signs = encode(census)
        self.assertEqual(vector.values, (1, 0, 1, 1, 0, 1))
        self.assertEqual(tuple(signs), (0,))
