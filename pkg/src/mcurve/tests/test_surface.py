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

from mcurve.surface import ArcGroup
from mcurve.surface import ArcId
from mcurve.surface import RegionId
from mcurve.surface import RegionKind
from mcurve.surface import Side
from mcurve.surface import SurfaceSig
from mcurve.surface import adjacent_arcs
from mcurve.surface import arc_sides
from mcurve.surface import beta
from mcurve.surface import beta_prime
from mcurve.surface import coord_dimension
from mcurve.surface import flat_index
from mcurve.surface import invisible_arc
from mcurve.surface import layout
from mcurve.surface import regions
from mcurve.surface import side_of

from .base import BaseTestCase


class TestSurface(BaseTestCase):
    """ Surface model and arc layout
    """

    def test_dimension(self):
        self.assertEqual(coord_dimension(SurfaceSig(1, 1)), 6)
        self.assertEqual(coord_dimension(SurfaceSig(3, 3)), 28)
        self.assertEqual(SurfaceSig(2, 4).dimension, 33)

    def test_layout_length_matches_dimension(self):
        for n in range(1, 5):
            for g in range(1, 5):
                sig = SurfaceSig(n, g)
                self.assertEqual(len(layout(sig)), sig.dimension)

    def test_layout_order(self):
        names = [str(arc) for arc, pos in layout(SurfaceSig(1, 2))]
        self.assertEqual(names, [
            "alpha_1", "alpha_2", "beta_1", "beta_2", "beta_3", "beta'_3",
            "xi_1", "xi_2", "xi'_1", "xi'_2", "gamma_1", "gamma_2", "c_1",
            "c*"])

    def test_flat_index_inverts_layout(self):
        sig = SurfaceSig(3, 3)
        for arc, pos in layout(sig):
            self.assertEqual(flat_index(sig, arc), pos)

    def test_flat_index_unknown_arc(self):
        sig = SurfaceSig(1, 1)
        self.assertCode("InvalidArc", flat_index, sig, ArcId(ArcGroup.C, 1))
        self.assertCode("InvalidArc", flat_index, sig, beta_prime(2))

    def test_invalid_signature(self):
        self.assertCode("InvalidSignature", SurfaceSig, 0, 1)
        self.assertCode("InvalidSignature", SurfaceSig, 1, 0)
        self.assertCode("InvalidSignature", SurfaceSig, True, 1)

    def test_regions(self):
        sig = SurfaceSig(3, 3)
        ids = [str(region.id) for region in regions(sig)]
        self.assertEqual(ids, ["U_1", "U_2", "U_3", "G_1", "G_2", "G*"])
        g1 = regions(sig)[3]
        self.assertEqual(g1.left, beta(4))
        self.assertEqual(g1.right, beta(5))
        # the invisible side of the first handle starts at β_1
        self.assertEqual(g1.left_invisible, beta(1))
        self.assertEqual(g1.right_invisible, beta_prime(5))
        handle = regions(sig)[-1]
        self.assertEqual((handle.left, handle.left_invisible),
                         (beta(6), beta_prime(6)))
        self.assertIsNone(handle.right)

    def test_invisible_arc(self):
        sig = SurfaceSig(3, 3)
        self.assertEqual(invisible_arc(sig, 4), beta(1))
        self.assertEqual(invisible_arc(sig, 5), beta_prime(5))

    def test_arc_sides(self):
        sig = SurfaceSig(3, 3)
        u1 = RegionId(RegionKind.U, 1)
        g1 = RegionId(RegionKind.G, 1)
        g2 = RegionId(RegionKind.G, 2)
        handle = RegionId(RegionKind.GSTAR)
        self.assertEqual(arc_sides(sig, beta(1)), (u1, g1))
        self.assertEqual(arc_sides(sig, beta(2)),
                         (u1, RegionId(RegionKind.U, 2)))
        self.assertEqual(arc_sides(sig, beta(4)),
                         (RegionId(RegionKind.U, 3), g1))
        self.assertEqual(arc_sides(sig, beta(5)), (g1, g2))
        self.assertEqual(arc_sides(sig, beta_prime(6)), (g2, handle))
        self.assertEqual(side_of(sig, beta(5), g2), Side.RIGHT)
        self.assertEqual(side_of(sig, beta(5), handle), Side.NONE)

    def test_arc_sides_single_handle(self):
        sig = SurfaceSig(2, 1)
        handle = RegionId(RegionKind.GSTAR)
        self.assertEqual(arc_sides(sig, beta(1))[1], handle)
        self.assertEqual(arc_sides(sig, beta(3))[1], handle)

    def test_arc_sides_rejects_crossing_arcs(self):
        sig = SurfaceSig(1, 1)
        self.assertCode("InvalidArc", arc_sides, sig,
                        ArcId(ArcGroup.ALPHA, 1))

    def test_every_shared_arc_has_two_sides(self):
        sig = SurfaceSig(2, 3)
        for arc in adjacent_arcs(sig):
            left, right = arc_sides(sig, arc)
            self.assertNotEqual(left, right)
            bordering = [region.id for region in regions(sig)
                         if arc in (region.left, region.right,
                                    region.left_invisible,
                                    region.right_invisible)]
            self.assertEqual(side_of(sig, arc, left), Side.LEFT)
            self.assertEqual(side_of(sig, arc, right), Side.RIGHT)
            self.assertEqual(sorted(map(str, bordering)),
                             sorted([str(left), str(right)]))

    def test_labels(self):
        self.assertEqual(beta_prime(5).label, "β′5")
        self.assertEqual(str(ArcId(ArcGroup.C_STAR)), "c*")
        self.assertEqual(str(SurfaceSig(3, 3)), "S_3,3")
