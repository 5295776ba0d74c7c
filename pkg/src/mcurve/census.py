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

"""Path component counts of a multicurve, region by region
"""

from dataclasses import dataclass
from dataclasses import field
from enum import Enum
from typing import Tuple

from zope.interface import implementer

from mcurve.coordinates import TwistSigns
from mcurve.interfaces import IGenusCensus
from mcurve.interfaces import IHandleCensus
from mcurve.interfaces import IPunctureCensus
from mcurve.surface import RegionId
from mcurve.surface import RegionKind
from mcurve.surface import Side
from mcurve.surface import SurfaceSig


class Crossing(str, Enum):
    """Which count a side crossing holds

    N counts the twist and diagonal components ending on the right visible
    arc, K those ending on the left one.
    """
    N = "n"
    K = "k"


@dataclass(frozen=True)
class TwistDistribution:
    """m components with t+1 twists and `base` components with t twists
    """
    m: int = 0
    t: int = 0
    base: int = 0

    @property
    def count(self):
        return self.m + self.base

    @property
    def total(self):
        return self.m * (self.t + 1) + self.base * self.t


@dataclass(frozen=True)
class GenusCount:
    count: int = 0
    side: Side = Side.NONE


@dataclass(frozen=True)
class SideCrossing:
    value: int = 0
    marker: Crossing = Crossing.N

    def on_right(self, total):
        """Number of the `total` crossing components ending on the right arc
        """
        if self.marker is Crossing.N:
            return self.value
        return total - self.value

    @property
    def label(self):
        return "{}={}".format(self.marker.value, self.value)


@implementer(IPunctureCensus)
@dataclass(frozen=True)
class PunctureCensus:
    index: int
    above: int = 0
    below: int = 0
    loop_count: int = 0
    loop_side: Side = Side.NONE

    @property
    def region_id(self):
        return RegionId(RegionKind.U, self.index)

    @property
    def b(self):
        """The signed loop number, negative for left loops
        """
        if self.loop_side is Side.LEFT:
            return -self.loop_count
        return self.loop_count

    def total(self):
        return self.above + self.below + self.loop_count


@implementer(IGenusCensus)
@dataclass(frozen=True)
class GenusCensus:
    index: int
    c_curves: int = 0
    visible_genus: GenusCount = field(default_factory=GenusCount)
    invisible_genus: GenusCount = field(default_factory=GenusCount)
    upper_diag: int = 0
    lower_diag: int = 0
    twist_total: int = 0
    twist_dist: TwistDistribution = field(default_factory=TwistDistribution)
    vis_above: int = 0
    vis_below: int = 0
    invis_above: int = 0
    invis_below: int = 0
    side_crossing: SideCrossing = field(default_factory=SideCrossing)

    @property
    def region_id(self):
        return RegionId(RegionKind.G, self.index)

    @property
    def diagonals(self):
        return self.upper_diag + self.lower_diag

    @property
    def c(self):
        """Number of components crossing the longitude c_i
        """
        return self.diagonals + self.twist_dist.count

    @property
    def on_right(self):
        return self.side_crossing.on_right(self.c)

    def total(self):
        return (self.c_curves + self.visible_genus.count +
                self.invisible_genus.count + self.c + self.vis_above +
                self.vis_below + self.invis_above + self.invis_below)


@implementer(IHandleCensus)
@dataclass(frozen=True)
class HandleCensus:
    c_star_curves: int = 0
    visible_genus: int = 0
    invisible_genus: int = 0
    twist_total: int = 0
    twist_dist: TwistDistribution = field(default_factory=TwistDistribution)

    @property
    def region_id(self):
        return RegionId(RegionKind.GSTAR)

    @property
    def c(self):
        return self.twist_dist.count

    def total(self):
        return (self.c_star_curves + self.visible_genus +
                self.invisible_genus + self.c)


@dataclass(frozen=True)
class MultiCurveCensus:
    sig: SurfaceSig
    puncture: Tuple[PunctureCensus, ...]
    genus: Tuple[GenusCensus, ...]
    handle: HandleCensus

    def __post_init__(self):
        object.__setattr__(self, "puncture", tuple(self.puncture))
        object.__setattr__(self, "genus", tuple(self.genus))

    @property
    def regions(self):
        """All region censuses, left to right
        """
        return self.puncture + self.genus + (self.handle,)

    def region(self, region_id):
        for census in self.regions:
            if census.region_id == region_id:
                return census
        raise KeyError(str(region_id))

    def signs(self):
        totals = [census.twist_total for census in self.genus]
        totals.append(self.handle.twist_total)
        return TwistSigns([(t > 0) - (t < 0) for t in totals])

    def total(self):
        return sum(census.total() for census in self.regions)

    @property
    def is_empty(self):
        return self.total() == 0
