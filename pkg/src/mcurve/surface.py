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

"""Surface signature, coordinate layout and region adjacency of S_{n,g}

The surface is cut into n puncture regions U_1..U_n, g-1 genus regions
G_1..G_{g-1} and the last handle region G*. Visible β arcs chain the regions
from left to right, the invisible β′ arcs run along the back of the handles
and close up at β_1.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import List
from typing import Optional

from mcurve import config
from mcurve import underscore as u
from mcurve.exceptions import MulticurveError


class ArcGroup(str, Enum):
    ALPHA = "alpha"
    BETA = "beta"
    BETA_PRIME = "beta_prime"
    XI = "xi"
    XI_PRIME = "xi_prime"
    GAMMA = "gamma"
    C = "c"
    C_STAR = "c_star"


GROUPS = tuple(ArcGroup(name) for name in config.GROUP_ORDER)

# ASCII and display names of the groups
ASCII_NAMES = {
    ArcGroup.ALPHA: "alpha",
    ArcGroup.BETA: "beta",
    ArcGroup.BETA_PRIME: "beta'",
    ArcGroup.XI: "xi",
    ArcGroup.XI_PRIME: "xi'",
    ArcGroup.GAMMA: "gamma",
    ArcGroup.C: "c",
}
SYMBOLS = {
    ArcGroup.ALPHA: "α",
    ArcGroup.BETA: "β",
    ArcGroup.BETA_PRIME: "β′",
    ArcGroup.XI: "ξ",
    ArcGroup.XI_PRIME: "ξ′",
    ArcGroup.GAMMA: "γ",
    ArcGroup.C: "c",
}


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"
    NONE = "none"


class RegionKind(str, Enum):
    U = "U"
    G = "G"
    GSTAR = "GStar"


@dataclass(frozen=True)
class SurfaceSig:
    """The surface S_{n,g}: n punctures, genus g, one boundary component
    """
    n: int
    g: int

    def __post_init__(self):
        for name in ("n", "g"):
            value = getattr(self, name)
            if not u.is_integer(value) or value < 1:
                raise MulticurveError(
                    "InvalidSignature",
                    "{} must be an integer >= 1, got {!r}".format(name, value))

    @property
    def dimension(self):
        return coord_dimension(self)

    def group_indices(self, group):
        """Returns the 1-based index range of an arc group

        :param group: the ArcGroup
        :returns: range of valid indices, possibly empty
        """
        n, g = self.n, self.g
        group = ArcGroup(group)
        if group is ArcGroup.ALPHA:
            return range(1, 2 * n + 1)
        if group is ArcGroup.BETA:
            return range(1, n + g + 1)
        if group is ArcGroup.BETA_PRIME:
            return range(n + 2, n + g + 1)
        if group in (ArcGroup.XI, ArcGroup.XI_PRIME):
            return range(1, 2 * g - 1)
        if group is ArcGroup.GAMMA:
            return range(1, g + 1)
        if group is ArcGroup.C:
            return range(1, g)
        return range(1, 2)

    def group_size(self, group):
        return len(self.group_indices(group))

    def __str__(self):
        return "S_{},{}".format(self.n, self.g)


@dataclass(frozen=True, order=True)
class ArcId:
    """One arc (or closed curve) of the coordinate system
    """
    group: ArcGroup
    index: int = 1

    def __str__(self):
        if self.group is ArcGroup.C_STAR:
            return "c*"
        return "{}_{}".format(ASCII_NAMES[self.group], self.index)

    @property
    def label(self):
        """Short display label, e.g. β′5
        """
        if self.group is ArcGroup.C_STAR:
            return "c*"
        return "{}{}".format(SYMBOLS[self.group], self.index)


@dataclass(frozen=True)
class RegionId:
    kind: RegionKind
    index: Optional[int] = None

    def __str__(self):
        if self.kind is RegionKind.GSTAR:
            return "G*"
        return "{}_{}".format(self.kind.value, self.index)


@dataclass(frozen=True)
class Region:
    """A region together with the β/β′ arcs bounding it

    `left_invisible` is the β′ arc (or β_1) entering the region along the
    back of the handles. G* has no right hand arcs.
    """
    id: RegionId
    left: ArcId
    right: Optional[ArcId] = None
    left_invisible: Optional[ArcId] = None
    right_invisible: Optional[ArcId] = None


def coord_dimension(sig):
    """Returns the number of entries of a coordinate vector on the surface
    """
    return 3 * sig.n + 8 * sig.g - 5


def beta(index):
    return ArcId(ArcGroup.BETA, index)


def beta_prime(index):
    return ArcId(ArcGroup.BETA_PRIME, index)


def invisible_arc(sig, index):
    """Returns the invisible arc β′_index, which is β_1 for index n+1
    """
    if index == sig.n + 1:
        return beta(1)
    return beta_prime(index)


def genus_region(sig, i):
    """Returns the RegionId of G_i, or G* for i = g
    """
    if i == sig.g:
        return RegionId(RegionKind.GSTAR)
    return RegionId(RegionKind.G, i)


@lru_cache(maxsize=None)
def _layout(sig):
    arcs = []
    for group in GROUPS:
        for index in sig.group_indices(group):
            arcs.append(ArcId(group, index))
    return tuple(arcs)


@lru_cache(maxsize=None)
def _positions(sig):
    return dict((arc, pos) for pos, arc in enumerate(_layout(sig)))


def layout(sig):
    """Returns the ordered list of (ArcId, flat index) of the coordinate vector

    >>> sig = SurfaceSig(3, 3)
    >>> str(layout(sig)[12][0])
    "beta'_5"
    >>> str(layout(sig)[-1][0])
    'c*'
    """
    return [(arc, pos) for pos, arc in enumerate(_layout(sig))]


def flat_index(sig, arc):
    """Returns the 0-based position of the arc inside the coordinate vector
    """
    try:
        return _positions(sig)[arc]
    except KeyError:
        raise MulticurveError(
            "InvalidArc", "{} is not an arc of {}".format(arc, sig),
            locus=str(arc))


def regions(sig):
    """Returns the regions of the surface, left to right

    :param sig: SurfaceSig
    :returns: list of Region
    """
    n, g = sig.n, sig.g
    out = []  # type: List[Region]
    for i in range(1, n + 1):
        out.append(Region(RegionId(RegionKind.U, i), beta(i), beta(i + 1)))
    for i in range(1, g):
        out.append(Region(
            RegionId(RegionKind.G, i),
            left=beta(n + i),
            right=beta(n + i + 1),
            left_invisible=invisible_arc(sig, n + i),
            right_invisible=beta_prime(n + i + 1)))
    out.append(Region(
        RegionId(RegionKind.GSTAR),
        left=beta(n + g),
        left_invisible=invisible_arc(sig, n + g)))
    return out


def arc_sides(sig, arc):
    """Returns the (Left, Right) regions adjacent to a β or β′ arc

    β_1 has U_1 on its Left and the invisible side of G_1 (or G*) on its
    Right.

    :returns: tuple of two RegionIds
    """
    n, g = sig.n, sig.g
    if arc.group not in (ArcGroup.BETA, ArcGroup.BETA_PRIME):
        raise MulticurveError(
            "InvalidArc", "{} does not separate two regions".format(arc),
            locus=str(arc))
    flat_index(sig, arc)
    i = arc.index
    if arc.group is ArcGroup.BETA and i == 1:
        return RegionId(RegionKind.U, 1), genus_region(sig, 1)
    if arc.group is ArcGroup.BETA and i <= n:
        return RegionId(RegionKind.U, i - 1), RegionId(RegionKind.U, i)
    if arc.group is ArcGroup.BETA and i == n + 1:
        return RegionId(RegionKind.U, n), genus_region(sig, 1)
    # β_{n+j+1} and β′_{n+j+1} separate G_j from G_{j+1} (or G*)
    j = i - n - 1
    return genus_region(sig, j), genus_region(sig, j + 1)


def side_of(sig, arc, region_id):
    """Returns on which Side of the arc the region lies
    """
    left, right = arc_sides(sig, arc)
    if region_id == left:
        return Side.LEFT
    if region_id == right:
        return Side.RIGHT
    return Side.NONE


def adjacent_arcs(sig):
    """Returns all arcs shared by two regions, in layout order

    :returns: tuple of ArcIds
    """
    return tuple(arc for arc in _layout(sig) if arc.group in
                 (ArcGroup.BETA, ArcGroup.BETA_PRIME))

