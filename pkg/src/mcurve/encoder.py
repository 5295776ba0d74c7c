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

"""From a census back to coordinates

Each component type crosses the arcs of its region a fixed number of times.
The table below lists these crossings per arc role; the coordinate of an arc
is the sum over all components of the regions next to it.
"""

from collections import Counter
from dataclasses import fields
from dataclasses import is_dataclass
from enum import Enum
from functools import lru_cache

from mcurve.census import Crossing
from mcurve.coordinates import CoordVector
from mcurve.coordinates import Diagnostics
from mcurve.exceptions import MulticurveError
from mcurve.surface import ArcGroup
from mcurve.surface import ArcId
from mcurve.surface import RegionId
from mcurve.surface import RegionKind
from mcurve.surface import Side
from mcurve.surface import adjacent_arcs
from mcurve.surface import arc_sides
from mcurve.surface import layout
from mcurve.surface import regions
from mcurve.surface import side_of


class Role(str, Enum):
    """Position of an arc relative to the region it bounds or crosses
    """
    LEFT = "left"
    RIGHT = "right"
    LEFT_INVISIBLE = "left_invisible"
    RIGHT_INVISIBLE = "right_invisible"
    ABOVE = "above"
    BELOW = "below"
    INVISIBLE_ABOVE = "invisible_above"
    INVISIBLE_BELOW = "invisible_below"
    GAMMA = "gamma"
    LONGITUDE = "longitude"


class Component(str, Enum):
    ABOVE = "above"
    BELOW = "below"
    LEFT_LOOP = "left_loop"
    RIGHT_LOOP = "right_loop"
    C_CURVE = "c_curve"
    VISIBLE_GENUS_LEFT = "visible_genus_left"
    VISIBLE_GENUS_RIGHT = "visible_genus_right"
    INVISIBLE_GENUS_LEFT = "invisible_genus_left"
    INVISIBLE_GENUS_RIGHT = "invisible_genus_right"
    VIS_ABOVE = "vis_above"
    VIS_BELOW = "vis_below"
    INVIS_ABOVE = "invis_above"
    INVIS_BELOW = "invis_below"
    UPPER_DIAGONAL = "upper_diagonal"
    LOWER_DIAGONAL = "lower_diagonal"
    # a twist component: back end on the invisible left arc, t crossings of γ
    TWIST = "twist"
    # front end of a twist component, on the visible left or right arc
    TWIST_END_LEFT = "twist_end_left"
    TWIST_END_RIGHT = "twist_end_right"
    VISIBLE_GENUS = "visible_genus"
    INVISIBLE_GENUS = "invisible_genus"


# weight standing for the twist number t of the component
TWISTS = "t"

CONTRIBUTIONS = {
    RegionKind.U: {
        Component.ABOVE: {Role.LEFT: 1, Role.RIGHT: 1, Role.ABOVE: 1},
        Component.BELOW: {Role.LEFT: 1, Role.RIGHT: 1, Role.BELOW: 1},
        Component.LEFT_LOOP: {Role.RIGHT: 2, Role.ABOVE: 1, Role.BELOW: 1},
        Component.RIGHT_LOOP: {Role.LEFT: 2, Role.ABOVE: 1, Role.BELOW: 1},
    },
    RegionKind.G: {
        Component.C_CURVE: {Role.GAMMA: 1, Role.ABOVE: 1, Role.BELOW: 1},
        Component.VISIBLE_GENUS_LEFT: {
            Role.RIGHT: 2, Role.ABOVE: 1, Role.BELOW: 1},
        Component.VISIBLE_GENUS_RIGHT: {
            Role.LEFT: 2, Role.ABOVE: 1, Role.BELOW: 1, Role.GAMMA: 1},
        Component.INVISIBLE_GENUS_LEFT: {
            Role.RIGHT_INVISIBLE: 2, Role.INVISIBLE_ABOVE: 1,
            Role.INVISIBLE_BELOW: 1},
        Component.INVISIBLE_GENUS_RIGHT: {
            Role.LEFT_INVISIBLE: 2, Role.INVISIBLE_ABOVE: 1,
            Role.INVISIBLE_BELOW: 1, Role.GAMMA: 1},
        Component.VIS_ABOVE: {Role.LEFT: 1, Role.RIGHT: 1, Role.ABOVE: 1},
        Component.VIS_BELOW: {Role.LEFT: 1, Role.RIGHT: 1, Role.BELOW: 1},
        Component.INVIS_ABOVE: {
            Role.LEFT_INVISIBLE: 1, Role.RIGHT_INVISIBLE: 1,
            Role.INVISIBLE_ABOVE: 1},
        Component.INVIS_BELOW: {
            Role.LEFT_INVISIBLE: 1, Role.RIGHT_INVISIBLE: 1,
            Role.INVISIBLE_BELOW: 1},
        Component.UPPER_DIAGONAL: {
            Role.LEFT_INVISIBLE: 1, Role.RIGHT: 1, Role.LONGITUDE: 1},
        Component.LOWER_DIAGONAL: {
            Role.LEFT_INVISIBLE: 1, Role.RIGHT: 1, Role.LONGITUDE: 1},
        Component.TWIST: {
            Role.LEFT_INVISIBLE: 1, Role.LONGITUDE: 1, Role.GAMMA: TWISTS},
        Component.TWIST_END_LEFT: {Role.LEFT: 1},
        Component.TWIST_END_RIGHT: {Role.RIGHT: 1},
    },
    RegionKind.GSTAR: {
        Component.C_CURVE: {Role.GAMMA: 1},
        Component.VISIBLE_GENUS: {Role.LEFT: 2, Role.GAMMA: 1},
        Component.INVISIBLE_GENUS: {Role.LEFT_INVISIBLE: 2, Role.GAMMA: 1},
        Component.TWIST: {
            Role.LEFT: 1, Role.LEFT_INVISIBLE: 1, Role.LONGITUDE: 1,
            Role.GAMMA: TWISTS},
    },
}

GENUS_COMPONENTS = {
    (Side.LEFT, False): Component.VISIBLE_GENUS_LEFT,
    (Side.RIGHT, False): Component.VISIBLE_GENUS_RIGHT,
    (Side.LEFT, True): Component.INVISIBLE_GENUS_LEFT,
    (Side.RIGHT, True): Component.INVISIBLE_GENUS_RIGHT,
}


@lru_cache(maxsize=None)
def region_roles(sig, region_id):
    """Maps each arc Role of a region to its ArcId
    """
    region = [r for r in regions(sig) if r.id == region_id][0]
    roles = {
        Role.LEFT: region.left,
        Role.RIGHT: region.right,
        Role.LEFT_INVISIBLE: region.left_invisible,
        Role.RIGHT_INVISIBLE: region.right_invisible,
    }
    i = region_id.index
    if region_id.kind is RegionKind.U:
        roles[Role.ABOVE] = ArcId(ArcGroup.ALPHA, 2 * i - 1)
        roles[Role.BELOW] = ArcId(ArcGroup.ALPHA, 2 * i)
    elif region_id.kind is RegionKind.G:
        roles[Role.ABOVE] = ArcId(ArcGroup.XI, 2 * i - 1)
        roles[Role.BELOW] = ArcId(ArcGroup.XI, 2 * i)
        roles[Role.INVISIBLE_ABOVE] = ArcId(ArcGroup.XI_PRIME, 2 * i - 1)
        roles[Role.INVISIBLE_BELOW] = ArcId(ArcGroup.XI_PRIME, 2 * i)
        roles[Role.GAMMA] = ArcId(ArcGroup.GAMMA, i)
        roles[Role.LONGITUDE] = ArcId(ArcGroup.C, i)
    else:
        roles[Role.GAMMA] = ArcId(ArcGroup.GAMMA, sig.g)
        roles[Role.LONGITUDE] = ArcId(ArcGroup.C_STAR)
    return dict((role, arc) for role, arc in roles.items() if arc is not None)


def component_counts(census):
    """Lists (Component, count, twist number) of a region census
    """
    kind = census.region_id.kind
    if kind is RegionKind.U:
        loop = Component.LEFT_LOOP if census.loop_side is Side.LEFT \
            else Component.RIGHT_LOOP
        return [
            (Component.ABOVE, census.above, 0),
            (Component.BELOW, census.below, 0),
            (loop, census.loop_count, 0),
        ]

    dist = census.twist_dist
    if kind is RegionKind.GSTAR:
        return [
            (Component.C_CURVE, census.c_star_curves, 0),
            (Component.VISIBLE_GENUS, census.visible_genus, 0),
            (Component.INVISIBLE_GENUS, census.invisible_genus, 0),
            (Component.TWIST, dist.m, dist.t + 1),
            (Component.TWIST, dist.base, dist.t),
        ]

    on_right = census.on_right
    out = [(Component.C_CURVE, census.c_curves, 0)]
    for genus, invisible in ((census.visible_genus, False),
                             (census.invisible_genus, True)):
        component = GENUS_COMPONENTS.get((genus.side, invisible))
        if component is not None:
            out.append((component, genus.count, 0))
    out.extend([
        (Component.UPPER_DIAGONAL, census.upper_diag, 0),
        (Component.LOWER_DIAGONAL, census.lower_diag, 0),
        (Component.TWIST, dist.m, dist.t + 1),
        (Component.TWIST, dist.base, dist.t),
        (Component.TWIST_END_LEFT, census.c - on_right, 0),
        (Component.TWIST_END_RIGHT, on_right - census.diagonals, 0),
        (Component.VIS_ABOVE, census.vis_above, 0),
        (Component.VIS_BELOW, census.vis_below, 0),
        (Component.INVIS_ABOVE, census.invis_above, 0),
        (Component.INVIS_BELOW, census.invis_below, 0),
    ])
    return out


def twist_xi_crossings(census):
    """ξ_{2i-1} and ξ_{2i} crossings of the twists and diagonals of G_i
    """
    twist = census.twist_total
    if not twist:
        return census.upper_diag, census.lower_diag
    on_right = census.on_right
    above = abs(twist) + max(on_right - census.lower_diag, twist) - \
        max(0, twist)
    below = abs(twist) + max(on_right - census.upper_diag, -twist) - \
        max(0, -twist)
    return above, below


def region_contributions(sig, census):
    """Crossings of all components of one region, per ArcId

    :returns: collections.Counter
    """
    region_id = census.region_id
    roles = region_roles(sig, region_id)
    table = CONTRIBUTIONS[region_id.kind]
    counts = Counter()
    for component, count, twists in component_counts(census):
        for role, weight in table[component].items():
            if weight == TWISTS:
                weight = twists
            counts[roles[role]] += count * weight
    if region_id.kind is RegionKind.G:
        above, below = twist_xi_crossings(census)
        counts[roles[Role.ABOVE]] += above
        counts[roles[Role.BELOW]] += below
    return counts


def arc_endpoint_count(census, arc, side):
    """Endpoints on a β/β′ arc of the components of one adjacent region

    :param side: Side.LEFT / Side.RIGHT, or the RegionId of that side
    """
    sig = census.sig
    if isinstance(side, RegionId):
        if side_of(sig, arc, side) is Side.NONE:
            raise MulticurveError(
                "InvalidArc", "{} does not border {}".format(side, arc),
                locus=str(arc))
        region_id = side
    else:
        left, right = arc_sides(sig, arc)
        region_id = left if Side(side) is Side.LEFT else right
    return region_contributions(sig, census.region(region_id))[arc]


def _negative_fields(obj, prefix=""):
    """Yields the names of negative integer fields, nested ones included
    """
    for item in fields(obj):
        if item.name in ("index", "twist_total"):
            continue
        value = getattr(obj, item.name)
        if is_dataclass(value):
            for name in _negative_fields(value, item.name + "."):
                yield name
        elif isinstance(value, int) and value < 0:
            yield prefix + item.name


def _distribution_problem(dist, twist, allow_untwisted):
    if dist.count == 0:
        if dist.m or dist.t or dist.base or twist:
            return "a twist {} without components to carry it".format(twist)
        return None
    if dist.m >= dist.count:
        return "m = {} is not below the component count {}".format(
            dist.m, dist.count)
    if dist.total != abs(twist):
        return "distribution {} does not add up to |T| = {}".format(
            dist, abs(twist))
    if dist.t < 1 and not allow_untwisted:
        return "components crossing c carry no twist"
    return None


def _genus_problems(census, visible_arcs):
    """Yields the rule violations of a GenusCensus
    """
    c = census.c
    twist = census.twist_total
    upper, lower = census.upper_diag, census.lower_diag
    if upper and lower:
        yield "both upper and lower diagonals"
    if census.c_curves and c:
        yield "c curves next to components crossing c_{}".format(census.index)
    problem = _distribution_problem(census.twist_dist, twist, False)
    if problem:
        yield problem
    if twist:
        diagonals = max(0, c - abs(twist))
        expected = (0, diagonals) if twist > 0 else (diagonals, 0)
        if (upper, lower) != expected:
            yield "T = {} and c = {} need diagonals (upper, lower) = {}" \
                .format(twist, c, expected)
    elif c:
        if upper and census.vis_below >= c:
            yield "upper diagonals with {} below components are not " \
                  "told apart from lower ones".format(census.vis_below)
        if lower and census.vis_above >= c:
            yield "lower diagonals with {} above components are not " \
                  "told apart from upper ones".format(census.vis_above)

    crossing = census.side_crossing
    on_right = census.on_right
    if not 0 <= crossing.value <= c:
        yield "side crossing {} outside 0..{}".format(crossing.label, c)
    elif on_right < census.diagonals:
        yield "only {} crossings on the right for {} diagonals".format(
            on_right, census.diagonals)

    for name, genus in (("visible", census.visible_genus),
                        ("invisible", census.invisible_genus)):
        if (genus.count == 0) != (genus.side is Side.NONE):
            yield "{} genus count {} with side {}".format(
                name, genus.count, genus.side.value)
    if census.visible_genus.side is Side.LEFT and on_right != c:
        yield "left visible genus needs every crossing on the right"
    if census.visible_genus.side is Side.RIGHT and on_right != 0:
        yield "right visible genus needs every crossing on the left"
    if census.invisible_genus.side is Side.LEFT and c:
        yield "left invisible genus next to components crossing c"

    left, right = visible_arcs
    marker = Crossing.N if left <= right else Crossing.K
    if crossing.marker is not marker:
        yield "side crossing marker {} where {} is expected".format(
            crossing.marker.value, marker.value)


def consistency_check(census):
    """Checks the component rules of every region and the arc balance

    :param census: MultiCurveCensus
    :returns: Diagnostics
    """
    sig = census.sig
    diagnostics = Diagnostics()

    expected = [r.id for r in regions(sig)]
    found = [r.region_id for r in census.regions]
    if found != expected:
        diagnostics.add_error(
            "InvariantViolation", "regions {} do not match {}".format(
                ", ".join(map(str, found)), sig), locus="census")
        return diagnostics

    for region in census.regions:
        for name in _negative_fields(region):
            diagnostics.add_error(
                "InvariantViolation", "{} is negative".format(name),
                locus=str(region.region_id))
    if diagnostics:
        return diagnostics

    if census.is_empty:
        diagnostics.add_error(
            "ZeroVector", "the census has no components", locus="census")

    contributions = dict((r.region_id, region_contributions(sig, r))
                         for r in census.regions)
    for arc in adjacent_arcs(sig):
        left, right = arc_sides(sig, arc)
        on_left = contributions[left][arc]
        on_right = contributions[right][arc]
        if on_left != on_right:
            diagnostics.add_error(
                "ArcImbalance", "{} ends {} times from {} but {} times from "
                "{}".format(arc, on_left, left, on_right, right),
                locus=str(arc))

    for region in census.puncture:
        if (region.loop_count == 0) != (region.loop_side is Side.NONE):
            diagnostics.add_error(
                "InvariantViolation", "loop count {} with side {}".format(
                    region.loop_count, region.loop_side.value),
                locus=str(region.region_id))

    for region in census.genus:
        own = contributions[region.region_id]
        roles = region_roles(sig, region.region_id)
        visible_arcs = own[roles[Role.LEFT]], own[roles[Role.RIGHT]]
        for problem in _genus_problems(region, visible_arcs):
            diagnostics.add_error("InvariantViolation", problem,
                                  locus=str(region.region_id))

    handle = census.handle
    if handle.c_star_curves and handle.c:
        diagnostics.add_error(
            "InvariantViolation", "c* curves next to components crossing c*",
            locus="G*")
    problem = _distribution_problem(handle.twist_dist, handle.twist_total,
                                    True)
    if problem:
        diagnostics.add_error("InvariantViolation", problem, locus="G*")
    return diagnostics


def encode(census):
    """Coordinates and twist signs of a census

    :param census: MultiCurveCensus passing consistency_check
    :returns: tuple of (CoordVector, TwistSigns)
    """
    consistency_check(census).raise_for_errors()
    sig = census.sig
    totals = Counter()
    for region in census.regions:
        for arc, count in region_contributions(sig, region).items():
            # shared arcs are balanced, either side gives the coordinate
            totals[arc] = count
    values = [totals[arc] for arc, pos in layout(sig)]
    return CoordVector(sig, values), census.signs()
