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

"""Schematic pictures of a census

Each region gets a vertical lane. The upper half of a lane is the visible
side of the surface, the lower half the invisible side behind the handles.
Every path component is one polyline inside the group of its region.
"""

from dataclasses import dataclass

import svgwrite

from mcurve import config
from mcurve import logger
from mcurve import underscore as u
from mcurve.coordinates import Diagnostics
from mcurve.encoder import consistency_check
from mcurve.exceptions import MulticurveError
from mcurve.surface import RegionKind
from mcurve.surface import Side
from mcurve.surface import regions


@dataclass(frozen=True)
class RenderSpec:
    census: object
    width: int = config.RENDER_WIDTH
    height: int = config.RENDER_HEIGHT
    show_labels: bool = config.RENDER_SHOW_LABELS
    strand_spacing: int = config.RENDER_STRAND_SPACING

    def __post_init__(self):
        for name in ("width", "height", "strand_spacing"):
            value = getattr(self, name)
            if not u.is_integer(value) or value <= 0:
                raise MulticurveError(
                    "InvalidConfig", "{} must be a positive integer, got {!r}"
                    .format(name, value), locus=name)


def _r(value):
    return round(float(value), 2)


class Lane(object):
    """Geometry of one region lane and a cursor over its strand rows
    """

    MARGIN_TOP = 28
    MARGIN_BOTTOM = 12
    PADDING = 6

    def __init__(self, index, count, spec):
        width = spec.width / float(count)
        self.x0 = _r(index * width + self.PADDING)
        self.x1 = _r((index + 1) * width - self.PADDING)
        self.xm = _r((self.x0 + self.x1) / 2)
        self.top = self.MARGIN_TOP
        self.middle = _r(spec.height / 2.0)
        self.bottom = spec.height - self.MARGIN_BOTTOM
        self.spacing = spec.strand_spacing
        self.rows = {True: 0, False: 0}

    def next_y(self, visible=True):
        """y of the next free strand row, wrapping inside its half
        """
        low, high = (self.top, self.middle) if visible else \
            (self.middle, self.bottom)
        slots = max(1, int((high - low) // self.spacing) - 1)
        row = self.rows[visible] % slots
        self.rows[visible] += 1
        return _r(low + (row + 1) * self.spacing)


class SchematicDrawer(object):
    """Draws a census with svgwrite
    """

    STROKE = "black"
    ARC_STROKE = "#888888"
    STRAND_COLORS = {
        "through": "#1f77b4",
        "loop": "#2ca02c",
        "curve": "#9467bd",
        "diagonal": "#d62728",
        "twist": "#ff7f0e",
    }
    LABEL_FONT = {"font_size": 10, "font_family": "Sans,Arial",
                  "text_anchor": "middle"}

    def __init__(self, spec):
        self.spec = spec
        self.census = spec.census
        self.drawing = svgwrite.Drawing(
            size=(spec.width, spec.height), profile="full", debug=False)
        self.regions = regions(self.census.sig)

    def strand(self, group, points, kind):
        group.add(self.drawing.polyline(
            [(_r(x), _r(y)) for x, y in points],
            class_="strand {}".format(kind),
            stroke=self.STRAND_COLORS[kind], fill="none"))

    def through(self, group, lane, count, above, visible=True):
        for _ in range(count):
            y = lane.next_y(visible)
            bend = -lane.spacing / 2.0 if above else lane.spacing / 2.0
            self.strand(group, [(lane.x0, y), (lane.xm, y + bend),
                                (lane.x1, y)], "through")

    def loops(self, group, lane, count, on_left, visible=True):
        """Loops with both ends on the left (or right) arc of the lane
        """
        x_end = lane.x0 if on_left else lane.x1
        for _ in range(count):
            y = lane.next_y(visible)
            h = lane.spacing / 2.0
            self.strand(group, [(x_end, y), (lane.xm, y), (lane.xm, y + h),
                                (x_end, y + h)], "loop")

    def curves(self, group, lane, count):
        for _ in range(count):
            y = lane.next_y(True)
            w, h = lane.spacing, lane.spacing / 2.0
            self.strand(group, [(lane.xm - w, y), (lane.xm, y - h),
                                (lane.xm + w, y), (lane.xm, y + h),
                                (lane.xm - w, y)], "curve")

    def crossing(self, group, lane, to_right, twists, kind):
        """A component from the invisible left arc to a visible arc

        Twists are marked as small kinks along the way.
        """
        start = (lane.x0, lane.next_y(False))
        end = (lane.x1 if to_right else lane.x0, lane.next_y(True))
        points = [start]
        for k in range(1, twists + 1):
            f = k / float(twists + 1)
            x = start[0] + f * (end[0] - start[0]) + (lane.xm - lane.x0) * f
            y = start[1] + f * (end[1] - start[1])
            s = lane.spacing / 2.0
            points.extend([(x, y), (x + s, y - s), (x - s, y - s), (x, y)])
        points.append(end)
        self.strand(group, points, kind)

    def draw_puncture(self, group, lane, census):
        self.through(group, lane, census.above, above=True)
        self.through(group, lane, census.below, above=False)
        self.loops(group, lane, census.loop_count,
                   on_left=census.loop_side is Side.RIGHT)

    def draw_genus(self, group, lane, census):
        self.curves(group, lane, census.c_curves)
        for genus, visible in ((census.visible_genus, True),
                               (census.invisible_genus, False)):
            self.loops(group, lane, genus.count,
                       on_left=genus.side is Side.RIGHT, visible=visible)
        for _ in range(census.diagonals):
            self.crossing(group, lane, True, 0, "diagonal")
        dist = census.twist_dist
        twists = [dist.t + 1] * dist.m + [dist.t] * dist.base
        on_left = census.c - census.on_right
        for k, t in enumerate(twists):
            self.crossing(group, lane, k >= on_left, t, "twist")
        self.through(group, lane, census.vis_above, above=True)
        self.through(group, lane, census.vis_below, above=False)
        self.through(group, lane, census.invis_above, True, visible=False)
        self.through(group, lane, census.invis_below, False, visible=False)

    def draw_handle(self, group, lane, census):
        self.curves(group, lane, census.c_star_curves)
        self.loops(group, lane, census.visible_genus, on_left=True)
        self.loops(group, lane, census.invisible_genus, on_left=True,
                   visible=False)
        dist = census.twist_dist
        for t in [dist.t + 1] * dist.m + [dist.t] * dist.base:
            self.crossing(group, lane, False, t, "twist")

    def draw_surface(self, lanes):
        dwg = self.drawing
        arcs = dwg.g(id="arcs")
        for region, lane in zip(self.regions, lanes):
            arcs.add(dwg.line((lane.x0, lane.top), (lane.x0, lane.middle),
                              stroke=self.ARC_STROKE))
            arcs.add(dwg.line((lane.x0, lane.middle), (lane.x0, lane.bottom),
                              stroke=self.ARC_STROKE, stroke_dasharray="4,2"))
            if region.id.kind is RegionKind.U:
                arcs.add(dwg.circle((lane.xm, lane.middle - 4), 3,
                                    fill=self.STROKE))
            else:
                arcs.add(dwg.ellipse((lane.xm, lane.middle), (12, 5),
                                     stroke=self.STROKE, fill="none"))
            if not self.spec.show_labels:
                continue
            arcs.add(dwg.text(str(region.id), (lane.xm, 12),
                              fill=self.STROKE, **self.LABEL_FONT))
            arcs.add(dwg.text(region.left.label, (lane.x0, 24),
                              fill=self.ARC_STROKE, **self.LABEL_FONT))
            if region.left_invisible is not None:
                arcs.add(dwg.text(region.left_invisible.label,
                                  (lane.x0, lane.bottom + 10),
                                  fill=self.ARC_STROKE, **self.LABEL_FONT))
        dwg.add(arcs)

    def draw(self):
        dwg = self.drawing
        lanes = [Lane(k, len(self.regions), self.spec)
                 for k in range(len(self.regions))]
        self.draw_surface(lanes)
        painters = {
            RegionKind.U: self.draw_puncture,
            RegionKind.G: self.draw_genus,
            RegionKind.GSTAR: self.draw_handle,
        }
        for census, lane in zip(self.census.regions, lanes):
            region_id = census.region_id
            name = "GStar" if region_id.kind is RegionKind.GSTAR \
                else str(region_id)
            group = dwg.g(id="region-{}".format(name), class_="region")
            painters[region_id.kind](group, lane, census)
            dwg.add(group)
        return dwg.tostring()


def render_svg(spec):
    """SVG text of the census schematic

    :param spec: RenderSpec
    :returns: SVG document as string
    """
    diagnostics = Diagnostics(d for d in consistency_check(spec.census)
                              if d.code != "ZeroVector")
    diagnostics.raise_for_errors(code="InconsistentCensus")
    logger.debug("Rendering census on {}".format(spec.census.sig))
    return SchematicDrawer(spec).draw()


def _genus_text(genus):
    if not genus.count:
        return "0"
    return "{} {}".format(genus.count, genus.side.value)


def _twists_text(dist, total):
    parts = []
    if dist.base:
        parts.append(u"{}×t={}".format(dist.base, dist.t))
    if dist.m:
        parts.append(u"{}×t={}".format(dist.m, dist.t + 1))
    text = "twists {}".format(dist.count)
    if parts:
        text += " ({})".format(", ".join(parts))
    return text + ", total twist {}".format(
        "{:+d}".format(total) if total else "0")


def _row(census):
    kind = census.region_id.kind
    if kind is RegionKind.U:
        loops = "{} {}".format(census.loop_count, census.loop_side.value) \
            if census.loop_count else "0"
        items = ["above {}".format(census.above),
                 "below {}".format(census.below),
                 "loops {}".format(loops)]
    elif kind is RegionKind.G:
        items = [
            _twists_text(census.twist_dist, census.twist_total),
            "c-curves {}".format(census.c_curves),
            "visible genus {}".format(_genus_text(census.visible_genus)),
            "invisible genus {}".format(_genus_text(census.invisible_genus)),
            "upper diagonals {}".format(census.upper_diag),
            "lower diagonals {}".format(census.lower_diag),
            "vis above {}".format(census.vis_above),
            "vis below {}".format(census.vis_below),
            "invis above {}".format(census.invis_above),
            "invis below {}".format(census.invis_below),
            "crossing {}".format(census.side_crossing.label),
        ]
    else:
        items = [
            _twists_text(census.twist_dist, census.twist_total),
            "c*-curves {}".format(census.c_star_curves),
            "visible genus {}".format(census.visible_genus),
            "invisible genus {}".format(census.invisible_genus),
        ]
    return "{}: {}".format(census.region_id, ", ".join(items))


def render_summary(census):
    """Text table with one row per region, header only for an empty census

    >>> from mcurve.census import HandleCensus, MultiCurveCensus
    >>> from mcurve.surface import SurfaceSig
    >>> print(render_summary(MultiCurveCensus(SurfaceSig(1, 1), [], [],
    ...                                       HandleCensus())))
    census on S_1,1: 0 components
    """
    lines = ["census on {}: {} components".format(census.sig, census.total())]
    if census.total():
        lines.extend(_row(region) for region in census.regions)
    return "\n".join(lines)
