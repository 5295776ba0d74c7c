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

from zope import component
from zope import interface

from mcurve import logger
from mcurve import underscore as u
from mcurve.census import Crossing
from mcurve.census import GenusCensus
from mcurve.census import GenusCount
from mcurve.census import HandleCensus
from mcurve.census import MultiCurveCensus
from mcurve.census import PunctureCensus
from mcurve.census import SideCrossing
from mcurve.census import TwistDistribution
from mcurve.exceptions import MulticurveError
from mcurve.interfaces import IGenusCensus
from mcurve.interfaces import IHandleCensus
from mcurve.interfaces import IInfo
from mcurve.interfaces import IPunctureCensus
from mcurve.surface import Side
from mcurve.surface import SurfaceSig


@interface.implementer(IInfo)
class Base(object):
    """ Base Adapter
    """

    kind = None

    def __init__(self, context):
        self.context = context

        # JSON key -> attribute name (or method of this adapter)
        self.attributes = {}

    def to_dict(self):
        """ extract the data of the region census as a dictionary
        """
        data = {"kind": self.kind}
        for key, attr in self.attributes.items():
            value = getattr(self.context, attr, None)
            if value is None:
                value = getattr(self, attr, None)
            # handle function calls
            if callable(value):
                value = value()
            data[key] = value
        return data

    def _x_twist(self):
        dist = self.context.twist_dist
        return {
            "total": self.context.twist_total,
            "m": dist.m,
            "t": dist.t,
            "base": dist.base,
        }

    def __call__(self):
        return self.to_dict()


@component.adapter(IPunctureCensus)
class PunctureDataProvider(Base):
    """ Puncture region adapter
    """

    kind = "U"

    def __init__(self, context):
        super(PunctureDataProvider, self).__init__(context)
        self.attributes = {
            "i": "index",
            "above": "above",
            "below": "below",
            "loops": "_x_loops",
        }

    def _x_loops(self):
        return {
            "count": self.context.loop_count,
            "side": self.context.loop_side.value,
        }


@component.adapter(IGenusCensus)
class GenusDataProvider(Base):
    """ Genus region adapter
    """

    kind = "G"

    def __init__(self, context):
        super(GenusDataProvider, self).__init__(context)
        self.attributes = {
            "i": "index",
            "c_curves": "c_curves",
            "visible_genus": "_x_visible_genus",
            "invisible_genus": "_x_invisible_genus",
            "diag_upper": "upper_diag",
            "diag_lower": "lower_diag",
            "twist": "_x_twist",
            "vis_above": "vis_above",
            "vis_below": "vis_below",
            "invis_above": "invis_above",
            "invis_below": "invis_below",
            "side_crossing": "_x_side_crossing",
        }

    def _x_visible_genus(self):
        genus = self.context.visible_genus
        return {"count": genus.count, "side": genus.side.value}

    def _x_invisible_genus(self):
        genus = self.context.invisible_genus
        return {"count": genus.count, "side": genus.side.value}

    def _x_side_crossing(self):
        crossing = self.context.side_crossing
        return {"value": crossing.value, "marker": crossing.marker.value}


@component.adapter(IHandleCensus)
class HandleDataProvider(Base):
    """ G* region adapter
    """

    kind = "GStar"

    def __init__(self, context):
        super(HandleDataProvider, self).__init__(context)
        self.attributes = {
            "c_star_curves": "c_star_curves",
            "visible_genus": "visible_genus",
            "invisible_genus": "invisible_genus",
            "twist": "_x_twist",
        }


component.provideAdapter(PunctureDataProvider)
component.provideAdapter(GenusDataProvider)
component.provideAdapter(HandleDataProvider)


def census_to_dict(census):
    """JSON compatible form of a MultiCurveCensus
    """
    return {
        "n": census.sig.n,
        "g": census.sig.g,
        "regions": [component.getAdapter(region, IInfo)()
                    for region in census.regions],
    }


def _bad(message, locus=None):
    return MulticurveError("BadCensus", message, locus=locus)


class RegionReader(object):
    """Reads typed values out of one region record
    """

    def __init__(self, data, locus):
        if not u.is_dict(data):
            raise _bad("region record must be an object", locus)
        self.data = data
        self.locus = locus

    def count(self, key, data=None):
        data = self.data if data is None else data
        if key not in data:
            raise _bad("missing key '{}'".format(key), self.locus)
        value = data[key]
        if not u.is_integer(value):
            raise _bad("'{}' must be an integer, got {!r}".format(key, value),
                       self.locus)
        return value

    def record(self, key):
        value = self.data.get(key)
        if not u.is_dict(value):
            raise _bad("'{}' must be an object".format(key), self.locus)
        return value

    def side(self, record):
        try:
            return Side(record.get("side", Side.NONE.value))
        except ValueError:
            raise _bad("unknown side {!r}".format(record.get("side")),
                       self.locus)

    def genus(self, key):
        record = self.record(key)
        return GenusCount(self.count("count", record), self.side(record))

    def twist(self):
        record = self.record("twist")
        total = self.count("total", record)
        dist = TwistDistribution(self.count("m", record),
                                 self.count("t", record),
                                 self.count("base", record))
        return total, dist

    def reject(self, *keys):
        """Fails on keys the region kind cannot carry
        """
        present = [key for key in keys if key in self.data]
        if present:
            raise MulticurveError(
                "InvariantViolation", "{} cannot have {}".format(
                    self.locus, ", ".join(present)), locus=self.locus)


def _read_puncture(reader):
    loops = reader.record("loops")
    return PunctureCensus(
        index=reader.count("i"),
        above=reader.count("above"),
        below=reader.count("below"),
        loop_count=reader.count("count", loops),
        loop_side=reader.side(loops),
    )


def _read_genus(reader):
    total, dist = reader.twist()
    crossing = reader.record("side_crossing")
    try:
        marker = Crossing(crossing.get("marker"))
    except ValueError:
        raise _bad("unknown side crossing marker {!r}".format(
            crossing.get("marker")), reader.locus)
    return GenusCensus(
        index=reader.count("i"),
        c_curves=reader.count("c_curves"),
        visible_genus=reader.genus("visible_genus"),
        invisible_genus=reader.genus("invisible_genus"),
        upper_diag=reader.count("diag_upper"),
        lower_diag=reader.count("diag_lower"),
        twist_total=total,
        twist_dist=dist,
        vis_above=reader.count("vis_above"),
        vis_below=reader.count("vis_below"),
        invis_above=reader.count("invis_above"),
        invis_below=reader.count("invis_below"),
        side_crossing=SideCrossing(reader.count("value", crossing), marker),
    )


def _read_handle(reader):
    reader.reject("diag_upper", "diag_lower")
    total, dist = reader.twist()
    return HandleCensus(
        c_star_curves=reader.count("c_star_curves"),
        visible_genus=reader.count("visible_genus"),
        invisible_genus=reader.count("invisible_genus"),
        twist_total=total,
        twist_dist=dist,
    )


READERS = {
    "U": _read_puncture,
    "G": _read_genus,
    "GStar": _read_handle,
}


def census_from_dict(data):
    """Build a MultiCurveCensus from its JSON form

    The result is not checked against the component rules, see
    `mcurve.encoder.consistency_check`.
    """
    if not u.is_dict(data):
        raise _bad("census JSON must be an object")
    try:
        sig = SurfaceSig(data["n"], data["g"])
    except KeyError as exc:
        raise _bad("missing key {}".format(exc))
    records = data.get("regions")
    if not u.is_list(records):
        raise _bad("'regions' must be a list")

    puncture, genus, handles = [], [], []
    for pos, record in enumerate(records):
        kind = record.get("kind") if u.is_dict(record) else None
        if kind not in READERS:
            raise _bad("unknown region kind {!r}".format(kind),
                       "regions[{}]".format(pos))
        region = READERS[kind](RegionReader(record, "regions[{}]".format(pos)))
        {"U": puncture, "G": genus, "GStar": handles}[kind].append(region)

    if len(puncture) != sig.n or len(genus) != sig.g - 1 or len(handles) != 1:
        raise _bad("{} needs {} U, {} G and one GStar regions".format(
            sig, sig.n, sig.g - 1))
    logger.debug("Read census on {} with {} regions".format(sig, len(records)))
    return MultiCurveCensus(sig, puncture, genus, handles[0])
