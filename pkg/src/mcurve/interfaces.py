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

from zope import interface


class IInfo(interface.Interface):
    """ JSON Info Interface
    """

    def to_dict():
        """ return the dictionary representation of the object
        """

    def __call__():
        """ return the dictionary representation of the object
        """


class IRegionCensus(interface.Interface):
    """ Component counts of a multicurve inside one region of the surface
    """

    region_id = interface.Attribute("The RegionId this census belongs to")

    def total():
        """ return the number of path components in the region
        """


class IPunctureCensus(IRegionCensus):
    """ Census of a puncture region U_i
    """


class IGenusCensus(IRegionCensus):
    """ Census of a genus region G_i
    """


class IHandleCensus(IRegionCensus):
    """ Census of the last handle region G*
    """
