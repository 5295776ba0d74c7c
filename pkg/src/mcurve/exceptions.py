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

from mcurve import config


class MulticurveError(Exception):
    """Exception Class for coordinate and census errors
    """

    def __init__(self, code, message, locus=None, diagnostics=None):
        super(MulticurveError, self).__init__(message)
        self.code = code
        self.message = message
        self.locus = locus
        self.diagnostics = diagnostics

    @property
    def status(self):
        """The process exit status for this error
        """
        return config.ERROR_STATUS.get(self.code, config.EXIT_INTERNAL)

    def __str__(self):
        if self.locus:
            return "{} at {}: {}".format(self.code, self.locus, self.message)
        return "{}: {}".format(self.code, self.message)
