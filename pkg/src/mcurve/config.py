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

import os

from mcurve import logger

# Process exit statuses
EXIT_OK = 0
EXIT_INVALID = 1
EXIT_UNREALIZABLE = 2
EXIT_INTERNAL = 3
EXIT_USAGE = 64

# Error code -> exit status. Codes not listed here count as internal failures
ERROR_STATUS = {
    # malformed or excluded input
    "InvalidSignature": EXIT_INVALID,
    "InvalidConfig": EXIT_INVALID,
    "InvalidArc": EXIT_INVALID,
    "WrongGroupCount": EXIT_INVALID,
    "WrongGroupLength": EXIT_INVALID,
    "NegativeEntry": EXIT_INVALID,
    "NonInteger": EXIT_INVALID,
    "ZeroVector": EXIT_INVALID,
    "ParityError": EXIT_INVALID,
    "WrongSignCount": EXIT_INVALID,
    "BadSign": EXIT_INVALID,
    "BadCensus": EXIT_INVALID,
    "Infeasible": EXIT_INVALID,
    # well-formed, but no multicurve has these coordinates
    "NegativeCount": EXIT_UNREALIZABLE,
    "SignMissing": EXIT_UNREALIZABLE,
    "SpuriousSign": EXIT_UNREALIZABLE,
    "AmbiguousDiagonals": EXIT_UNREALIZABLE,
    "InconsistentTwist": EXIT_UNREALIZABLE,
    "Unrealizable": EXIT_UNREALIZABLE,
    # a census breaking the component rules
    "ArcImbalance": EXIT_INTERNAL,
    "InvariantViolation": EXIT_INTERNAL,
    "InconsistentCensus": EXIT_INTERNAL,
}

# Order of the arc groups inside a coordinate vector
GROUP_ORDER = (
    "alpha",
    "beta",
    "beta_prime",
    "xi",
    "xi_prime",
    "gamma",
    "c",
    "c_star",
)

# Random census generation
DEFAULT_MAX_COUNT = 4
REJECTION_BUDGET = 1000

# Schematic rendering
RENDER_WIDTH = 800
RENDER_HEIGHT = 400
RENDER_SHOW_LABELS = True
RENDER_STRAND_SPACING = 8

# Diagnostics colouring
COLOR_ENV = "MCURVE_COLOR"
COLOR_MODES = {
    "auto": None,
    "always": True,
    "never": False,
}


def get_color_mode():
    """Returns the colour flag for click.echo as configured in the environment

    :returns: None (let click decide), True or False
    """
    mode = os.environ.get(COLOR_ENV, "auto").strip().lower()
    if mode not in COLOR_MODES:
        logger.warning("Unknown {} value '{}', using 'auto'"
                       .format(COLOR_ENV, mode))
        mode = "auto"
    return COLOR_MODES[mode]
