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

import json
import re

INTEGER = re.compile(r"^[+-]?\d+$")


def is_list(thing):
    """ checks if an object is a list or tuple type

        >>> is_list([])
        True
        >>> is_list(())
        True
        >>> is_list("[]")
        False
        >>> is_list({})
        False
    """
    return isinstance(thing, (list, tuple))


def is_dict(thing):
    """ checks if an object is a dictionary type

        >>> is_dict({})
        True
        >>> is_dict(dict())
        True
        >>> is_dict("{}")
        False
        >>> is_dict([])
        False
    """
    return isinstance(thing, dict)


def is_integer(thing):
    """ checks if an object is an integer, booleans excluded

        >>> is_integer(1)
        True
        >>> is_integer(-3)
        True
        >>> is_integer(True)
        False
        >>> is_integer(1.0)
        False
        >>> is_integer("1")
        False
    """
    return isinstance(thing, int) and not isinstance(thing, bool)


def is_digit(thing):
    """ checks if an object is a signed decimal integer literal

        >>> is_digit(1)
        True
        >>> is_digit("1")
        True
        >>> is_digit(" -12 ")
        True
        >>> is_digit("+4")
        True
        >>> is_digit("1.5")
        False
        >>> is_digit("a")
        False
        >>> is_digit("")
        False
    """
    return INTEGER.match(str(thing).strip()) is not None


def to_int(thing):
    """ coverts an object to int

        >>> to_int("0")
        0
        >>> to_int(1)
        1
        >>> to_int(" -7")
        -7
        >>> to_int("a")

    """
    if is_digit(thing):
        return int(str(thing).strip())
    return None


def first(thing, default=None):
    """ returns the first element of a sequence

        >>> first([1, 2])
        1
        >>> first([])

        >>> first([], default="x")
        'x'
    """
    for item in thing:
        return item
    return default


def to_json(thing, indent=2):
    """ converts an object to a JSON string, keeping key order

        >>> to_json({"b": 1, "a": [1, 2]}, indent=None)
        '{"b": 1, "a": [1, 2]}'
    """
    return json.dumps(thing, indent=indent, ensure_ascii=False)
