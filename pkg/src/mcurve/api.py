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

from mcurve import logger
from mcurve import underscore as u
from mcurve.coordinates import Diagnostics
from mcurve.coordinates import parse_signs
from mcurve.coordinates import parse_vector
from mcurve.coordinates import serialize_signs
from mcurve.coordinates import serialize_vector
from mcurve.coordinates import validate_basic
from mcurve.coordinates import vector_from_dict
from mcurve.dataproviders import census_from_dict
from mcurve.dataproviders import census_to_dict
from mcurve.decoder import decode
from mcurve.decoder import default_signs
from mcurve.encoder import encode
from mcurve.exceptions import MulticurveError
from mcurve.surface import SurfaceSig


# -----------------------------------------------------------------------------
#   Coordinate API (called by the CLI commands)
# -----------------------------------------------------------------------------

def get_vector(text, n=None, g=None):
    """Reads a vector given as text or in its JSON form

    The JSON form carries its own signature and may carry signs; the text
    form needs n and g.

    :param text: vector text or JSON
    :returns: tuple of (CoordVector, TwistSigns or None)
    """
    body = text.strip()
    if body.startswith("{"):
        try:
            data = json.loads(body)
        except ValueError as exc:
            fail("NonInteger", "vector JSON is malformed: {}".format(exc),
                 locus="vector")
        vector, signs = vector_from_dict(data)
        if n is not None and g is not None and \
                vector.sig != get_signature(n, g):
            fail("InvalidSignature", "vector is on {}, not S_{},{}".format(
                vector.sig, n, g), locus="vector")
        return vector, signs
    if n is None or g is None:
        fail("InvalidSignature", "the vector text form needs -n and -g",
             locus="vector")
    return parse_vector(body, get_signature(n, g)), None


def get_signs(vector, text=None, given=None):
    """The twist signs to decode with

    Explicit text wins over signs embedded in the vector JSON. Without
    either, every twisting region gets "+" and a warning is logged.

    :returns: TwistSigns
    """
    if text is not None:
        return parse_signs(text, vector.sig)
    if given is not None:
        return given
    signs = default_signs(vector)
    if any(signs):
        logger.warning("No twist signs given, assuming {}".format(signs))
    return signs


def get_signature(n, g):
    return SurfaceSig(n, g)


def validate(vector, signs=None, full=False):
    """Diagnostics of a vector, optionally including a trial decode

    :returns: Diagnostics
    """
    diagnostics = validate_basic(vector)
    if full and not diagnostics.errors:
        try:
            if signs is None:
                signs = default_signs(vector)
                if any(signs):
                    diagnostics.add_warning(
                        "DefaultSigns", "no twist signs given, assuming {}"
                        .format(serialize_signs(signs)), locus="signs")
            decode(vector, signs)
        except MulticurveError as exc:
            diagnostics.extend(to_diagnostics(exc))
    return diagnostics


def to_diagnostics(error):
    """All diagnostics carried by an error, or the error itself
    """
    out = Diagnostics()
    if error.diagnostics:
        out.extend(error.diagnostics)
    else:
        out.add_error(error.code, error.message, locus=error.locus)
    return out


# -----------------------------------------------------------------------------
#   Census API
# -----------------------------------------------------------------------------

def get_census(text):
    """Reads a census from its JSON text

    :returns: MultiCurveCensus
    """
    try:
        data = json.loads(text)
    except ValueError as exc:
        fail("BadCensus", "census JSON is malformed: {}".format(exc))
    return census_from_dict(data)


def census_to_json(census):
    return u.to_json(census_to_dict(census))


def vector_to_text(vector, signs):
    """The two line text form written by encode
    """
    return "{}\n{}".format(serialize_vector(vector), serialize_signs(signs))


def vector_to_json(vector, signs):
    return u.to_json(vector.to_dict(signs), indent=None)


def encode_census(census):
    return encode(census)


def decode_vector(vector, signs):
    return decode(vector, signs)


# -----------------------------------------------------------------------------
#   API
# -----------------------------------------------------------------------------

def fail(code, msg, locus=None):
    """Raise a MulticurveError
    """
    if msg is None:
        msg = "Reason not given."
    raise MulticurveError(code, "{}".format(msg), locus=locus)
