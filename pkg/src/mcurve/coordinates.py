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

from dataclasses import dataclass
from enum import Enum
from typing import Optional
from typing import Tuple

from mcurve import underscore as u
from mcurve.exceptions import MulticurveError
from mcurve.surface import GROUPS
from mcurve.surface import ArcGroup
from mcurve.surface import ArcId
from mcurve.surface import SurfaceSig
from mcurve.surface import flat_index
from mcurve.surface import invisible_arc
from mcurve.surface import layout

SIGN_TOKENS = {
    "+": 1,
    "+1": 1,
    "1": 1,
    "-": -1,
    "-1": -1,
    "0": 0,
}
SIGN_SYMBOLS = {1: "+", -1: "-", 0: "0"}


class Severity(str, Enum):
    ERROR = "error"
    WARNING = "warning"


@dataclass(frozen=True)
class Diagnostic:
    severity: Severity
    locus: Optional[str]
    code: str
    detail: str

    @classmethod
    def from_error(cls, error):
        return cls(Severity.ERROR, error.locus, error.code, error.message)

    def to_dict(self):
        return {
            "severity": self.severity.value,
            "locus": self.locus,
            "code": self.code,
            "detail": self.detail,
        }

    def __str__(self):
        locus = " {}".format(self.locus) if self.locus else ""
        return "{} [{}]{}: {}".format(
            self.severity.value, self.code, locus, self.detail)


class Diagnostics(list):
    """List of Diagnostic records, empty when a stage passed all checks
    """

    def add_error(self, code, detail, locus=None):
        self.append(Diagnostic(Severity.ERROR, locus, code, detail))

    def add_warning(self, code, detail, locus=None):
        self.append(Diagnostic(Severity.WARNING, locus, code, detail))

    @property
    def errors(self):
        return [d for d in self if d.severity is Severity.ERROR]

    @property
    def warnings(self):
        return [d for d in self if d.severity is Severity.WARNING]

    def raise_for_errors(self, code=None):
        """Raise a MulticurveError carrying all diagnostics if any is an error

        :param code: error code to raise with, defaults to the first error's
        """
        error = u.first(self.errors)
        if error is None:
            return
        raise MulticurveError(code or error.code, error.detail,
                              locus=error.locus, diagnostics=self)

    def to_list(self):
        return [diagnostic.to_dict() for diagnostic in self]


@dataclass(frozen=True)
class CoordVector:
    """The intersection numbers of a multicurve with the arc system

    Values are stored flat, in layout order.
    """
    sig: SurfaceSig
    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if len(values) != self.sig.dimension:
            raise MulticurveError(
                "WrongGroupLength",
                "{} needs {} entries, got {}".format(
                    self.sig, self.sig.dimension, len(values)),
                locus="vector")
        for (arc, pos), value in zip(layout(self.sig), values):
            _check_entry(value, arc, pos)

    def get(self, arc):
        return self.values[flat_index(self.sig, arc)]

    def alpha(self, i):
        return self.get(ArcId(ArcGroup.ALPHA, i))

    def beta(self, i):
        return self.get(ArcId(ArcGroup.BETA, i))

    def beta_prime(self, i):
        return self.get(ArcId(ArcGroup.BETA_PRIME, i))

    def invisible(self, i):
        """β′_i, read from β_1 when i = n+1
        """
        return self.get(invisible_arc(self.sig, i))

    def xi(self, i):
        return self.get(ArcId(ArcGroup.XI, i))

    def xi_prime(self, i):
        return self.get(ArcId(ArcGroup.XI_PRIME, i))

    def gamma(self, i):
        return self.get(ArcId(ArcGroup.GAMMA, i))

    def c(self, i):
        return self.get(ArcId(ArcGroup.C, i))

    def c_star(self):
        return self.get(ArcId(ArcGroup.C_STAR))

    def group(self, group):
        group = ArcGroup(group)
        return tuple(self.get(ArcId(group, i))
                     for i in self.sig.group_indices(group))

    @property
    def is_zero(self):
        return not any(self.values)

    def scaled(self, factor):
        return CoordVector(self.sig, [factor * value for value in self.values])

    def to_dict(self, signs=None):
        """JSON form of the vector, optionally with twist signs
        """
        data = {"n": self.sig.n, "g": self.sig.g}
        for group in GROUPS:
            data[group.value] = list(self.group(group))
        data["c_star"] = self.c_star()
        if signs is not None:
            data["signs"] = list(signs)
        return data

    @classmethod
    def from_groups(cls, sig, groups):
        """Build a vector from a mapping of ArcGroup -> list of values
        """
        values = []
        for group in GROUPS:
            chunk = list(groups.get(group, []))
            size = sig.group_size(group)
            offset = len(values)
            for k, value in enumerate(chunk):
                locus = str(ArcId(group, sig.group_indices(group)[k])) \
                    if k < size else "{}[{}]".format(group.value, k)
                _check_entry(value, locus, offset + k)
            if len(chunk) != size:
                raise MulticurveError(
                    "WrongGroupLength",
                    "group {} needs {} entries, got {}".format(
                        group.value, size, len(chunk)),
                    locus=group.value)
            values.extend(chunk)
        return cls(sig, values)


@dataclass(frozen=True)
class TwistSigns:
    """Twist direction per genus region, G_1..G_{g-1} then G*
    """
    signs: Tuple[int, ...]

    def __post_init__(self):
        signs = tuple(self.signs)
        object.__setattr__(self, "signs", signs)
        for k, sign in enumerate(signs):
            if not u.is_integer(sign) or sign not in (-1, 0, 1):
                raise MulticurveError(
                    "BadSign", "sign must be -1, 0 or +1, got {!r}"
                    .format(sign), locus="sign {}".format(k + 1))

    def sign(self, i):
        """Sign of the i-th genus region (1-based, i = g is G*)
        """
        return self.signs[i - 1]

    def __len__(self):
        return len(self.signs)

    def __iter__(self):
        return iter(self.signs)

    def __str__(self):
        return ",".join(SIGN_SYMBOLS[sign] for sign in self.signs)


def _check_entry(value, locus, position):
    if not u.is_integer(value):
        raise MulticurveError(
            "NonInteger", "entry {} is not an integer: {!r}"
            .format(position, value), locus=str(locus))
    if value < 0:
        raise MulticurveError(
            "NegativeEntry", "entry {} is negative: {}"
            .format(position, value), locus=str(locus))


def parse_vector(text, sig):
    """Parse the vector text form "(α; β; β′; ξ; ξ′; γ; c; c*)"

    Empty groups may be omitted or written as empty; surrounding parentheses
    and whitespace are optional.

    :param text: the vector text
    :param sig: SurfaceSig
    :returns: CoordVector
    """
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    chunks = [chunk.strip() for chunk in body.split(";")]

    present = [group for group in GROUPS if sig.group_size(group)]
    if len(chunks) == len(GROUPS):
        names = GROUPS
    elif len(chunks) == len(present):
        names = present
    else:
        raise MulticurveError(
            "WrongGroupCount", "{} needs {} groups, got {}".format(
                sig, len(present), len(chunks)), locus="vector")

    groups = {}
    offset = 0
    for group, chunk in zip(names, chunks):
        tokens = [token.strip() for token in chunk.split(",")] if chunk else []
        values = []
        for k, token in enumerate(tokens):
            if not u.is_digit(token):
                raise MulticurveError(
                    "NonInteger", "entry {} is not an integer: {!r}"
                    .format(offset + k, token), locus=group.value)
            values.append(u.to_int(token))
        groups[group] = values
        offset += len(values)
    return CoordVector.from_groups(sig, groups)


def serialize_vector(v):
    """Canonical text form of a vector

    >>> serialize_vector(CoordVector(SurfaceSig(1, 1), [0, 0, 0, 0, 0, 0]))
    '(0, 0; 0, 0; 0; 0)'
    """
    chunks = []
    for group in GROUPS:
        if v.sig.group_size(group):
            chunks.append(", ".join(str(value) for value in v.group(group)))
    return "({})".format("; ".join(chunks))


def parse_signs(text, sig):
    """Parse the sign text form, e.g. "+,-,0"

    :returns: TwistSigns with exactly g entries
    """
    tokens = [token.strip() for token in text.strip().split(",")]
    if tokens == [""]:
        tokens = []
    signs = []
    for k, token in enumerate(tokens):
        if token not in SIGN_TOKENS:
            raise MulticurveError(
                "BadSign", "unknown sign {!r}, use +, - or 0".format(token),
                locus="sign {}".format(k + 1))
        signs.append(SIGN_TOKENS[token])
    return check_signs(TwistSigns(signs), sig)


def check_signs(signs, sig):
    """Returns the signs if there is one per genus region
    """
    if len(signs) != sig.g:
        raise MulticurveError(
            "WrongSignCount", "{} needs {} signs, got {}".format(
                sig, sig.g, len(signs)), locus="signs")
    return signs


def serialize_signs(signs):
    return str(signs)


def vector_from_dict(data):
    """Parse the JSON form of a vector

    :returns: tuple of (CoordVector, TwistSigns or None)
    """
    if not u.is_dict(data):
        raise MulticurveError("NonInteger", "vector JSON must be an object",
                              locus="vector")
    try:
        sig = SurfaceSig(data["n"], data["g"])
    except KeyError as exc:
        raise MulticurveError("InvalidSignature",
                              "missing key {}".format(exc), locus="vector")
    groups = {}
    for group in GROUPS:
        value = data.get(group.value, [])
        if group is ArcGroup.C_STAR and not u.is_list(value):
            value = [value]
        if not u.is_list(value):
            raise MulticurveError(
                "WrongGroupLength", "group {} must be a list"
                .format(group.value), locus=group.value)
        groups[group] = value
    vector = CoordVector.from_groups(sig, groups)
    signs = data.get("signs")
    if signs is not None:
        if not u.is_list(signs):
            raise MulticurveError("BadSign", "signs must be a list",
                                  locus="signs")
        signs = check_signs(TwistSigns(signs), sig)
    return vector, signs


def validate_basic(v):
    """Cheap structural checks preceding a decode

    Reports the zero vector and every parity forced by the halvings of the
    decoding formulas.

    :param v: CoordVector
    :returns: Diagnostics
    """
    n, g = v.sig.n, v.sig.g
    diagnostics = Diagnostics()
    if v.is_zero:
        diagnostics.add_error(
            "ZeroVector", "the zero vector is not a multicurve",
            locus="vector")

    for i in range(1, n + 1):
        diff = v.beta(i) - v.beta(i + 1)
        if diff % 2:
            diagnostics.add_error(
                "ParityError",
                "beta_{} - beta_{} = {} is odd".format(i, i + 1, diff),
                locus="U_{}".format(i))

    for i in range(1, g):
        ci = v.c(i)
        left, right = v.beta(n + i), v.beta(n + i + 1)
        if (abs(left - right) - ci) % 2:
            diagnostics.add_error(
                "ParityError",
                "|beta_{} - beta_{}| - c_{} = {} is odd".format(
                    n + i, n + i + 1, i, abs(left - right) - ci),
                locus="G_{}".format(i))
        left, right = v.invisible(n + i), v.beta_prime(n + i + 1)
        if (abs(left - right) - ci) % 2:
            diagnostics.add_error(
                "ParityError",
                "|{} - beta'_{}| - c_{} = {} is odd".format(
                    invisible_arc(v.sig, n + i), n + i + 1, i,
                    abs(left - right) - ci),
                locus="G_{}".format(i))

    cs = v.c_star()
    for arc in (ArcId(ArcGroup.BETA, n + g), invisible_arc(v.sig, n + g)):
        diff = v.get(arc) - cs
        if diff < 0:
            diagnostics.add_error(
                "NegativeCount",
                "{} - c* = {} is negative".format(arc, diff), locus="G*")
        elif diff % 2:
            diagnostics.add_error(
                "ParityError",
                "{} - c* = {} is odd".format(arc, diff), locus="G*")
    return diagnostics
