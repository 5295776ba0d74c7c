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

"""From coordinates to the census of path components

Every function reads the vector only; `decode` runs them region by region
in the order loops, genus loops, twists, c curves, diagonals, twist
distribution, side crossings and above/below counts.
"""

from dataclasses import dataclass

from mcurve import logger
from mcurve.census import Crossing
from mcurve.census import GenusCensus
from mcurve.census import GenusCount
from mcurve.census import HandleCensus
from mcurve.census import MultiCurveCensus
from mcurve.census import PunctureCensus
from mcurve.census import SideCrossing
from mcurve.census import TwistDistribution
from mcurve.coordinates import Diagnostic
from mcurve.coordinates import Diagnostics
from mcurve.coordinates import TwistSigns
from mcurve.coordinates import check_signs
from mcurve.coordinates import validate_basic
from mcurve.encoder import consistency_check
from mcurve.encoder import encode
from mcurve.exceptions import MulticurveError
from mcurve.surface import RegionId
from mcurve.surface import RegionKind
from mcurve.surface import Side
from mcurve.surface import genus_region
from mcurve.surface import layout


@dataclass(frozen=True)
class GenusTerms:
    """Quantities of G_i known before its above/below counts
    """
    c: int
    c_curves: int
    visible: GenusCount
    invisible: GenusCount
    twist_total: int
    upper: int
    lower: int
    crossing: SideCrossing


def _locus(v, i):
    return str(genus_region(v.sig, i))


def _half(value, locus, what):
    if value % 2:
        raise MulticurveError(
            "ParityError", "{} = {} is odd".format(what, value), locus=locus)
    return value // 2


def _nonnegative(value, locus, what):
    if value < 0:
        raise MulticurveError(
            "NegativeCount", "{} would be {}".format(what, value),
            locus=locus)
    return value


def _genus_loop(left, right, c, locus, what):
    half = _half(abs(left - right) - c, locus, what)
    if half <= 0:
        return GenusCount()
    return GenusCount(half, Side.LEFT if left < right else Side.RIGHT)


def _right_count(genus):
    return genus.count if genus.side is Side.RIGHT else 0


def _genus_arcs(v, i):
    """(L, R, L′, R′, c_i) of the genus region G_i
    """
    n = v.sig.n
    return (v.beta(n + i), v.beta(n + i + 1), v.invisible(n + i),
            v.beta_prime(n + i + 1), v.c(i))


def loop_count(v, i):
    """Signed loop number b_i of U_i, negative for left loops
    """
    return _half(v.beta(i) - v.beta(i + 1), "U_{}".format(i),
                 "beta_{} - beta_{}".format(i, i + 1))


def genus_loop_counts(v, i):
    """Visible and invisible genus components of G_i, or of G* for i = g

    :returns: tuple of two GenusCounts; G* components carry no side
    """
    sig = v.sig
    locus = _locus(v, i)
    if i == sig.g:
        cs = v.c_star()
        visible = _nonnegative(v.beta(sig.n + sig.g) - cs, locus,
                               "beta_{} - c*".format(sig.n + sig.g))
        invisible = _nonnegative(v.invisible(sig.n + sig.g) - cs, locus,
                                 "beta'_{} - c*".format(sig.n + sig.g))
        return (GenusCount(_half(visible, locus, "visible genus ends")),
                GenusCount(_half(invisible, locus, "invisible genus ends")))

    left, right, left_inv, right_inv, ci = _genus_arcs(v, i)
    visible = _genus_loop(left, right, ci, locus,
                          "|beta_{0} - beta_{1}| - c_{2}".format(
                              sig.n + i, sig.n + i + 1, i))
    invisible = _genus_loop(left_inv, right_inv, ci, locus,
                            "|beta'_{0} - beta'_{1}| - c_{2}".format(
                                sig.n + i, sig.n + i + 1, i))
    return visible, invisible


def twist_magnitude(v, i):
    """|T_i|, the unsigned total twist of G_i (G* for i = g)
    """
    sig = v.sig
    longitude = v.c_star() if i == sig.g else v.c(i)
    if longitude == 0:
        return 0
    visible, invisible = genus_loop_counts(v, i)
    if i == sig.g:
        magnitude = v.gamma(i) - visible.count - invisible.count
    else:
        magnitude = v.gamma(i) - _right_count(visible) - \
            _right_count(invisible)
    return _nonnegative(magnitude, _locus(v, i), "|T_{}|".format(i))


def total_twist(v, signs, i):
    """Signed total twist T_i of G_i (G* for i = g)
    """
    magnitude = twist_magnitude(v, i)
    sign = signs.sign(i)
    if magnitude and not sign:
        raise MulticurveError(
            "SignMissing", "|T_{}| = {} needs a twist direction".format(
                i, magnitude), locus=_locus(v, i))
    if not magnitude and sign:
        raise MulticurveError(
            "SpuriousSign", "T_{} = 0 but sign {:+d} given".format(i, sign),
            locus=_locus(v, i))
    return sign * magnitude


def c_curve_count(v, i):
    """Number p of components isotopic to c_i (c* for i = g)
    """
    sig = v.sig
    longitude = v.c_star() if i == sig.g else v.c(i)
    if longitude:
        return 0
    visible, invisible = genus_loop_counts(v, i)
    if i == sig.g:
        count = v.gamma(i) - visible.count - invisible.count
    else:
        count = v.gamma(i) - _right_count(visible) - _right_count(invisible)
    return _nonnegative(count, _locus(v, i), "p(c_{})".format(i))


def diagonal_counts(c, twist):
    """Upper and lower diagonal components of a genus region

    >>> diagonal_counts(3, 1)
    (0, 2)
    >>> diagonal_counts(3, -4)
    (0, 0)
    """
    if c == 0:
        return 0, 0
    if twist == 0:
        raise MulticurveError(
            "AmbiguousDiagonals",
            "a zero twist does not tell upper from lower diagonals")
    tc = twist * c
    upper = max(c - abs(twist), tc) - max(0, tc)
    lower = max(c - abs(twist), -tc) - max(0, -tc)
    return max(0, upper), max(0, lower)


def resolve_diagonals(v, i, c, c_curves, visible):
    """Diagonal type of an untwisted G_i with c_i > 0, read from ξ
    """
    candidates = []
    for upper, lower in ((c, 0), (0, c)):
        above = v.xi(2 * i - 1) - max(c_curves, upper) - visible.count
        below = v.xi(2 * i) - max(c_curves, lower) - visible.count
        if above >= 0 and below >= 0:
            candidates.append((upper, lower))
    if not candidates:
        raise MulticurveError(
            "NegativeCount", "no diagonal type fits xi_{} and xi_{}".format(
                2 * i - 1, 2 * i), locus=_locus(v, i))
    if len(candidates) > 1:
        raise MulticurveError(
            "AmbiguousDiagonals",
            "both diagonal types fit xi_{} and xi_{}".format(2 * i - 1, 2 * i),
            locus=_locus(v, i))
    return candidates[0]


def twist_distribution(c_eff, magnitude):
    """Split a twist total over c_eff components

    >>> twist_distribution(3, 4)
    TwistDistribution(m=1, t=1, base=2)
    >>> twist_distribution(5, 0)
    TwistDistribution(m=0, t=0, base=5)
    """
    if c_eff == 0:
        if magnitude:
            raise MulticurveError(
                "InconsistentTwist",
                "a twist of {} without components to carry it".format(
                    magnitude))
        return TwistDistribution()
    m = magnitude % c_eff
    return TwistDistribution(m, magnitude // c_eff, c_eff - m)


def side_crossings(v, c, loops, i):
    """Twist and diagonal components meeting β_{n+i+1} (n_i) or β_{n+i} (k_i)
    """
    n = v.sig.n
    locus = _locus(v, i)
    left, right = v.beta(n + i), v.beta(n + i + 1)
    if left <= right:
        marker = Crossing.N
        value = _half(right - left + c, locus, "beta_{} - beta_{} + c_{}"
                      .format(n + i + 1, n + i, i)) - loops
    else:
        marker = Crossing.K
        value = _half(left - right + c, locus, "beta_{} - beta_{} + c_{}"
                      .format(n + i, n + i + 1, i)) - loops
    _nonnegative(value, locus, "{}_{}".format(marker.value, i))
    _nonnegative(c - value, locus, "c_{} - {}_{}".format(i, marker.value, i))
    return SideCrossing(value, marker)


def puncture_above_below(v, i, b):
    locus = "U_{}".format(i)
    above = _nonnegative(v.alpha(2 * i - 1) - abs(b), locus,
                         "above count u_{}".format(2 * i - 1))
    below = _nonnegative(v.alpha(2 * i) - abs(b), locus,
                         "below count u_{}".format(2 * i))
    return above, below


def genus_above_below(v, i, terms):
    """Visible and invisible above/below counts of G_i
    """
    locus = _locus(v, i)
    twist = terms.twist_total
    loops = terms.visible.count
    if twist:
        on_right = terms.crossing.on_right(terms.c)
        above = v.xi(2 * i - 1) - abs(twist) - \
            max(on_right - terms.lower, twist) + max(0, twist) - loops
        below = v.xi(2 * i) - abs(twist) - \
            max(on_right - terms.upper, -twist) + max(0, -twist) - loops
    else:
        above = v.xi(2 * i - 1) - max(terms.c_curves, terms.upper) - loops
        below = v.xi(2 * i) - max(terms.c_curves, terms.lower) - loops
    inv_above = v.xi_prime(2 * i - 1) - terms.invisible.count
    inv_below = v.xi_prime(2 * i) - terms.invisible.count
    return (
        _nonnegative(above, locus, "visible above count"),
        _nonnegative(below, locus, "visible below count"),
        _nonnegative(inv_above, locus, "invisible above count"),
        _nonnegative(inv_below, locus, "invisible below count"),
    )


def above_below_counts(v, region_id, terms):
    """Above/below counts of a U or G region

    :param terms: the signed loop number b_i for U_i, GenusTerms for G_i
    """
    if region_id.kind is RegionKind.U:
        return puncture_above_below(v, region_id.index, terms)
    if region_id.kind is RegionKind.G:
        return genus_above_below(v, region_id.index, terms)
    raise MulticurveError("InvalidArc", "G* has no above/below components",
                          locus=str(region_id))


def candidate_signs(v):
    """Admissible signs per genus region: (0,) or (-1, +1)
    """
    out = []
    for i in range(1, v.sig.g + 1):
        out.append((-1, 1) if twist_magnitude(v, i) else (0,))
    return out


def default_signs(v):
    """Signs that are + wherever the region twists
    """
    return TwistSigns([max(options) for options in candidate_signs(v)])


def _decode_puncture(v, i):
    b = loop_count(v, i)
    above, below = above_below_counts(v, RegionId(RegionKind.U, i), b)
    side = Side.NONE
    if b:
        side = Side.LEFT if b < 0 else Side.RIGHT
    return PunctureCensus(i, above, below, abs(b), side)


def _decode_genus(v, signs, i):
    c = v.c(i)
    visible, invisible = genus_loop_counts(v, i)
    twist = total_twist(v, signs, i)
    c_curves = c_curve_count(v, i)
    if c and not twist:
        upper, lower = resolve_diagonals(v, i, c, c_curves, visible)
    else:
        upper, lower = diagonal_counts(c, twist)
    dist = twist_distribution(c - upper - lower, abs(twist))
    crossing = side_crossings(v, c, visible.count, i)
    terms = GenusTerms(c, c_curves, visible, invisible, twist, upper, lower,
                       crossing)
    va, vb, ia, ib = above_below_counts(v, RegionId(RegionKind.G, i), terms)
    logger.debug("G_{}: c={} T={} d=({}, {}) {} {}".format(
        i, c, twist, upper, lower, dist, crossing.label))
    return GenusCensus(
        index=i,
        c_curves=c_curves,
        visible_genus=visible,
        invisible_genus=invisible,
        upper_diag=upper,
        lower_diag=lower,
        twist_total=twist,
        twist_dist=dist,
        vis_above=va,
        vis_below=vb,
        invis_above=ia,
        invis_below=ib,
        side_crossing=crossing,
    )


def _decode_handle(v, signs):
    g = v.sig.g
    visible, invisible = genus_loop_counts(v, g)
    twist = total_twist(v, signs, g)
    return HandleCensus(
        c_star_curves=c_curve_count(v, g),
        visible_genus=visible.count,
        invisible_genus=invisible.count,
        twist_total=twist,
        twist_dist=twist_distribution(v.c_star(), abs(twist)),
    )


def decode(v, signs):
    """Census of the multicurve with coordinates v and twist directions signs

    Errors of all regions are collected; the raised MulticurveError carries
    them as diagnostics. A returned census always encodes back to (v, signs).

    :param v: CoordVector
    :param signs: TwistSigns
    :returns: MultiCurveCensus
    """
    sig = v.sig
    validate_basic(v).raise_for_errors()
    check_signs(signs, sig)

    diagnostics = Diagnostics()

    def collect(func, *args):
        try:
            return func(*args)
        except MulticurveError as exc:
            diagnostics.append(Diagnostic.from_error(exc))

    puncture = [collect(_decode_puncture, v, i) for i in range(1, sig.n + 1)]
    genus = [collect(_decode_genus, v, signs, i) for i in range(1, sig.g)]
    handle = collect(_decode_handle, v, signs)
    diagnostics.raise_for_errors()

    census = MultiCurveCensus(sig, puncture, genus, handle)
    consistency_check(census).raise_for_errors(code="Unrealizable")

    encoded, encoded_signs = encode(census)
    for arc, pos in layout(sig):
        if encoded.values[pos] != v.values[pos]:
            raise MulticurveError(
                "Unrealizable",
                "the decoded components cross {} {} times, not {}".format(
                    arc, encoded.values[pos], v.values[pos]),
                locus=str(arc))
    if encoded_signs != signs:
        raise MulticurveError(
            "Unrealizable", "the decoded twists have signs {}, not {}"
            .format(encoded_signs, signs), locus="signs")
    return census
