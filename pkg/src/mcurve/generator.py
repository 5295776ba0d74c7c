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

"""Random censuses, exhaustive small vectors and the round trip fuzzer
"""

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from dataclasses import field
from typing import List

import numpy as np

from mcurve import config
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
from mcurve.coordinates import CoordVector
from mcurve.coordinates import TwistSigns
from mcurve.coordinates import validate_basic
from mcurve.decoder import candidate_signs
from mcurve.decoder import decode
from mcurve.decoder import twist_distribution
from mcurve.encoder import consistency_check
from mcurve.encoder import encode
from mcurve.exceptions import MulticurveError
from mcurve.surface import Side
from mcurve.surface import SurfaceSig


@dataclass(frozen=True)
class GenConfig:
    sig: SurfaceSig
    max_count: int = config.DEFAULT_MAX_COUNT
    trials: int = 1
    seed: int = 0

    def __post_init__(self):
        if not u.is_integer(self.max_count) or self.max_count < 0:
            raise MulticurveError(
                "InvalidConfig", "max_count must be >= 0, got {!r}".format(
                    self.max_count), locus="max_count")
        if not u.is_integer(self.trials) or self.trials < 1:
            raise MulticurveError(
                "InvalidConfig", "trials must be >= 1, got {!r}".format(
                    self.trials), locus="trials")
        if not u.is_integer(self.seed) or not 0 <= self.seed < 2 ** 64:
            raise MulticurveError(
                "InvalidConfig", "seed must be a 64-bit unsigned integer, "
                "got {!r}".format(self.seed), locus="seed")


@dataclass
class FuzzReport:
    trials: int
    failures: List[dict] = field(default_factory=list)

    def to_dict(self):
        return {"trials": self.trials, "failures": list(self.failures)}


def make_rng(seed):
    """numpy Generator over the PCG64 bit generator
    """
    return np.random.Generator(np.random.PCG64(seed))


def trial_seeds(seed, trials):
    """One 64-bit seed per trial, split off the master seed up front
    """
    state = np.random.SeedSequence(seed).generate_state(trials, np.uint64)
    return [int(value) for value in state]


class Sampler(object):
    """Draws a census region by region, left to right
    """

    def __init__(self, sig, max_count, rng):
        self.sig = sig
        self.max_count = max_count
        self.rng = rng

    def randint(self, low, high):
        """Uniform integer in [low, high]
        """
        return int(self.rng.integers(low, high + 1))

    def choice(self, options):
        return options[int(self.rng.integers(len(options)))]

    def split(self, total, cap=None):
        """Splits total into (first, second) with first <= cap
        """
        first = self.randint(0, total if cap is None else min(total, cap))
        return first, total - first

    def puncture(self, i, left):
        """U_i given the count on β_i; returns (census, count on β_{i+1})
        """
        side = self.choice([Side.NONE, Side.LEFT, Side.RIGHT])
        loops = 0
        if side is Side.RIGHT and left >= 2 and self.max_count:
            loops = self.randint(1, min(self.max_count, left // 2))
        elif side is Side.LEFT and self.max_count:
            loops = self.randint(1, self.max_count)
        if not loops:
            side = Side.NONE
        through = left - 2 * loops if side is Side.RIGHT else left
        above, below = self.split(through)
        right = through + (2 * loops if side is Side.LEFT else 0)
        return PunctureCensus(i, above, below, loops, side), right

    def crossings(self, c):
        """Diagonals, signed twist and distribution of c crossing components
        """
        if c == 0:
            return 0, 0, 0, TwistDistribution()
        modes = ["diagonal", "twist"] + (["mixed"] if c >= 2 else [])
        mode = self.choice(modes)
        sign = self.choice([1, -1])
        if mode == "diagonal":
            upper, lower = (c, 0) if sign > 0 else (0, c)
            return upper, lower, 0, TwistDistribution()
        if mode == "mixed":
            magnitude = self.randint(1, c - 1)
        else:
            magnitude = self.randint(c, c * (self.max_count + 1))
        diagonals = c - magnitude if magnitude < c else 0
        upper, lower = (0, diagonals) if sign > 0 else (diagonals, 0)
        return (upper, lower, sign * magnitude,
                twist_distribution(c - diagonals, magnitude))

    def genus(self, i, left, left_inv):
        """G_i given the counts on its left arcs

        :returns: (census, count on β_{n+i+1}, count on β′_{n+i+1})
        """
        c = self.randint(0, min(self.max_count, left_inv))
        upper, lower, twist, dist = self.crossings(c)
        c_curves = 0 if c else self.randint(0, self.max_count)
        on_right = self.randint(max(upper + lower, c - left), c)

        visible = GenusCount()
        options = [Side.NONE]
        if on_right == c and self.max_count:
            options.append(Side.LEFT)
        if on_right == 0 and left - c >= 2 and self.max_count:
            options.append(Side.RIGHT)
        side = self.choice(options)
        if side is Side.LEFT:
            visible = GenusCount(self.randint(1, self.max_count), side)
        elif side is Side.RIGHT:
            visible = GenusCount(
                self.randint(1, min(self.max_count, (left - c) // 2)), side)
        loops_right = visible.count if side is Side.RIGHT else 0
        loops_left = visible.count if side is Side.LEFT else 0

        through = left - (c - on_right) - 2 * loops_right
        if c and not twist:
            # keep the diagonal type readable from ξ
            if upper:
                below, above = self.split(through, cap=c - 1)
            else:
                above, below = self.split(through, cap=c - 1)
        else:
            above, below = self.split(through)
        right = on_right + 2 * loops_left + through

        invisible = GenusCount()
        if c == 0 and self.max_count and self.choice([False, True]):
            invisible = GenusCount(self.randint(1, self.max_count), Side.LEFT)
            inv_through = left_inv
        else:
            room = min(self.max_count, (left_inv - c) // 2)
            count = self.randint(0, room)
            if count:
                invisible = GenusCount(count, Side.RIGHT)
            inv_through = left_inv - c - 2 * count
        inv_above, inv_below = self.split(inv_through)
        inv_loops_left = invisible.count if invisible.side is Side.LEFT else 0
        right_inv = 2 * inv_loops_left + inv_through

        if left <= right:
            crossing = SideCrossing(on_right, Crossing.N)
        else:
            crossing = SideCrossing(c - on_right, Crossing.K)
        census = GenusCensus(
            index=i,
            c_curves=c_curves,
            visible_genus=visible,
            invisible_genus=invisible,
            upper_diag=upper,
            lower_diag=lower,
            twist_total=twist,
            twist_dist=dist,
            vis_above=above,
            vis_below=below,
            invis_above=inv_above,
            invis_below=inv_below,
            side_crossing=crossing,
        )
        return census, right, right_inv

    def handle(self, left, left_inv):
        """G* absorbing the counts on β_{n+g} and its invisible partner
        """
        parity = left % 2
        cap = max(self.max_count, parity)
        options = [c for c in range(parity, min(left, left_inv) + 1, 2)
                   if c <= cap]
        c = self.choice(options)
        c_curves, twist, dist = 0, 0, TwistDistribution()
        if c:
            magnitude = self.randint(0, c * (self.max_count + 1))
            twist = self.choice([1, -1]) * magnitude
            dist = twist_distribution(c, magnitude)
        else:
            c_curves = self.randint(0, self.max_count)
        return HandleCensus(
            c_star_curves=c_curves,
            visible_genus=(left - c) // 2,
            invisible_genus=(left_inv - c) // 2,
            twist_total=twist,
            twist_dist=dist,
        )

    def census(self):
        sig = self.sig
        start = self.randint(0, self.max_count)
        left = start
        puncture = []
        for i in range(1, sig.n + 1):
            region, left = self.puncture(i, left)
            puncture.append(region)
        left_inv = start
        genus = []
        for i in range(1, sig.g):
            region, left, left_inv = self.genus(i, left, left_inv)
            genus.append(region)
        handle = self.handle(left, left_inv)
        return MultiCurveCensus(sig, puncture, genus, handle)


def random_census(cfg, rng=None):
    """A random census on cfg.sig passing consistency_check

    :param cfg: GenConfig
    :param rng: numpy Generator, seeded from cfg.seed when omitted
    :returns: MultiCurveCensus
    """
    if rng is None:
        rng = make_rng(cfg.seed)
    sampler = Sampler(cfg.sig, cfg.max_count, rng)
    for attempt in range(config.REJECTION_BUDGET):
        census = sampler.census()
        if not census.is_empty:
            return census
        logger.debug("Attempt {}: empty census, drawing again".format(
            attempt + 1))
    raise MulticurveError(
        "Infeasible", "no non-empty census after {} attempts with max_count "
        "{}".format(config.REJECTION_BUDGET, cfg.max_count))


def enumerate_small_vectors(sig, bound):
    """Yields every (vector, signs) with entries in [0, bound] that decodes

    :param sig: SurfaceSig
    :param bound: largest entry
    """
    for values in itertools.product(range(bound + 1), repeat=sig.dimension):
        vector = CoordVector(sig, values)
        if validate_basic(vector):
            continue
        try:
            options = candidate_signs(vector)
        except MulticurveError:
            continue
        for signs in itertools.product(*options):
            signs = TwistSigns(signs)
            try:
                decode(vector, signs)
            except MulticurveError:
                continue
            yield vector, signs


def _failure(seed, stage, detail):
    return {"seed": seed, "stage": stage, "detail": str(detail)}


def run_trial(sig, max_count, seed):
    """One round trip from a census seeded with `seed`

    :returns: failure record or None
    """
    census = random_census(GenConfig(sig, max_count, 1, seed))
    diagnostics = consistency_check(census)
    if diagnostics:
        return _failure(seed, "consistency", diagnostics[0])
    try:
        vector, signs = encode(census)
    except MulticurveError as exc:
        return _failure(seed, "encode", exc)
    try:
        decoded = decode(vector, signs)
    except MulticurveError as exc:
        return _failure(seed, "decode", exc)
    if decoded != census:
        return _failure(seed, "compare", "decoded census differs for {}"
                        .format(vector.values))
    return None


def _run_trial(args):
    return run_trial(*args)


def roundtrip_fuzz(cfg, workers=1):
    """Encode and decode cfg.trials random censuses

    :param cfg: GenConfig
    :param workers: processes to spread the trials over
    :returns: FuzzReport
    """
    seeds = trial_seeds(cfg.seed, cfg.trials)
    jobs = [(cfg.sig, cfg.max_count, seed) for seed in seeds]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(_run_trial, jobs, chunksize=16))
    else:
        results = [_run_trial(job) for job in jobs]
    report = FuzzReport(cfg.trials, [r for r in results if r is not None])
    logger.info("Fuzzed {} censuses on {}: {} failures".format(
        cfg.trials, cfg.sig, len(report.failures)))
    return report
