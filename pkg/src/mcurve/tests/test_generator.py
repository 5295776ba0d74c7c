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
from mcurve.census import HandleCensus
from mcurve.decoder import decode
from mcurve.encoder import consistency_check
from mcurve.encoder import encode
from mcurve.generator import GenConfig
from mcurve.generator import enumerate_small_vectors
from mcurve.generator import make_rng
from mcurve.generator import random_census
from mcurve.generator import roundtrip_fuzz
from mcurve.generator import run_trial
from mcurve.generator import trial_seeds
from mcurve.surface import SurfaceSig

from .base import FUZZ_SIGS
from .base import BaseTestCase


def invariant_problems(census):
    """Structural rules every generated or decoded census keeps
    """
    problems = []
    for region in census.genus:
        if region.upper_diag and region.lower_diag:
            problems.append("both diagonal types in {}".format(
                region.region_id))
        if region.c_curves and (region.c or region.twist_total):
            problems.append("c curves next to crossings in {}".format(
                region.region_id))
        dist = region.twist_dist
        if dist.total != abs(region.twist_total):
            problems.append("twist sum in {}".format(region.region_id))
        if dist.count != region.c - region.diagonals:
            problems.append("twist count in {}".format(region.region_id))
        if region.diagonals and \
                region.c != region.diagonals + abs(region.twist_total):
            problems.append("diagonal budget in {}".format(region.region_id))
    return problems


class TestGenConfig(BaseTestCase):
    """ Generator settings
    """

    def test_defaults(self):
        cfg = GenConfig(self.sig)
        self.assertEqual(cfg.max_count, config.DEFAULT_MAX_COUNT)
        self.assertEqual((cfg.trials, cfg.seed), (1, 0))

    def test_invalid(self):
        self.assertCode("InvalidConfig", GenConfig, self.sig, max_count=-1)
        self.assertCode("InvalidConfig", GenConfig, self.sig, trials=0)
        self.assertCode("InvalidConfig", GenConfig, self.sig, seed=-1)
        self.assertCode("InvalidConfig", GenConfig, self.sig, seed=2 ** 64)


class TestRandomCensus(BaseTestCase):
    """ Random censuses
    """

    def test_consistent(self):
        rng = make_rng(11)
        for n, g in FUZZ_SIGS:
            cfg = GenConfig(SurfaceSig(n, g))
            for _ in range(50):
                census = random_census(cfg, rng)
                self.assertEqual(consistency_check(census), [])
                self.assertFalse(census.is_empty)
                self.assertEqual(invariant_problems(census), [])

    def test_deterministic(self):
        cfg = GenConfig(self.sig, seed=5)
        self.assertEqual(random_census(cfg), random_census(cfg))
        self.assertEqual(trial_seeds(3, 10), trial_seeds(3, 10))
        self.assertNotEqual(trial_seeds(3, 10), trial_seeds(4, 10))

    def test_infeasible(self):
        cfg = GenConfig(SurfaceSig(1, 1), max_count=0)
        self.assertCode("Infeasible", random_census, cfg)

    def test_single_trial(self):
        self.assertIsNone(run_trial(self.sig, 3, 123))


class TestRoundTripFuzz(BaseTestCase):
    """ encode/decode round trips over many random censuses
    """

    def test_fuzz(self):
        for n, g in FUZZ_SIGS:
            for seed in (1, 2, 3):
                cfg = GenConfig(SurfaceSig(n, g), trials=500, seed=seed)
                report = roundtrip_fuzz(cfg)
                self.assertEqual(report.failures, [],
                                 "S_{},{} seed {}".format(n, g, seed))
                self.assertEqual(report.trials, 500)

    def test_workers_agree(self):
        cfg = GenConfig(SurfaceSig(2, 2), trials=40, seed=9)
        self.assertEqual(roundtrip_fuzz(cfg, workers=2).to_dict(),
                         roundtrip_fuzz(cfg).to_dict())


class TestEnumerate(BaseTestCase):
    """ Exhaustive small vectors
    """

    def check(self, sig, bound):
        accepted = list(enumerate_small_vectors(sig, bound))
        self.assertTrue(accepted)
        for vector, signs in accepted:
            census = decode(vector, signs)
            self.assertEqual(consistency_check(census), [])
            self.assertEqual(invariant_problems(census), [])
            self.assertEqual(encode(census), (vector, signs))
        return accepted

    def test_one_puncture_genus_one(self):
        accepted = self.check(SurfaceSig(1, 1), 3)
        for vector, signs in accepted:
            self.assertTrue(max(vector.values) <= 3)
            self.assertFalse(vector.is_zero)

    def test_two_punctures_genus_one(self):
        self.check(SurfaceSig(2, 1), 2)

    def test_bound_zero(self):
        self.assertEqual(list(enumerate_small_vectors(SurfaceSig(1, 1), 0)),
                         [])

    def test_single_c_star_curve(self):
        vectors = [vector.values for vector, signs in
                   enumerate_small_vectors(SurfaceSig(1, 1), 1)]
        # one curve parallel to c*
        self.assertIn((0, 0, 0, 0, 1, 0), vectors)
        census = decode(*next(
            (v, s) for v, s in enumerate_small_vectors(SurfaceSig(1, 1), 1)
            if v.values == (0, 0, 0, 0, 1, 0)))
        self.assertEqual(census.handle, HandleCensus(c_star_curves=1))
