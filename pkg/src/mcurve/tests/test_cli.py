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

from click.testing import CliRunner

from mcurve import config
from mcurve.cli import __version__
from mcurve.cli import cli
from mcurve.coordinates import serialize_vector
from mcurve.generator import enumerate_small_vectors
from mcurve.surface import SurfaceSig

from .base import EXAMPLE_SIGNS
from .base import EXAMPLE_TEXT
from .base import BaseTestCase

EXAMPLE_ARGS = ["-n", "3", "-g", "3", "--vector", EXAMPLE_TEXT,
                "--signs", EXAMPLE_SIGNS]


class TestCLI(BaseTestCase):
    """ mcurve command line
    """

    def setUp(self):
        super(TestCLI, self).setUp()
        self.runner = CliRunner()

    def invoke(self, *args, **kw):
        return self.runner.invoke(cli, list(args), **kw)

    def test_decode(self):
        result = self.invoke("decode", *EXAMPLE_ARGS)
        self.assertEqual(result.exit_code, 0, result.output)
        data = json.loads(result.output)
        self.assertEqual((data["n"], data["g"]), (3, 3))
        self.assertEqual(data["regions"][4]["twist"],
                         {"total": -4, "m": 1, "t": 1, "base": 2})

    def test_decode_text(self):
        result = self.invoke("decode", "--format", "text", *EXAMPLE_ARGS)
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertTrue(result.output.startswith(
            "census on S_3,3: 38 components\n"))

    def test_decode_json_vector(self):
        text = json.dumps(self.vector.to_dict(self.signs))
        result = self.invoke("decode", "--vector", text)
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(len(json.loads(result.output)["regions"]), 6)

    def test_decode_from_stdin(self):
        result = self.invoke("decode", "-n", "3", "-g", "3", "--input", "-",
                             "--signs", EXAMPLE_SIGNS, input=EXAMPLE_TEXT)
        self.assertEqual(result.exit_code, 0, result.output)

    def test_round_trip(self):
        decoded = self.invoke("decode", *EXAMPLE_ARGS)
        encoded = self.invoke("encode", input=decoded.output)
        self.assertEqual(encoded.exit_code, 0, encoded.output)
        self.assertEqual(encoded.output, "{}\n{}\n".format(
            serialize_vector(self.vector), EXAMPLE_SIGNS))

    def test_encode_json(self):
        decoded = self.invoke("decode", *EXAMPLE_ARGS)
        encoded = self.invoke("encode", "--format", "json",
                              input=decoded.output)
        data = json.loads(encoded.output)
        self.assertEqual(data["signs"], [1, -1, 0])
        self.assertEqual(data["beta"], [8, 6, 4, 6, 7, 2])

    def test_encode_bad_census(self):
        result = self.invoke("encode", input="{\"n\": 1}")
        self.assertEqual(result.exit_code, config.EXIT_INVALID)
        self.assertIn("BadCensus", result.output)

    def test_validate(self):
        result = self.invoke("validate", *EXAMPLE_ARGS)
        self.assertEqual(result.exit_code, 0, result.output)
        result = self.invoke("validate", "--full", *EXAMPLE_ARGS)
        self.assertEqual(result.exit_code, 0, result.output)

    def test_validate_default_signs(self):
        result = self.invoke("validate", "--full", "-n", "3", "-g", "3",
                             "--vector", EXAMPLE_TEXT)
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("[DefaultSigns] signs", result.output)
        self.assertIn("+,+,0", result.output)

    def test_validate_zero(self):
        result = self.invoke("validate", "-n", "1", "-g", "1", "--vector",
                             "(0,0; 0,0; 0; 0)")
        self.assertEqual(result.exit_code, config.EXIT_INVALID)
        self.assertIn("ZeroVector", result.output)

    def test_validate_unrealizable(self):
        result = self.invoke("validate", "--full", "-n", "3", "-g", "3",
                             "--vector", EXAMPLE_TEXT, "--signs", "0,-,0")
        self.assertEqual(result.exit_code, config.EXIT_UNREALIZABLE)
        self.assertIn("SignMissing", result.output)

    def test_usage_errors(self):
        result = self.invoke("decode", "--bogus")
        self.assertEqual(result.exit_code, config.EXIT_USAGE)
        result = self.invoke("fuzz", "-n", "1")
        self.assertEqual(result.exit_code, config.EXIT_USAGE)
        result = self.invoke("decode", "-n", "1", "-g", "1")
        self.assertEqual(result.exit_code, config.EXIT_USAGE)
        result = self.invoke("frobnicate")
        self.assertEqual(result.exit_code, config.EXIT_USAGE)

    def test_text_vector_needs_signature(self):
        result = self.invoke("decode", "--vector", EXAMPLE_TEXT)
        self.assertEqual(result.exit_code, config.EXIT_INVALID)
        self.assertIn("InvalidSignature", result.output)

    def test_fuzz(self):
        result = self.invoke("fuzz", "-n", "3", "-g", "3", "--trials", "100",
                             "--seed", "42")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(json.loads(result.output),
                         {"trials": 100, "failures": []})

    def test_fuzz_invalid_config(self):
        result = self.invoke("fuzz", "-n", "1", "-g", "1", "--seed", "-1")
        self.assertEqual(result.exit_code, config.EXIT_INVALID)

    def test_enumerate(self):
        sig = SurfaceSig(1, 1)
        expected = len(list(enumerate_small_vectors(sig, 1)))
        result = self.invoke("enumerate", "-n", "1", "-g", "1", "--bound",
                             "1", "--count-only")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(int(result.output), expected)
        result = self.invoke("enumerate", "-n", "1", "-g", "1", "--bound", "1")
        lines = result.output.splitlines()
        self.assertEqual(len(lines), expected)
        self.assertEqual(json.loads(lines[0])["n"], 1)

    def test_render(self):
        result = self.invoke("render", *EXAMPLE_ARGS)
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("<svg", result.output)
        self.assertIn('id="region-GStar"', result.output)
        result = self.invoke("render", "--format", "text", *EXAMPLE_ARGS)
        self.assertEqual(len(result.output.splitlines()), 7)

    def test_render_census(self):
        decoded = self.invoke("decode", *EXAMPLE_ARGS)
        result = self.invoke("render", "--census", "-", "--no-labels",
                             input=decoded.output)
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertNotIn("<text", result.output)

    def test_version(self):
        result = self.invoke("version")
        self.assertEqual(result.exit_code, 0)
        self.assertIn(__version__, result.output)
