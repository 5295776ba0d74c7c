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

import click

from mcurve import api
from mcurve import config
from mcurve import underscore as u
from mcurve.cli import add_command
from mcurve.cli import signature_options
from mcurve.generator import GenConfig
from mcurve.generator import roundtrip_fuzz


@add_command("fuzz")
@signature_options
@click.option("--trials", type=int, default=500, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--max-count", type=int, default=config.DEFAULT_MAX_COUNT,
              show_default=True, help="Upper bound for drawn counts")
@click.option("--workers", type=click.IntRange(min=1), default=1,
              show_default=True, help="Worker processes")
@click.pass_context
def fuzz(ctx, punctures, genus, trials, seed, max_count, workers):
    """Round trip random censuses through encode and decode
    """
    cfg = GenConfig(api.get_signature(punctures, genus), max_count, trials,
                    seed)
    report = roundtrip_fuzz(cfg, workers=workers)
    click.echo(u.to_json(report.to_dict()))
    if report.failures:
        ctx.exit(config.EXIT_INTERNAL)
