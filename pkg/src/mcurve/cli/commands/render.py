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
from mcurve.cli import add_command
from mcurve.cli import read_vector
from mcurve.cli import vector_options
from mcurve.render import RenderSpec
from mcurve.render import render_summary
from mcurve.render import render_svg


@add_command("render")
@vector_options
@click.option("--census", "census_file", type=click.File("r"), default=None,
              help="Census JSON file, - for stdin")
@click.option("--format", "fmt", type=click.Choice(["svg", "text"]),
              default="svg", show_default=True)
@click.option("--output", type=click.File("w"), default="-",
              show_default=True)
@click.option("--width", type=int, default=config.RENDER_WIDTH,
              show_default=True)
@click.option("--height", type=int, default=config.RENDER_HEIGHT,
              show_default=True)
@click.option("--strand-spacing", type=int,
              default=config.RENDER_STRAND_SPACING, show_default=True)
@click.option("--labels/--no-labels", default=config.RENDER_SHOW_LABELS,
              show_default=True)
def render(punctures, genus, vector, source, signs, census_file, fmt, output,
           width, height, strand_spacing, labels):
    """Draw a census, given as JSON or decoded from a vector
    """
    if census_file is not None:
        census = api.get_census(census_file.read())
    else:
        vector, signs = read_vector(punctures, genus, vector, source, signs)
        census = api.decode_vector(vector, signs)
    if fmt == "text":
        output.write(render_summary(census) + "\n")
        return
    spec = RenderSpec(census, width=width, height=height, show_labels=labels,
                      strand_spacing=strand_spacing)
    output.write(render_svg(spec) + "\n")
