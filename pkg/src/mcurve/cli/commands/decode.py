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
from mcurve.cli import add_command
from mcurve.cli import read_vector
from mcurve.cli import vector_options
from mcurve.render import render_summary


@add_command("decode")
@vector_options
@click.option("--format", "fmt", type=click.Choice(["json", "text"]),
              default="json", show_default=True)
def decode(punctures, genus, vector, source, signs, fmt):
    """Decode a coordinate vector into its component census
    """
    vector, signs = read_vector(punctures, genus, vector, source, signs)
    census = api.decode_vector(vector, signs)
    if fmt == "text":
        click.echo(render_summary(census))
    else:
        click.echo(api.census_to_json(census))
