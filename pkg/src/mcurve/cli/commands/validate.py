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
from mcurve.coordinates import serialize_vector


@add_command("validate")
@vector_options
@click.option("--full", is_flag=True,
              help="Also decode with the given or default signs")
def validate(punctures, genus, vector, source, signs, full):
    """Check a vector, exit 0 iff no errors were found
    """
    vector, signs = read_vector(punctures, genus, vector, source, signs,
                                resolve=False)
    diagnostics = api.validate(vector, signs, full=full)
    # the group reports every diagnostic of the raised error, warnings too
    diagnostics.raise_for_errors()
    for warning in diagnostics.warnings:
        click.echo(str(warning), err=True)
    click.echo("{} is valid on {}".format(serialize_vector(vector),
                                          vector.sig))
