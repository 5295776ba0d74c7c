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
from mcurve import underscore as u
from mcurve.cli import add_command
from mcurve.cli import signature_options
from mcurve.generator import enumerate_small_vectors


@add_command("enumerate")
@signature_options
@click.option("--bound", type=click.IntRange(min=0), required=True,
              help="Largest vector entry")
@click.option("--count-only", is_flag=True,
              help="Print the number of decodable vectors only")
def enumerate_(punctures, genus, bound, count_only):
    """List every decodable vector with entries up to BOUND, one JSON per line
    """
    sig = api.get_signature(punctures, genus)
    count = 0
    for vector, signs in enumerate_small_vectors(sig, bound):
        count += 1
        if not count_only:
            click.echo(u.to_json(vector.to_dict(signs), indent=None))
    if count_only:
        click.echo(count)
