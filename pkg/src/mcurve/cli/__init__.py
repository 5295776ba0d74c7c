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

import logging
import pkgutil

import click

from mcurve import api
from mcurve import config
from mcurve import PRODUCT_NAME
from mcurve import logger
from mcurve.cli import commands
from mcurve.exceptions import MulticurveError

__version__ = "1.0.0"
__date__ = "2026-10-18"

VERBOSITY = {
    0: logging.WARNING,
    1: logging.INFO,
}


def report(error):
    """Writes the diagnostics of an error to stderr
    """
    color = config.get_color_mode()
    for diagnostic in api.to_diagnostics(error):
        click.echo(click.style(str(diagnostic), fg="red"), err=True,
                   color=color)


class MulticurveGroup(click.Group):
    """Command group mapping errors to exit statuses
    """

    def make_context(self, info_name, args, parent=None, **extra):
        try:
            return super(MulticurveGroup, self).make_context(
                info_name, args, parent=parent, **extra)
        except click.UsageError as exc:
            exc.exit_code = config.EXIT_USAGE
            raise

    def invoke(self, ctx):
        try:
            return super(MulticurveGroup, self).invoke(ctx)
        except click.UsageError as exc:
            exc.exit_code = config.EXIT_USAGE
            raise
        except MulticurveError as exc:
            report(exc)
            ctx.exit(exc.status)
        except (click.exceptions.Exit, click.ClickException, click.Abort):
            raise
        except Exception as exc:
            logger.exception("Internal error: {}".format(exc))
            ctx.exit(config.EXIT_INTERNAL)


@click.group(cls=MulticurveGroup)
@click.option("-v", "--verbose", count=True,
              help="Log more (repeat for debug output)")
def cli(verbose):
    """Multicurve coordinates on S_n,g and their component census
    """
    logging.basicConfig(
        level=VERBOSITY.get(verbose, logging.DEBUG),
        format="%(levelname)s %(name)s: %(message)s")


def add_command(name=None):
    """Register a subcommand of the mcurve group
    """
    def wrapper(f):
        return cli.command(name=name)(f)
    return wrapper


def signature_options(f):
    """-n and -g, required
    """
    f = click.option("-g", "genus", type=int, required=True,
                     help="Genus of the surface")(f)
    f = click.option("-n", "punctures", type=int, required=True,
                     help="Number of punctures")(f)
    return f


def vector_options(f):
    """Vector given inline or read from a file, plus optional signs
    """
    f = click.option("--signs", default=None,
                     help="Twist signs, e.g. '+,-,0'")(f)
    f = click.option("--input", "source", type=click.File("r"),
                     default=None, help="Read the vector from PATH or - "
                     "for stdin")(f)
    f = click.option("--vector", default=None,
                     help="Vector text '(α; β; β′; ξ; ξ′; γ; c; c*)' or "
                     "its JSON form")(f)
    f = click.option("-g", "genus", type=int, default=None,
                     help="Genus of the surface")(f)
    f = click.option("-n", "punctures", type=int, default=None,
                     help="Number of punctures")(f)
    return f


def read_vector(punctures, genus, vector, source, signs, resolve=True):
    """(CoordVector, TwistSigns) from the vector options

    With resolve=False the signs stay None unless given explicitly.
    """
    if vector is None and source is None:
        raise click.UsageError("one of --vector or --input is required")
    if vector is not None and source is not None:
        raise click.UsageError("--vector and --input are exclusive")
    text = vector if vector is not None else source.read()
    parsed, embedded = api.get_vector(text, punctures, genus)
    if not resolve and signs is None:
        return parsed, embedded
    return parsed, api.get_signs(parsed, signs, embedded)


prefix = commands.__name__ + "."
for importer, modname, ispkg in pkgutil.iter_modules(
        commands.__path__, prefix):
    module = __import__(modname, fromlist="dummy")
    logger.debug("Registered mcurve command module ---> %s" % module.__name__)


def main():
    cli(prog_name=PRODUCT_NAME)
