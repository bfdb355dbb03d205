# cmdline.py
#
# Copyright (c) 2026 The hgpcodes developers
#
# Released under the MIT license; see LICENSE.

"""Hypergraph-product quantum codes.

Usage:
  hgp [options]
  hgp [options] <command> [<args>...]
  hgp --version

where <command> is one of:
  %s

Options:
  -h --help        Show this help message and exit.
  --version        Show program's version number and exit.
  -C <file>, --config=<file>
                   Specify an alternate configuration file
                   [default: ~/.config/hgpcodes/hgpcodes.ini].
  -v, --verbose    Log progress to stderr.

Exit status: 0 success, 1 usage error, 2 unreadable input, 3 failed
verification, 4 distance not exact under --require-exact.
"""
import logging
import os
import sys

from docopt import docopt

from hgpcodes import get_version
from hgpcodes.alist import MatrixFormatError
from hgpcodes.cmdutil import (AmbiguousLookup, NoMatch, EXIT_IO, EXIT_OK,
                              EXIT_USAGE)
from hgpcodes.commands import commands, run_command
from hgpcodes.config import parse_config
from hgpcodes.report import ReportFormatError

log = logging.getLogger(__name__)

def help_text():
    cmds = sorted(set(commands.values()), key=lambda c: c.name)
    cmd_descs = ['%-8s - %s' % (c.name, c.description) for c in cmds]
    return __doc__ % '\n  '.join(cmd_descs)

def parse_args(argv=None):
    return docopt(
        help_text(),
        argv=sys.argv[1:] if argv is None else argv,
        options_first=True,
        version=get_version()
    )

def configure_logging(verbose):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s',
        stream=sys.stderr)

def run_from_cmdline(argv=None):
    args = parse_args(argv)
    configure_logging(args['--verbose'])
    if not args['<command>']:
        print(help_text().strip())
        return EXIT_OK
    config = parse_config(os.path.expanduser(args['--config']))
    cmd, cmd_args = args['<command>'], args['<args>']
    try:
        return run_command(config, cmd, cmd_args)
    except NoMatch as e:
        print(e.args[0], file=sys.stderr)
    except AmbiguousLookup as e:
        print('%s\n    %s' % (e.args[0], ' '.join(e.args[1])),
              file=sys.stderr)
    except (MatrixFormatError, ReportFormatError, OSError) as e:
        print('error: %s' % e, file=sys.stderr)
        return EXIT_IO
    except (ValueError, RuntimeError) as e:
        # UsageError, bad parameters and failed random generation
        print('error: %s' % e, file=sys.stderr)
    return EXIT_USAGE
