# config.py
#
# Copyright (c) 2026 The hgpcodes developers
#
# Released under the MIT license; see LICENSE.

from configparser import ConfigParser

import logging
import os

from hgpcodes.css import SearchBudget

log = logging.getLogger(__name__)

BUDGET_KEYS = ('full_enum_dim', 'max_weight', 'max_candidates', 'threads')

class CustomConfigParser(ConfigParser):
    def __getitem__(self, name):
        return dict(self.items(name))

def parse_config(filename):
    config = CustomConfigParser()
    directory = os.path.dirname(filename)
    if directory and not os.path.exists(directory):
        os.makedirs(directory)
    if not os.path.exists(filename):
        with open(filename, 'w') as f:
            f.write('# hgpcodes configuration file\n')
    with open(filename) as f:
        config.read_file(f)
    return config

def budget_from_config(config, **overrides):
    """Search budget from the ``[budget]`` section; overrides win.

    Overrides that are None are ignored, so unset command-line flags fall
    back to the file and then to the defaults.
    """
    values = {}
    if config is not None and config.has_section('budget'):
        for key, value in config['budget'].items():
            if key not in BUDGET_KEYS:
                log.warning('ignoring unknown budget setting %r', key)
                continue
            values[key] = int(value)
    for key, value in overrides.items():
        if key not in BUDGET_KEYS:
            raise TypeError('unknown budget setting %r' % key)
        if value is not None:
            values[key] = int(value)
    return SearchBudget(**values)
