# __init__.py
#
# Copyright (c) 2026 The hgpcodes developers
#
# Released under the MIT license; see LICENSE.

__author__ = 'The hgpcodes developers'
__version__ = (0, 1, 0)

def get_version():
    return '.'.join(str(bit) for bit in __version__)
