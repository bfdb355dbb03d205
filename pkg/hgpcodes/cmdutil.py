# cmdutil.py
#
# Copyright (c) 2026 The hgpcodes developers
#
# Released under the MIT license; see LICENSE.

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_VERIFY = 3
EXIT_NOT_EXACT = 4

class AmbiguousLookup(ValueError):
    pass

class NoMatch(ValueError):
    pass

class UsageError(ValueError):
    pass

def complete(it, lookup, key_desc):
    partial_match = None
    for i in it:
        if i == lookup:
            return i
        if i.startswith(lookup):
            if partial_match is not None:
                matches = sorted(i for i in it if i.startswith(lookup))
                raise AmbiguousLookup('ambiguous %s "%s":' %
                                      (key_desc, lookup), matches)
            partial_match = i
    if partial_match is None:
        raise NoMatch('no such %s "%s".' % (key_desc, lookup))
    else:
        return partial_match

def pprint_table(table):
    widths = [3 + max(len(row[col]) for row in table) for col
              in range(len(table[0]))]
    for row in table:
        # Don't pad the final column
        first_cols = [cell + ' ' * (spacing - len(cell))
                      for (cell, spacing) in zip(row[:-1], widths[:-1])]
        print(''.join(first_cols + [row[-1]]))

def parse_int(value, name, minimum=None):
    """Convert a command-line option to an int or raise UsageError."""
    if value is None:
        raise UsageError('missing required option --%s' % name)
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise UsageError('--%s expects an integer, got %r' % (name, value))
    if minimum is not None and number < minimum:
        raise UsageError('--%s must be at least %d, got %d' %
                         (name, minimum, number))
    return number

def format_histogram(histogram):
    return ' '.join('%s:%s' % (w, c) for (w, c) in sorted(histogram.items()))
