# store.py
#
# Copyright (c) 2026 The hgpcodes developers
#
# Released under the MIT license; see LICENSE.

"""A code directory: check matrices as alist files plus a JSON report."""
import json
import logging
import os

from hgpcodes import alist, css, hypergraph
from hgpcodes import report as report_mod

log = logging.getLogger(__name__)

MATRICES = ('h_x', 'h_z', 'h1', 'h2')
REPORT = 'report.json'

class CodeDirectory(object):
    def __init__(self, path):
        self.path = path

    def file(self, name):
        return os.path.join(self.path, name)

    def _alist(self, name):
        return self.file(name + '.alist')

    def create(self):
        os.makedirs(self.path, exist_ok=True)

    def save_code(self, code, factors=None):
        self.create()
        alist.write_alist(self._alist('h_x'), code.h_x)
        alist.write_alist(self._alist('h_z'), code.h_z)
        if factors is not None:
            h1, h2 = factors
            alist.write_alist(self._alist('h1'), h1)
            alist.write_alist(self._alist('h2'), h2)

    def load_matrices(self):
        """H_X and H_Z as stored, without checking orthogonality."""
        return (alist.read_alist(self._alist('h_x')),
                alist.read_alist(self._alist('h_z')))

    def load_code(self):
        return css.new_css(*self.load_matrices())

    def has_factors(self):
        return all(os.path.exists(self._alist(n)) for n in ('h1', 'h2'))

    def load_factors(self):
        if not self.has_factors():
            return None
        return (alist.read_alist(self._alist('h1')),
                alist.read_alist(self._alist('h2')))

    def load_product(self):
        """The product the code was built from, or None without factors."""
        factors = self.load_factors()
        if factors is None:
            log.warning('%s has no h1/h2 factors', self.path)
            return None
        h1, h2 = factors
        return hypergraph.product(hypergraph.from_incidence(h1),
                                  hypergraph.from_incidence(h2))

    def save_report(self, report):
        self.create()
        with open(self.file(REPORT), 'w', encoding='utf-8') as f:
            f.write(report_mod.to_json(report))

    def load_report(self):
        path = self.file(REPORT)
        if not os.path.exists(path):
            return None
        try:
            with open(path, encoding='utf-8') as f:
                text = f.read()
        except UnicodeDecodeError as e:
            raise report_mod.ReportFormatError('%s: not a text file: %s' %
                                               (path, e))
        return report_mod.from_json(text)

    def matrices(self):
        """Stored matrices by name, factors included when present."""
        names = MATRICES if self.has_factors() else MATRICES[:2]
        return [(n, alist.read_alist(self._alist(n))) for n in names]

    def export(self, fmt, dest=None):
        """Write every stored matrix to ``dest`` as alist or JSON files."""
        dest = dest or self.path
        os.makedirs(dest, exist_ok=True)
        written = []
        for name, m in self.matrices():
            if fmt == 'alist':
                path = os.path.join(dest, name + '.alist')
                alist.write_alist(path, m)
            elif fmt == 'json':
                path = os.path.join(dest, name + '.json')
                with open(path, 'w') as f:
                    json.dump(alist.matrix_to_json(m), f, sort_keys=True)
                    f.write('\n')
            else:
                raise ValueError('unknown export format %r' % (fmt,))
            written.append(path)
        return written

    def __repr__(self):
        return 'CodeDirectory(%r)' % self.path
