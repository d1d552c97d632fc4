# -*- coding: utf-8 -*-
# Copyright 2026 The cellsheaf Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
#     Unless required by applicable law or agreed to in writing, software
#     distributed under the License is distributed on an "AS IS" BASIS,
#     WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#     See the License for the specific language governing permissions and
#     limitations under the License.


""" Order preserving and cellular maps between cell complexes """

from cellsheaf.containers import ValidationReport, Violation
from cellsheaf.exceptions import NotCellularMap, UnknownCell


class PosetMap(object):
    def __init__(self, source, target, assignment):
        self.source = source
        self.target = target
        self.assignment = dict(assignment)

    def __repr__(self):
        return '{}({} -> {})'.format(type(self).__name__, self.source, self.target)

    def __eq__(self, other):
        return (type(self) is type(other) and
                (self.source, self.target, self.assignment) ==
                (other.source, other.target, other.assignment) and
                getattr(self, 'fiber_compact', None) == getattr(other, 'fiber_compact', None))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.source, self.target))

    def __call__(self, cell):
        try:
            return self.assignment[cell]
        except KeyError:
            raise UnknownCell('Cell `{}` is not in the source of the map'.format(cell))

    def fiber(self, cell):
        return frozenset(x for (x, y) in self.assignment.items() if y == cell)

    def preimage(self, cells):
        cells = frozenset(cells)
        return frozenset(x for (x, y) in self.assignment.items() if y in cells)

    def preimage_up(self, cell):
        """ { x | f(x) >= cell } """
        return self.preimage(self.target.open_star(cell))

    def preimage_down(self, cell):
        """ { x | f(x) <= cell } """
        return self.preimage(self.target.closure(cell))

    def compose(self, first):
        """ self after first """
        return PosetMap(first.source, self.target,
                        {x: self.assignment[y] for (x, y) in first.assignment.items()})

    def validate(self):
        return validate_map(self)


class CellularMap(PosetMap):
    """ A map of posets together with the per-cell fiber compactness flags
        used by the compactly supported pushforward.
    """

    def __init__(self, source, target, assignment, fiber_compact=None):
        super(CellularMap, self).__init__(source, target, assignment)
        self.fiber_compact = {cell: True for cell in self.assignment}
        self.fiber_compact.update(fiber_compact or {})

    @property
    def underlying(self):
        return PosetMap(self.source, self.target, self.assignment)

    def compose(self, first):
        composite = super(CellularMap, self).compose(first)
        flags = {x: getattr(first, 'fiber_compact', {}).get(x, True) and
                 self.fiber_compact[first.assignment[x]]
                 for x in first.assignment}
        return CellularMap(composite.source, composite.target, composite.assignment, flags)


def validate_map(f):
    violations = []

    for x in f.source.cells:
        if x not in f.assignment:
            violations.append(Violation('assignment', (x,), 'cell {} has no image'.format(x)))
        elif f.assignment[x] not in f.target:
            violations.append(Violation(
                'assignment', (x, f.assignment[x]),
                'cell {} maps to unknown cell {}'.format(x, f.assignment[x])))
    if violations:
        return ValidationReport.from_violations(violations)

    # covers suffice: the order is their transitive closure
    for (low, high) in f.source.covers:
        if not f.target.leq(f(low), f(high)):
            violations.append(Violation(
                'order', (low, high),
                '{} <= {} but {} is not below {}'.format(low, high, f(low), f(high))))

    if isinstance(f, CellularMap):
        for x in f.source.cells:
            if f.target.dim(f(x)) > f.source.dim(x):
                violations.append(Violation(
                    'dimension', (x, f(x)),
                    '{} of dimension {} maps to {} of dimension {}'.format(
                        x, f.source.dim(x), f(x), f.target.dim(f(x)))))

    return ValidationReport.from_violations(violations)


def require_cellular(f):
    if not isinstance(f, CellularMap):
        raise NotCellularMap('a cellular map with fiber compactness flags is required')
    report = validate_map(f)
    if not report.ok:
        raise NotCellularMap('; '.join(report.describe()))
    return f


def identity_map(complex_):
    return CellularMap(complex_, complex_, {cell: cell for cell in complex_.cells})


def constant_map(complex_, target, cell):
    """ Collapse every cell onto `cell`.  Fiber compactness follows the
        compactness of each source cell.
    """
    return CellularMap(complex_, target, {x: cell for x in complex_.cells},
                       {x: complex_.is_compact(x) for x in complex_.cells})
