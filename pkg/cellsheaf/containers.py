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


from collections import namedtuple

Violation = namedtuple('Violation', ['kind', 'cells', 'message'])


class ValidationReport(namedtuple('ValidationReport', ['ok', 'violations'])):
    __slots__ = ()

    @classmethod
    def from_violations(cls, violations):
        violations = tuple(violations)
        return cls(ok=not violations, violations=violations)

    def merged(self, other):
        return ValidationReport.from_violations(self.violations + other.violations)

    def describe(self):
        return ['{}: {} ({})'.format(v.kind, v.message, ', '.join(v.cells))
                for v in self.violations]


HomologyGroup = namedtuple('HomologyGroup', ['degree', 'dim', 'witnesses'])

Bar = namedtuple('Bar', [
    'left',
    'right',
    'left_closed',
    'right_closed',
    'multiplicity',
])

RoutingSupport = namedtuple('RoutingSupport', [
    'cells',
    'circle',
    'start_closed',
    'end_closed',
])

DualityReport = namedtuple('DualityReport', [
    'vertex_total',
    'edge_total',
    'h0',
    'h1',
    'ok',
])

CorollaryRow = namedtuple('CorollaryRow', ['degree', 'total', 'h0_term', 'h1_term', 'ok'])

PoincareRow = namedtuple('PoincareRow', ['degree', 'cohomology', 'homology', 'ok'])

EvasionVerdict = namedtuple('EvasionVerdict', ['verdict', 'long_bar', 'h0', 'barcode'])

EvasionSet = namedtuple('EvasionSet', ['covector', 'cells', 'components'])

LesNode = namedtuple('LesNode', ['label', 'dim'])

HomologyComparison = namedtuple('HomologyComparison', ['closed', 'derived', 'ok'])
