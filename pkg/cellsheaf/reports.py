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


""" Turn computed results into line oriented reports.  Each builder returns
    a plain dict; `render` prints it through a jinja2 template or the ordered
    YAML dumper.
"""

from collections import namedtuple

import jinja2

from cellsheaf import pretty_yaml
from cellsheaf.barcodes import format_bar
from cellsheaf.formats.serialize import format_bool

TEXT = 'text'
YAML = 'yaml'
FORMATS = (TEXT, YAML)

Report = namedtuple('Report', ['template', 'data'])


class ReportRenderer(object):
    def __init__(self):
        self.jenv = jinja2.Environment(
            loader=jinja2.PackageLoader('cellsheaf', 'templates'),
            trim_blocks=True,
            keep_trailing_newline=True)

        self.jenv.filters['flag'] = format_bool

    def render(self, report, output_format=TEXT):
        if output_format == YAML:
            return pretty_yaml.dump(report.data)
        if output_format != TEXT:
            raise ValueError('Unknown report format `{}`'.format(output_format))

        return self.jenv.get_template(report.template + '.j2').render(**report.data)


_renderer = None


def render(report, output_format=TEXT):
    global _renderer
    if _renderer is None:
        _renderer = ReportRenderer()
    return _renderer.render(report, output_format)


def _group(label, dim):
    return {'label': label, 'dim': dim}


def validation_report(kind, report):
    return Report('validation', {
        'command': 'validate',
        'kind': kind,
        'ok': report.ok,
        'violations': [{'kind': v.kind, 'cells': list(v.cells), 'message': v.message}
                       for v in report.violations],
    })


def groups_report(command, groups, title=None, **extra):
    """ `groups` is a sequence of (label, dimension) pairs """
    data = {'command': command, 'title': title}
    data.update(extra)
    data['groups'] = [_group(label, dim) for (label, dim) in groups]
    return Report('groups', data)


def graded_labels(prefix, dims, homological, compact_suffix=''):
    """ ('H^0_c', 3) style pairs for a degree -> dimension mapping """
    marker = '_' if homological else '^'
    return [('{}{}{}{}'.format(prefix, marker, n, compact_suffix), dims[n])
            for n in sorted(dims)]


def stalks_report(functor, rep):
    return Report('stalks', {
        'command': 'push',
        'functor': functor,
        'kind': rep.kind,
        'stalks': [{'cell': cell, 'dim': rep.stalks[cell]} for cell in rep.complex.cells],
    })


def _bar(bar):
    return {
        'left': bar.left,
        'right': bar.right,
        'left_closed': bar.left_closed,
        'right_closed': bar.right_closed,
        'multiplicity': bar.multiplicity,
        'text': format_bar(bar),
    }


def barcode_report(barcode, verdict=None):
    data = {'command': 'barcode', 'bars': [_bar(bar) for bar in barcode.bars()],
            'long_bar': None, 'verdict': None, 'h0': None}
    if verdict is not None:
        data.update({
            'command': 'sense',
            'verdict': verdict.verdict,
            'h0': verdict.h0,
            'long_bar': format_bar(verdict.long_bar) if verdict.long_bar else None,
        })
    return Report('barcode', data)


def sequence_report(les, forced=None, unknown=None):
    ranks = les.ranks()
    nodes = []
    for (index, node) in enumerate(les.nodes):
        nodes.append({'label': node.label, 'dim': node.dim,
                      'rank': ranks[index] if index < len(ranks) else None})
    return Report('sequence', {'command': 'sense', 'nodes': nodes,
                               'exact': les.is_exact(), 'forced': forced,
                               'unknown': unknown})


def _generator(generator):
    text = '[{}]'.format(generator.cell)
    if generator.mult != 1:
        text += '^{}'.format(generator.mult)
    return text


def complex_report(command, elementary, groups=(), ok=None):
    terms = [{'degree': n, 'generators': [_generator(g) for g in elementary.term(n).generators]}
             for n in elementary.degrees()]
    return Report('complex', {
        'command': command,
        'kind': elementary.kind,
        'homological': elementary.homological,
        'terms': terms,
        'groups': [_group(label, dim) for (label, dim) in groups],
        'ok': ok,
    })


def netcode_report(duality, comparison):
    return Report('netcode', {
        'command': 'netcode',
        'vertex_total': duality.vertex_total,
        'edge_total': duality.edge_total,
        'h0': duality.h0,
        'h1': duality.h1,
        'closed': list(comparison.closed),
        'derived': list(comparison.derived),
        'ok': duality.ok and comparison.ok,
    })


def routing_report(supports):
    return Report('routing', {
        'command': 'netcode',
        'supports': [{'cells': list(s.cells), 'circle': s.circle,
                      'start_closed': s.start_closed, 'end_closed': s.end_closed}
                     for s in supports],
    })


def evasion_report(sets, groups):
    return Report('evasion', {
        'command': 'sense',
        'sets': [{'covector': s.covector, 'cells': list(s.cells), 'components': s.components}
                 for s in sets],
        'groups': [_group(label, dim) for (label, dim) in groups],
    })
