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



""" Writes core objects back out in the document grammar.  Records come out
    in basis order, so equal objects serialize to identical text.
"""

from cellsheaf import FORMAT_VERSION
from cellsheaf.applications.netcode import CodedGraph
from cellsheaf.applications.sensing import SensorNerve
from cellsheaf.sheaves.base import CellularRepresentation
from cellsheaf.topology.cells import CellComplex
from cellsheaf.topology.maps import CellularMap, PosetMap


def format_rows(matrix):
    return '[{}]'.format(', '.join(
        '[{}]'.format(', '.join(row)) for row in matrix.to_text_rows()))


def format_bool(value):
    return 'true' if value else 'false'


def _header(kind, field=None):
    lines = ['kind {}'.format(kind), 'format {}'.format(FORMAT_VERSION)]
    if field is not None:
        lines.append('field {}'.format(field.tag))
    return lines


def _complex_lines(complex_):
    lines = ['cell {} dim={} compact={}'.format(
        cell, complex_.dims[cell], format_bool(complex_.compact[cell]))
        for cell in complex_.cells]
    lines.extend('cover {} {} sign={}'.format(face, coface, complex_.sign(face, coface))
                 for (face, coface) in complex_.covers)
    return lines


def _representation_lines(rep):
    lines = _complex_lines(rep.complex)
    lines.extend('stalk {} {}'.format(cell, rep.stalks[cell]) for cell in rep.complex.cells)
    for pair in rep.complex.covers:
        matrix = rep.maps[pair]
        if matrix.rows and matrix.cols and not matrix.is_zero():
            lines.append('map {} {} rows={}'.format(pair[0], pair[1], format_rows(matrix)))
    return lines


def _map_lines(f):
    lines = ['begin source'] + _complex_lines(f.source) + ['end source']
    lines += ['begin target'] + _complex_lines(f.target) + ['end target']
    cellular = isinstance(f, CellularMap)
    lines.append('cellular {}'.format(format_bool(cellular)))
    for cell in f.source.cells:
        line = 'assign {} {}'.format(cell, f.assignment[cell])
        if cellular and not f.fiber_compact[cell]:
            line += ' fiber_compact=false'
        lines.append(line)
    return lines


def _nerve_lines(nerve):
    complex_ = nerve.complex
    lines = ['ambient {}'.format(nerve.ambient)]
    for cell in complex_.sort_cells(complex_.poset.maximal_elements()):
        lines.append('simplex {}'.format(' '.join(complex_.vertices(cell))))
    for vertex in complex_.cells_of_dim(0):
        space = nerve.sensors[vertex]
        if space.dim:
            lines.append('sensor {} covectors={}'.format(
                vertex, format_rows(space.basis.transpose())))
    return lines


def _graph_lines(graph):
    lines = []
    for vertex in sorted(graph.vertices):
        extra = graph.vertices[vertex]
        lines.append('vertex {}'.format(vertex) + (' capacity={}'.format(extra) if extra else ''))
    for edge in sorted(graph.edges):
        (tail, head) = graph.edges[edge]
        line = 'edge {} {} {}'.format(edge, tail or '-', head or '-')
        if graph.capacities[edge] != 1:
            line += ' capacity={}'.format(graph.capacities[edge])
        lines.append(line)
    for vertex in sorted(graph.codings):
        lines.append('coding {} rows={}'.format(vertex, format_rows(graph.codings[vertex])))
    return lines


def serialize(obj, field=None):
    """ :param field: written as the document's field line when given;
            sheaves, nerves and graphs default to their own field
    """
    if isinstance(obj, CellularRepresentation):
        lines = _header(obj.kind, field or obj.field) + _representation_lines(obj)
    elif isinstance(obj, CellComplex):
        lines = _header('complex', field) + _complex_lines(obj)
    elif isinstance(obj, PosetMap):
        lines = _header('map', field) + _map_lines(obj)
    elif isinstance(obj, SensorNerve):
        lines = _header('nerve', field or obj.field) + _nerve_lines(obj)
    elif isinstance(obj, CodedGraph):
        lines = _header('graph', field or obj.field) + _graph_lines(obj)
    else:
        raise TypeError('cannot serialize {}'.format(type(obj).__name__))

    return '\n'.join(lines) + '\n'
